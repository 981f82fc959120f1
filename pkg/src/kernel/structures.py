"""
Structures and sequents of the display calculus.

    ^o(X, ^dia(Y)) |- Z          rule schema
    ^o(box(o(dia(p), p)), ^dia(p)) |- p

A structure is a formula leaf, a structural connective `^f` (F-sort) or
`!g` (G-sort) applied to structures, a parameter `#N1` standing for an
uninstantiable contract variable, or a metavariable (rule schemas only).
Positions are `(side, path)` with side 0 for the antecedent, 1 for the
succedent and 0-based child indexes along the path.
"""
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple, Union

from dto import Family, Polarity, Sort
from errors import KernelError
from signature import Signature
from syntax import Atom, Bot, Conn, Formula, Top, print_formula

STRUCT_TOP = "top"
STRUCT_BOT = "bot"


@dataclass(frozen=True)
class FormulaLeaf:
    formula: Formula


@dataclass(frozen=True)
class StructConn:
    name: str
    family: Family
    args: Tuple["Structure", ...] = ()


@dataclass(frozen=True)
class Param:
    ident: str
    sort: Sort


@dataclass(frozen=True)
class MetaVar:
    name: str
    sort: Sort


Structure = Union[FormulaLeaf, StructConn, Param, MetaVar]
Path = Tuple[int, ...]
Position = Tuple[int, Path]

ANTE = 0
SUCC = 1


@dataclass(frozen=True)
class Sequent:
    ante: Structure
    succ: Structure

    def side(self, which: int) -> Structure:
        return self.ante if which == ANTE else self.succ

    def with_side(self, which: int, value: Structure) -> "Sequent":
        return Sequent(value, self.succ) if which == ANTE else Sequent(self.ante, value)


def hat(name: str, *args: Structure) -> StructConn:
    return StructConn(name, Family.F, tuple(args))


def check(name: str, *args: Structure) -> StructConn:
    return StructConn(name, Family.G, tuple(args))


def intrinsic_sort(s: Structure) -> Optional[Sort]:
    """Sort fixed by the structure itself; formula leaves fit either side."""
    if isinstance(s, StructConn):
        return Sort.of(s.family)
    if isinstance(s, (Param, MetaVar)):
        return s.sort
    return None


def side_sort(which: int) -> Sort:
    return Sort.F if which == ANTE else Sort.G


def child_sort(sig: Signature, s: StructConn, k: int) -> Sort:
    """Sort of the 0-based argument k of a structural connective."""
    spec = sig.get(s.name)
    base = Sort.of(spec.family)
    return base if spec.polarity(k + 1) is Polarity.ONE else base.flip()


def position_sort(seq: Sequent, pos: Position, sig: Signature) -> Sort:
    """Sort of the position itself: F for precedent parts, G for succedent parts."""
    side, path = pos
    sort = side_sort(side)
    s = seq.side(side)
    for k in path:
        sort = child_sort(sig, s, k)
        s = s.args[k]
    return sort


# ────────────────────────────────────────────────────────────────────────────
# Traversal
# ────────────────────────────────────────────────────────────────────────────

def struct_children(s: Structure) -> Tuple[Structure, ...]:
    return s.args if isinstance(s, StructConn) else ()


def substructure(s: Structure, path: Path) -> Structure:
    for i in path:
        if not isinstance(s, StructConn) or i >= len(s.args):
            raise KernelError(f"Path {list(path)} does not address a substructure")
        s = s.args[i]
    return s


def replace_sub(s: Structure, path: Path, new: Structure) -> Structure:
    if not path:
        return new
    if not isinstance(s, StructConn) or path[0] >= len(s.args):
        raise KernelError(f"Path {list(path)} does not address a substructure")
    args = list(s.args)
    args[path[0]] = replace_sub(args[path[0]], path[1:], new)
    return StructConn(s.name, s.family, tuple(args))


def at_position(seq: Sequent, pos: Position) -> Structure:
    side, path = pos
    return substructure(seq.side(side), path)


def replace_at_position(seq: Sequent, pos: Position, new: Structure) -> Sequent:
    side, path = pos
    return seq.with_side(side, replace_sub(seq.side(side), path, new))


def positions(s: Structure, prefix: Path = ()) -> Iterator[Tuple[Path, Structure]]:
    """Pre-order `(path, substructure)` pairs."""
    yield prefix, s
    for i, child in enumerate(struct_children(s)):
        yield from positions(child, prefix + (i,))


def sequent_positions(seq: Sequent) -> Iterator[Tuple[Position, Structure]]:
    for side in (ANTE, SUCC):
        for path, sub in positions(seq.side(side)):
            yield (side, path), sub


def metavars(s: Structure) -> List[MetaVar]:
    return [sub for _, sub in positions(s) if isinstance(sub, MetaVar)]


def sequent_metavars(seq: Sequent) -> List[MetaVar]:
    return metavars(seq.ante) + metavars(seq.succ)


def params(s: Structure) -> List[Param]:
    return [sub for _, sub in positions(s) if isinstance(sub, Param)]


def sequent_params(seq: Sequent) -> List[Param]:
    return params(seq.ante) + params(seq.succ)


def occurrences(seq: Sequent, target: Structure) -> List[Position]:
    return [pos for pos, sub in sequent_positions(seq) if sub == target]


def structure_diff(old: Structure, new: Structure, prefix: Path = ()) -> List[Path]:
    """Maximal paths at which `old` and `new` differ."""
    if old == new:
        return []
    if (
        isinstance(old, StructConn) and isinstance(new, StructConn)
        and old.name == new.name and len(old.args) == len(new.args)
    ):
        found: List[Path] = []
        for i, (a, b) in enumerate(zip(old.args, new.args)):
            found += structure_diff(a, b, prefix + (i,))
        return found
    return [prefix]


def map_metavars(s: Structure, mapping: Dict[str, Structure]) -> Structure:
    if isinstance(s, MetaVar):
        return mapping.get(s.name, s)
    if isinstance(s, StructConn):
        return StructConn(s.name, s.family, tuple(map_metavars(a, mapping) for a in s.args))
    return s


def rename_params(s: Structure, mapping: Dict[str, str]) -> Structure:
    if isinstance(s, Param):
        return Param(mapping.get(s.ident, s.ident), s.sort)
    if isinstance(s, StructConn):
        return StructConn(s.name, s.family, tuple(rename_params(a, mapping) for a in s.args))
    return s


# ────────────────────────────────────────────────────────────────────────────
# Sorts
# ────────────────────────────────────────────────────────────────────────────

def sort_errors(seq: Sequent, sig: Signature) -> List[str]:
    """Sort-discipline violations, empty when the sequent is well sorted."""
    errors: List[str] = []

    def visit(s: Structure, expected: Sort, where: str) -> None:
        actual = intrinsic_sort(s)
        if actual is not None and actual is not expected:
            errors.append(f"{where}: {print_structure(s)} has sort {actual.value}, position wants {expected.value}")
        if isinstance(s, StructConn):
            if s.name in (STRUCT_TOP, STRUCT_BOT):
                if s.args:
                    errors.append(f"{where}: structural constant {s.name} takes no arguments")
                if s.family is not (Family.F if s.name == STRUCT_TOP else Family.G):
                    errors.append(f"{where}: only ^top and !bot are structural constants")
                return
            if s.name not in sig:
                errors.append(f"{where}: unknown structural connective '{s.name}'")
                return
            spec = sig.get(s.name)
            if spec.family is not s.family:
                marker = "^" if spec.family is Family.F else "!"
                errors.append(f"{where}: '{s.name}' must be written {marker}{s.name}")
                return
            if spec.arity != len(s.args):
                errors.append(f"{where}: '{s.name}' expects {spec.arity} argument(s), got {len(s.args)}")
                return
            for k, child in enumerate(s.args):
                visit(child, child_sort(sig, s, k), f"{where}.{k}")

    visit(seq.ante, Sort.F, "ante")
    visit(seq.succ, Sort.G, "succ")
    return errors


def assign_structure_sorts(s: Structure, expected: Sort, sig: Signature) -> Structure:
    """Give metavariables and parameters the sort of the position they occupy."""
    if isinstance(s, MetaVar):
        return MetaVar(s.name, expected)
    if isinstance(s, Param):
        return Param(s.ident, expected)
    if isinstance(s, StructConn) and s.name in sig and sig.get(s.name).arity == len(s.args):
        return StructConn(
            s.name, s.family,
            tuple(assign_structure_sorts(c, child_sort(sig, s, k), sig) for k, c in enumerate(s.args)),
        )
    return s


def assign_sorts(seq: Sequent, sig: Signature) -> Sequent:
    return Sequent(assign_structure_sorts(seq.ante, Sort.F, sig), assign_structure_sorts(seq.succ, Sort.G, sig))


# ────────────────────────────────────────────────────────────────────────────
# Printing
# ────────────────────────────────────────────────────────────────────────────

def print_structure(s: Structure) -> str:
    if isinstance(s, FormulaLeaf):
        return print_formula(s.formula)
    if isinstance(s, Param):
        return f"#{s.ident}"
    if isinstance(s, MetaVar):
        return s.name
    marker = "^" if s.family is Family.F else "!"
    if not s.args:
        return f"{marker}{s.name}"
    return f"{marker}{s.name}({', '.join(print_structure(a) for a in s.args)})"


def print_sequent(seq: Sequent) -> str:
    return f"{print_structure(seq.ante)} |- {print_structure(seq.succ)}"


# ────────────────────────────────────────────────────────────────────────────
# Reading structures as formulas
# ────────────────────────────────────────────────────────────────────────────

def structure_formula(s: Structure) -> Formula:
    """
    Formula a structure stands for: structural connectives become their
    logical counterparts and parameters become atoms named after them.
    """
    if isinstance(s, FormulaLeaf):
        return s.formula
    if isinstance(s, Param):
        return Atom(f"param_{s.ident.lower()}")
    if isinstance(s, MetaVar):
        raise KernelError(f"Metavariable {s.name} has no formula reading")
    if s.name == STRUCT_TOP:
        return Top()
    if s.name == STRUCT_BOT:
        return Bot()
    return Conn(s.name, tuple(structure_formula(a) for a in s.args))

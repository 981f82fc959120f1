"""
Nested quantified quasi-inequalities, the output language of ALBA.

    forall [i0 | m0] (i0 <= box(n), forall [k | ] (k <= m0 => dia(k) <= n) => i0 <= m0)

Antecedent inequalities come before antecedent clauses when printed; the
parser accepts them in any order and keeps each group's relative order.
"""
import itertools
from dataclasses import dataclass, replace
from typing import Callable, Dict, Iterator, List, Tuple, Union

from signature import Signature
from syntax import (
    Atom, Conominal, Formula, FormulaBuilder, Inequality, Nominal, map_leaves,
    print_inequality, run_parser, variables,
)
from syntax.formulas import VARIABLE_TYPES


@dataclass(frozen=True)
class Clause:
    nominals: Tuple[str, ...]
    conominals: Tuple[str, ...]
    antecedent_ineqs: Tuple[Inequality, ...]
    antecedent_clauses: Tuple["Clause", ...]
    consequent: Inequality

    @property
    def bound(self) -> Tuple[str, ...]:
        return self.nominals + self.conominals

    def inequalities(self) -> Iterator[Inequality]:
        """Every inequality of the clause tree, pre-order."""
        yield from self.antecedent_ineqs
        for sub in self.antecedent_clauses:
            yield from sub.inequalities()
        yield self.consequent

    def nesting(self) -> int:
        return max((1 + c.nesting() for c in self.antecedent_clauses), default=0)

    def depth(self) -> int:
        """
        Inception depth of the rule the clause translates to: nesting levels
        alternate between rules and contracts, so only every second counts.
        """
        return (self.nesting() + 1) // 2

    def map_inequalities(self, fn: Callable[[Inequality], Inequality]) -> "Clause":
        return replace(
            self,
            antecedent_ineqs=tuple(fn(i) for i in self.antecedent_ineqs),
            antecedent_clauses=tuple(c.map_inequalities(fn) for c in self.antecedent_clauses),
            consequent=fn(self.consequent),
        )


AntecedentItem = Union[Inequality, Clause]


def map_formulas(ineq: Inequality, fn: Callable[[Formula], Formula]) -> Inequality:
    return Inequality(fn(ineq.lhs), fn(ineq.rhs))


def inequality_variables(ineq: Inequality) -> List:
    found = variables(ineq.lhs)
    found += [v for v in variables(ineq.rhs) if v not in found]
    return found


def free_variables(clause: Clause) -> List:
    """Variable leaves not bound by an enclosing quantifier, first-occurrence order."""
    found: List = []

    def visit(c: Clause, bound: frozenset) -> None:
        inner = bound | set(c.bound)
        for ineq in c.antecedent_ineqs:
            collect(ineq, inner)
        for sub in c.antecedent_clauses:
            visit(sub, inner)
        collect(c.consequent, inner)

    def collect(ineq: Inequality, bound: frozenset) -> None:
        for v in inequality_variables(ineq):
            if v.name not in bound and v not in found:
                found.append(v)

    visit(clause, frozenset())
    return found


def shadowed_bindings(clause: Clause) -> List[str]:
    """Names a nested clause quantifies although an enclosing clause already binds them."""
    found: List[str] = []

    def visit(c: Clause, bound: frozenset) -> None:
        found.extend(n for n in c.bound if n in bound and n not in found)
        for sub in c.antecedent_clauses:
            visit(sub, bound | set(c.bound))

    visit(clause, frozenset())
    return found


# ────────────────────────────────────────────────────────────────────────────
# Printing
# ────────────────────────────────────────────────────────────────────────────

def print_clause(clause: Clause) -> str:
    parts = [print_inequality(i) for i in clause.antecedent_ineqs]
    parts += [print_clause(c) for c in clause.antecedent_clauses]
    antecedent = ", ".join(parts)
    body = f"{antecedent} => " if antecedent else "=> "
    return (
        f"forall [{', '.join(clause.nominals)} | {', '.join(clause.conominals)}] "
        f"({body}{print_inequality(clause.consequent)})"
    )


def render_clause(clause: Clause, indent: int = 0) -> str:
    """Multi-line layout, one antecedent per line, nested clauses indented."""
    pad = "  " * indent
    lines = [f"{pad}forall [{', '.join(clause.nominals)} | {', '.join(clause.conominals)}] ("]
    for ineq in clause.antecedent_ineqs:
        lines.append(f"{pad}  {print_inequality(ineq)},")
    for sub in clause.antecedent_clauses:
        lines.append(render_clause(sub, indent + 1) + ",")
    lines.append(f"{pad}  => {print_inequality(clause.consequent)}")
    lines.append(f"{pad})")
    return "\n".join(lines)


# ────────────────────────────────────────────────────────────────────────────
# Parsing
# ────────────────────────────────────────────────────────────────────────────

def _bind(item, nominals: set, conominals: set):
    def leaf(f: Formula) -> Formula:
        if isinstance(f, Atom):
            if f.name in nominals:
                return Nominal(f.name)
            if f.name in conominals:
                return Conominal(f.name)
        return f

    if isinstance(item, Inequality):
        return map_formulas(item, lambda t: map_leaves(t, leaf))
    return item.map_inequalities(lambda i: map_formulas(i, lambda t: map_leaves(t, leaf)))


class ClauseBuilder(FormulaBuilder):
    """Binds quantified names innermost-first; unbound names stay atoms."""

    def nominal_list(self, items):
        return [str(t) for t in items]

    def conominal_list(self, items):
        return [str(t) for t in items]

    def antecedent_list(self, items):
        return list(items)

    def clause(self, items):
        _forall, nominals, conominals, antecedents, consequent = items
        noms, conoms = set(nominals), set(conominals)
        bound = [_bind(a, noms, conoms) for a in antecedents]
        return Clause(
            nominals=tuple(nominals),
            conominals=tuple(conominals),
            antecedent_ineqs=tuple(a for a in bound if isinstance(a, Inequality)),
            antecedent_clauses=tuple(a for a in bound if isinstance(a, Clause)),
            consequent=_bind(consequent, noms, conoms),
        )

    def start_clause(self, items):
        return items[0]


def parse_clause(text: str, sig: Signature) -> Clause:
    return run_parser(text, "start_clause", ClauseBuilder(sig))


# ────────────────────────────────────────────────────────────────────────────
# Alpha-equivalence
# ────────────────────────────────────────────────────────────────────────────

def canonical_form(clause: Clause) -> Clause:
    """Rename bound variables to positional names in quantifier order."""
    counter = itertools.count()

    def rename(c: Clause, env: Dict[str, str]) -> Clause:
        env = dict(env)
        noms = []
        for name in c.nominals:
            env[name] = f"_v{next(counter)}"
            noms.append(env[name])
        conoms = []
        for name in c.conominals:
            env[name] = f"_v{next(counter)}"
            conoms.append(env[name])

        def leaf(f: Formula) -> Formula:
            if isinstance(f, VARIABLE_TYPES) and f.name in env:
                return type(f)(env[f.name])
            return f

        def fix(ineq: Inequality) -> Inequality:
            return map_formulas(ineq, lambda t: map_leaves(t, leaf))

        return Clause(
            nominals=tuple(noms),
            conominals=tuple(conoms),
            antecedent_ineqs=tuple(fix(i) for i in c.antecedent_ineqs),
            antecedent_clauses=tuple(rename(s, env) for s in c.antecedent_clauses),
            consequent=fix(c.consequent),
        )

    return rename(clause, {})


def alpha_equivalent(a: Clause, b: Clause) -> bool:
    return canonical_form(a) == canonical_form(b)


def _erased(ineq: Inequality) -> str:
    def leaf(f: Formula) -> Formula:
        if isinstance(f, (Nominal, Conominal)):
            return type(f)("_")
        return f

    return print_inequality(map_formulas(ineq, lambda t: map_leaves(t, leaf)))


def _shape(item: AntecedentItem) -> str:
    if isinstance(item, Inequality):
        return _erased(item)
    inner = sorted(_shape(a) for a in (*item.antecedent_ineqs, *item.antecedent_clauses))
    return f"[{len(item.nominals)}|{len(item.conominals)}]({', '.join(inner)} => {_erased(item.consequent)})"


def normal_form(clause: Clause) -> Clause:
    """
    Canonical representative up to renaming of bound variables, reordering
    of quantifier lists and reordering of antecedents. Bound variables are
    numbered by first occurrence, consequent first, antecedents in shape order.
    """
    counter = itertools.count()

    def visit(c: Clause, env: Dict[str, str]) -> Clause:
        env = dict(env)
        ineqs = sorted(c.antecedent_ineqs, key=_shape)
        subs = sorted(c.antecedent_clauses, key=_shape)
        scan = [c.consequent, *ineqs] + [i for s in subs for i in s.inequalities()]
        seen = [v.name for ineq in scan for v in inequality_variables(ineq)]
        own = set(c.bound)
        order = list(dict.fromkeys(n for n in seen if n in own))
        order += [n for n in c.bound if n not in order]
        for name in order:
            env[name] = f"_v{next(counter)}"

        def leaf(f: Formula) -> Formula:
            if isinstance(f, VARIABLE_TYPES) and f.name in env:
                return type(f)(env[f.name])
            return f

        def fix(ineq: Inequality) -> Inequality:
            return map_formulas(ineq, lambda t: map_leaves(t, leaf))

        nested = [visit(s, env) for s in subs]
        return Clause(
            nominals=tuple(env[n] for n in order if n in c.nominals),
            conominals=tuple(env[n] for n in order if n in c.conominals),
            antecedent_ineqs=tuple(sorted((fix(i) for i in ineqs), key=print_inequality)),
            antecedent_clauses=tuple(sorted(nested, key=print_clause)),
            consequent=fix(c.consequent),
        )

    return visit(clause, {})

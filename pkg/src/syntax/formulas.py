"""
LE-formula terms.

The same term language hosts propositional atoms (axioms), nominal and
conominal variables (ALBA output) and formula metavariables (kernel rule
schemas); which leaves are admissible is a property of the producer.
"""
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, Tuple, Union


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Nominal:
    name: str


@dataclass(frozen=True)
class Conominal:
    name: str


@dataclass(frozen=True)
class FormulaMeta:
    name: str
    atoms_only: bool = False


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Conn:
    name: str
    args: Tuple["Formula", ...] = ()


Formula = Union[Atom, Nominal, Conominal, FormulaMeta, Top, Bot, And, Or, Conn]
Variable = Union[Atom, Nominal, Conominal]

LEAF_TYPES = (Atom, Nominal, Conominal, FormulaMeta, Top, Bot)
VARIABLE_TYPES = (Atom, Nominal, Conominal)


@dataclass(frozen=True)
class Inequality:
    lhs: Formula
    rhs: Formula


def children(f: Formula) -> Tuple[Formula, ...]:
    if isinstance(f, (And, Or)):
        return (f.left, f.right)
    if isinstance(f, Conn):
        return f.args
    return ()


def rebuild(f: Formula, new_children: Tuple[Formula, ...]) -> Formula:
    if isinstance(f, And):
        return And(*new_children)
    if isinstance(f, Or):
        return Or(*new_children)
    if isinstance(f, Conn):
        return Conn(f.name, tuple(new_children))
    return f


def walk(f: Formula) -> Iterator[Formula]:
    """Pre-order traversal."""
    yield f
    for child in children(f):
        yield from walk(child)


def variables(f: Formula) -> List[Variable]:
    """Distinct variable leaves in first-occurrence order."""
    seen: Dict[Variable, None] = {}
    for node in walk(f):
        if isinstance(node, VARIABLE_TYPES):
            seen.setdefault(node, None)
    return list(seen)


def atoms(f: Formula) -> List[str]:
    return [v.name for v in variables(f) if isinstance(v, Atom)]


def inequality_atoms(ineq: Inequality) -> List[str]:
    names = atoms(ineq.lhs)
    names += [a for a in atoms(ineq.rhs) if a not in names]
    return names


def size(f: Formula) -> int:
    return 1 + sum(size(c) for c in children(f))


def occurs(leaf: Formula, f: Formula) -> bool:
    return any(node == leaf for node in walk(f))


def substitute(f: Formula, mapping: Dict[Formula, Formula]) -> Formula:
    """Replace leaves (or any subterm equal to a key) simultaneously."""
    if f in mapping:
        return mapping[f]
    kids = children(f)
    if not kids:
        return f
    return rebuild(f, tuple(substitute(c, mapping) for c in kids))


def map_leaves(f: Formula, fn: Callable[[Formula], Formula]) -> Formula:
    kids = children(f)
    if not kids:
        return fn(f)
    return rebuild(f, tuple(map_leaves(c, fn) for c in kids))


def subterm(f: Formula, path: Tuple[int, ...]) -> Formula:
    for i in path:
        f = children(f)[i]
    return f


def replace_at(f: Formula, path: Tuple[int, ...], new: Formula) -> Formula:
    if not path:
        return new
    kids = list(children(f))
    kids[path[0]] = replace_at(kids[path[0]], path[1:], new)
    return rebuild(f, tuple(kids))


def big_join(terms: List[Formula]) -> Formula:
    """Left-associated join; the empty join is bottom."""
    if not terms:
        return Bot()
    result = terms[0]
    for t in terms[1:]:
        result = Or(result, t)
    return result


def big_meet(terms: List[Formula]) -> Formula:
    if not terms:
        return Top()
    result = terms[0]
    for t in terms[1:]:
        result = And(result, t)
    return result


def complexity(f: Formula) -> int:
    """Number of logical connectives, the cut-formula measure."""
    return 0 if isinstance(f, LEAF_TYPES) else 1 + sum(complexity(c) for c in children(f))

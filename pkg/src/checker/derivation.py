"""
Derivation trees.

A node names the rule applied, its conclusion, the derivations of the plain
premises and one dream per contract premise, in the order of the rule's
contracts. Dreams are subderivations for every count made here.

Node paths read `root/p0/d1`: plain premise 0 of the root, then the dream
fulfilling contract 1 of that node.
"""
from dataclasses import dataclass, replace
from typing import Callable, Iterator, Optional, Tuple

from kernel import CUT, Binding, Sequent, print_sequent

ROOT = "root"


@dataclass(frozen=True)
class Derivation:
    rule: str
    conclusion: Sequent
    premises: Tuple["Derivation", ...] = ()
    dreams: Tuple["Derivation", ...] = ()
    # explicit metavariable bindings, mostly parameters of uninstantiable variables
    bindings: Tuple[Tuple[str, Binding], ...] = ()

    def __str__(self) -> str:
        return f"{self.rule}: {print_sequent(self.conclusion)}"


def premise_path(path: str, i: int) -> str:
    return f"{path}/p{i}"


def dream_path(path: str, k: int) -> str:
    return f"{path}/d{k}"


def walk(d: Derivation, path: str = ROOT, in_dream: bool = False) -> Iterator[Tuple[str, Derivation, bool]]:
    """Pre-order `(path, node, inside a dream)` triples, dreams after plain premises."""
    yield path, d, in_dream
    for i, child in enumerate(d.premises):
        yield from walk(child, premise_path(path, i), in_dream)
    for k, dream in enumerate(d.dreams):
        yield from walk(dream, dream_path(path, k), True)


def _steps(path: str):
    parts = path.split("/")
    if parts[0] != ROOT:
        raise KeyError(path)
    for part in parts[1:]:
        yield part[0], int(part[1:])


def node_at(d: Derivation, path: str) -> Derivation:
    for kind, i in _steps(path):
        d = d.premises[i] if kind == "p" else d.dreams[i]
    return d


def replace_node(d: Derivation, path: str, new: Derivation) -> Derivation:
    steps = list(_steps(path))

    def go(node: Derivation, rest) -> Derivation:
        if not rest:
            return new
        (kind, i), tail = rest[0], rest[1:]
        if kind == "p":
            children = list(node.premises)
            children[i] = go(children[i], tail)
            return replace(node, premises=tuple(children))
        dreams = list(node.dreams)
        dreams[i] = go(dreams[i], tail)
        return replace(node, dreams=tuple(dreams))

    return go(d, steps)


def height(d: Derivation) -> int:
    below = [height(c) for c in d.premises] + [height(c) for c in d.dreams]
    return 1 + max(below, default=0)


def size(d: Derivation) -> int:
    return sum(1 for _ in walk(d))


def cut_paths(d: Derivation) -> list:
    return [path for path, node, _ in walk(d) if node.rule == CUT]


def is_cut_free(d: Derivation) -> bool:
    """No Cut anywhere, dreams included."""
    return not cut_paths(d)


def inception_depth(d: Derivation, depth_of: Callable[[str], Optional[int]]) -> int:
    """Largest depth of a rule applied anywhere in `d`; `depth_of` maps rule names to depths."""
    return max((depth_of(node.rule) or 0 for _, node, _ in walk(d)), default=0)


def map_sequents(d: Derivation, fn: Callable[[Sequent], Sequent]) -> Derivation:
    return replace(
        d,
        conclusion=fn(d.conclusion),
        premises=tuple(map_sequents(c, fn) for c in d.premises),
        dreams=tuple(map_sequents(c, fn) for c in d.dreams),
    )

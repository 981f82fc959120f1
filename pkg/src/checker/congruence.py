"""
Congruence of structure occurrences.

Two occurrences are locally congruent when one application instantiates the
same structure metavariable with them, or when they are corresponding parts
of such instances. The sequents counted are the rule's conclusion, its plain
premises and its contract aims. Contract rules applied inside a dream
inherit metavariables from the enclosing application, which links
occurrences across dream boundaries. Congruence is the transitive closure.

The Id axiom is schematic in a formula, not a structure, so its two sides
are linked only on request.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Tuple

from dto import Sort
from kernel import ID, MetaVar, Sequent, position_sort, positions, sequent_positions
from signature import Signature
from .check import Application, CheckReport
from .derivation import Derivation, dream_path, node_at, premise_path, walk

logger = logging.getLogger(__name__)

# (node path, side, path inside the side)
Occurrence = Tuple[str, int, Tuple[int, ...]]


class UnionFind:
    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}

    def find(self, x: Hashable) -> Hashable:
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: Hashable, b: Hashable) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb, key=repr)] = min(ra, rb, key=repr)


@dataclass
class CongruenceMap:
    classes: List[List[Occurrence]] = field(default_factory=list)
    _index: Dict[Occurrence, int] = field(default_factory=dict)

    def class_of(self, occ: Occurrence) -> List[Occurrence]:
        """Every occurrence congruent to `occ`, itself included."""
        i = self._index.get(occ)
        return list(self.classes[i]) if i is not None else [occ]

    def congruent(self, a: Occurrence, b: Occurrence) -> bool:
        i = self._index.get(a)
        return i is not None and i == self._index.get(b)


def _schema_sequents(app: Application) -> Iterable[Tuple[str, Sequent]]:
    yield app.path, app.rule.conclusion
    for i, premise in enumerate(app.rule.premises):
        yield premise_path(app.path, i), premise
    for k, contract in enumerate(app.rule.contracts):
        yield dream_path(app.path, k), contract.aim


def congruence_classes(
    d: Derivation, report: CheckReport, link_identity: bool = False
) -> CongruenceMap:
    """Classes of congruent occurrences; `report` must come from an accepted check of `d`."""
    uf = UnionFind()
    for app in report.applications:
        for node_path, schema in _schema_sequents(app):
            for (side, path), sub in sequent_positions(schema):
                if not isinstance(sub, MetaVar) or sub.name not in app.substitution:
                    continue
                origin = app.origins.get(sub.name, app.path)
                # corresponding parts of two instances of one metavariable are congruent too
                for inner, _ in positions(app.substitution[sub.name]):
                    uf.union(("occ", node_path, side, path + inner), ("var", origin, sub.name, inner))
    if link_identity:
        for path, node, _ in walk(d):
            if node.rule == ID:
                uf.union(("occ", path, 0, ()), ("occ", path, 1, ()))

    grouped: Dict[Hashable, List[Occurrence]] = defaultdict(list)
    for key in list(uf.parent):
        if key[0] == "occ":
            grouped[uf.find(key)].append(key[1:])
    result = CongruenceMap()
    for members in grouped.values():
        if len(members) < 2:
            continue
        members.sort(key=lambda o: (o[0].count("/"), o))
        for occ in members:
            result._index[occ] = len(result.classes)
        result.classes.append(members)
    logger.info(
        "[checker] congruence: %d class(es) over %d application(s)", len(result.classes), len(report.applications)
    )
    return result


def occurrence_sort(d: Derivation, occ: Occurrence, sig: Signature) -> Sort:
    node_path, side, path = occ
    return position_sort(node_at(d, node_path).conclusion, (side, path), sig)


def inhomogeneous_classes(d: Derivation, cmap: CongruenceMap, sig: Signature) -> List[List[Occurrence]]:
    """Classes mixing precedent and succedent positions; empty for well-formed calculi."""
    return [c for c in cmap.classes if len({occurrence_sort(d, o, sig) for o in c}) > 1]

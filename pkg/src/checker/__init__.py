from .derivation import (
    ROOT, Derivation, cut_paths, dream_path, height, inception_depth, is_cut_free, map_sequents, node_at,
    premise_path, replace_node, size, walk,
)
from .calculus import Calculus, build_calculus, load_calculus
from .io import (
    DISPLAY_MACRO, derivation_from_json, derivation_to_json, load_derivation, render_derivation,
    write_derivation,
)
from .check import Application, CheckReport, DerivationChecker, NodeIssue, check_derivation
from .congruence import CongruenceMap, Occurrence, UnionFind, congruence_classes, inhomogeneous_classes, occurrence_sort

__all__ = [
    "ROOT", "Derivation", "cut_paths", "dream_path", "height", "inception_depth", "is_cut_free", "map_sequents",
    "node_at", "premise_path", "replace_node", "size", "walk",
    "Calculus", "build_calculus", "load_calculus",
    "DISPLAY_MACRO", "derivation_from_json", "derivation_to_json", "load_derivation", "render_derivation",
    "write_derivation",
    "Application", "CheckReport", "DerivationChecker", "NodeIssue", "check_derivation",
    "CongruenceMap", "Occurrence", "UnionFind", "congruence_classes", "inhomogeneous_classes", "occurrence_sort",
]

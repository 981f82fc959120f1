from .formulas import (
    And, Atom, Bot, Conn, Conominal, Formula, FormulaMeta, Inequality, Nominal, Or, Top,
    LEAF_TYPES, VARIABLE_TYPES,
    atoms, big_join, big_meet, children, complexity, inequality_atoms, map_leaves, occurs, rebuild,
    replace_at, size, substitute, subterm, variables, walk,
)
from .printer import print_formula, print_inequality
from .parser import FormulaBuilder, load_axioms, parse_axioms, parse_formula, parse_inequality, run_parser
from .signed import (
    SignedNode, branch_depth, branches, classify, depth_of_trail, flip_tree, is_definite,
    is_good, sign_formula, sign_tree, skeleton_region,
)
from .inductive import (
    BranchDepth, InductiveCertificate, certificate_for, check_inductive, find_inductive_certificate,
    inequality_depth, is_critical, transitive_closure,
)
from .splitting import distribute_once, split_definite, split_root, split_step
from .generate import random_formula, random_inequality

__all__ = [
    "And", "Atom", "Bot", "Conn", "Conominal", "Formula", "FormulaMeta", "Inequality",
    "Nominal", "Or", "Top", "LEAF_TYPES", "VARIABLE_TYPES",
    "atoms", "big_join", "big_meet", "children", "complexity", "inequality_atoms", "map_leaves", "occurs",
    "rebuild", "replace_at", "size", "substitute", "subterm", "variables", "walk",
    "print_formula", "print_inequality",
    "FormulaBuilder", "load_axioms", "parse_axioms", "parse_formula", "parse_inequality", "run_parser",
    "SignedNode", "branch_depth", "branches", "classify", "depth_of_trail", "flip_tree",
    "is_definite", "is_good", "sign_formula", "sign_tree", "skeleton_region",
    "BranchDepth", "InductiveCertificate", "certificate_for", "check_inductive", "find_inductive_certificate",
    "inequality_depth", "is_critical", "transitive_closure",
    "distribute_once", "split_definite", "split_root", "split_step",
    "random_formula", "random_inequality",
]

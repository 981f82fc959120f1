from .structures import (
    ANTE, SUCC, STRUCT_BOT, STRUCT_TOP, FormulaLeaf, MetaVar, Param, Position, Sequent, Structure, StructConn,
    assign_sorts, assign_structure_sorts, at_position, check, child_sort, hat, intrinsic_sort, map_metavars,
    metavars, occurrences, params, position_sort, positions, print_sequent, print_structure, rename_params,
    replace_at_position, replace_sub, sequent_metavars, sequent_params, sequent_positions, side_sort,
    sort_errors, struct_children, structure_diff, structure_formula, substructure,
)
from .parser import SequentBuilder, parse_sequent, parse_structure
from .rules import (
    Binding, Contract, InceptionRule, Obligation, ParamAllocator, RuleEnv, RuleInstance, ScopedRule,
    Substitution, rule_depth, scope_of,
)
from .matching import (
    describe_binding, instantiate, instantiate_formula, instantiate_sequent, instantiate_structure,
    match_conclusion, match_sequent, require_match,
)
from .display import (
    DisplayStep, apply_postulate, display, display_path, postulate_name, undisplay,
)
from .base_rules import (
    CUT, ID, base_rules, connective_rules, display_postulates, is_left_principal, is_right_principal,
    lattice_rules, rule_table,
)
from .lint import CalculusLint, LintReport, conclusion_metavariables, lint_calculus, lint_closure, lint_rule

__all__ = [
    "ANTE", "SUCC", "STRUCT_BOT", "STRUCT_TOP", "FormulaLeaf", "MetaVar", "Param", "Position", "Sequent",
    "Structure", "StructConn", "assign_sorts", "assign_structure_sorts", "at_position", "check", "child_sort",
    "hat", "intrinsic_sort", "map_metavars", "metavars", "occurrences", "params", "position_sort", "positions",
    "print_sequent", "print_structure", "rename_params", "replace_at_position", "replace_sub",
    "sequent_metavars", "sequent_params", "sequent_positions", "side_sort", "sort_errors", "struct_children",
    "structure_diff", "structure_formula", "substructure",
    "SequentBuilder", "parse_sequent", "parse_structure",
    "Binding", "Contract", "InceptionRule", "Obligation", "ParamAllocator", "RuleEnv", "RuleInstance",
    "ScopedRule", "Substitution", "rule_depth", "scope_of",
    "describe_binding", "instantiate", "instantiate_formula", "instantiate_sequent", "instantiate_structure",
    "match_conclusion", "match_sequent", "require_match",
    "DisplayStep", "apply_postulate", "display", "display_path", "postulate_name", "undisplay",
    "CUT", "ID", "base_rules", "connective_rules", "display_postulates", "is_left_principal",
    "is_right_principal", "lattice_rules", "rule_table",
    "CalculusLint", "LintReport", "conclusion_metavariables", "lint_calculus", "lint_closure", "lint_rule",
]

from .translate import (
    CONCLUSION_POOL, NESTED_POOL, MappingEntry, NameSupply, RuleGroup, RuleTranslator, Translation,
    check_analytic, check_closure, translate, translate_run, translate_with_mapping,
)
from kernel import rule_depth
from .io import flatten, load_rules, rule_from_json, rule_to_json, rules_from_json, rules_to_json, write_rules
from .render import render_groups, render_mapping, render_rule_tree
from .compare import normal_rule, rule_differences, rule_shape, rules_match

__all__ = [
    "CONCLUSION_POOL", "NESTED_POOL", "MappingEntry", "NameSupply", "RuleGroup", "RuleTranslator",
    "Translation", "check_analytic", "check_closure", "translate", "translate_run", "translate_with_mapping",
    "rule_depth",
    "flatten", "load_rules", "rule_from_json", "rule_to_json", "rules_from_json", "rules_to_json", "write_rules",
    "render_groups", "render_mapping", "render_rule_tree",
    "normal_rule", "rule_differences", "rule_shape", "rules_match",
]

from .polarity import Family, Polarity, Sign, Sort
from .node_class import NodeClass
from .rule_kind import AlbaStep, ExitCode, ReductionKind, RuleKind

__all__ = [
    "Family", "Polarity", "Sign", "Sort", "NodeClass",
    "AlbaStep", "ExitCode", "ReductionKind", "RuleKind",
]

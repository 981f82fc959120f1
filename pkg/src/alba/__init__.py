from .clause import (
    Clause, alpha_equivalent, canonical_form, free_variables, normal_form, parse_clause, print_clause,
    render_clause, shadowed_bindings,
)
from .state import AlbaState, TraceRecord
from .approximation import first_approximation
from .solving import ackermann_eliminate, solve_all, solve_constraint, solve_for_variable
from .unravel import inequality_safe, is_polarity_safe, unravel_step
from .pipeline import AlbaRun, ComponentRun, run_alba, run_component

__all__ = [
    "Clause", "alpha_equivalent", "canonical_form", "free_variables", "normal_form",
    "parse_clause", "print_clause", "shadowed_bindings",
    "render_clause",
    "AlbaState", "TraceRecord",
    "first_approximation",
    "ackermann_eliminate", "solve_all", "solve_constraint", "solve_for_variable",
    "inequality_safe", "is_polarity_safe", "unravel_step",
    "AlbaRun", "ComponentRun", "run_alba", "run_component",
]

from .formulas import (
    And, Atom, Bot, Conn, Conominal, Formula, FormulaMeta, Inequality, Nominal, Or, Top,
)

# Binding strength: `|` < `&` < application / leaves
_PREC_OR = 1
_PREC_AND = 2
_PREC_ATOM = 3


def _prec(f: Formula) -> int:
    if isinstance(f, Or):
        return _PREC_OR
    if isinstance(f, And):
        return _PREC_AND
    return _PREC_ATOM


def _wrap(f: Formula, minimum: int) -> str:
    text = print_formula(f)
    return f"({text})" if _prec(f) < minimum else text


def print_formula(f: Formula) -> str:
    """Canonical text: prefix application, infix lattice operators, left-associated."""
    if isinstance(f, (Atom, Nominal, Conominal, FormulaMeta)):
        return f.name
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, And):
        return f"{_wrap(f.left, _PREC_AND)} & {_wrap(f.right, _PREC_AND + 1)}"
    if isinstance(f, Or):
        return f"{_wrap(f.left, _PREC_OR)} | {_wrap(f.right, _PREC_OR + 1)}"
    if isinstance(f, Conn):
        return f"{f.name}({', '.join(print_formula(a) for a in f.args)})"
    raise TypeError(f"Not a formula: {f!r}")


def print_inequality(ineq: Inequality) -> str:
    return f"{print_formula(ineq.lhs)} <= {print_formula(ineq.rhs)}"

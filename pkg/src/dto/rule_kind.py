from enum import Enum, IntEnum


class RuleKind(Enum):
    IDENTITY = "identity"
    CUT = "cut"
    LOGICAL = "logical"
    DISPLAY = "display"
    STRUCTURAL = "structural"
    INCEPTION = "inception"


class ReductionKind(Enum):
    AXIOM = "axiom"
    PRINCIPAL = "principal"
    PARAMETRIC = "parametric"
    REBUILD = "rebuild"


class AlbaStep(Enum):
    FIRST_APPROX = "first-approx"
    SOLVE = "solve"
    ACKERMANN = "ackermann"
    UNRAVEL = "unravel"


class ExitCode(IntEnum):
    OK = 0
    DOMAIN_FAILURE = 1
    USAGE = 2

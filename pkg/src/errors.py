"""
Exception hierarchy shared by every package of the toolchain.

Total operations (validation, checking, linting) never raise these; they
return diagnostic reports instead.
"""
from typing import Optional


class InceptionError(Exception):
    """Root of every domain error raised by the toolchain."""


class SignatureError(InceptionError):
    pass


class FormulaSyntaxError(InceptionError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class NotInductiveError(InceptionError):
    pass


class AlbaError(InceptionError):
    def __init__(self, message: str, trace: Optional[list] = None):
        self.trace = list(trace or [])
        super().__init__(message)


class AlgebraError(InceptionError):
    pass


class OracleBudgetError(AlgebraError):
    pass


class RuleGenerationError(InceptionError):
    pass


class KernelError(InceptionError):
    pass


class DisplayError(KernelError):
    pass


class MatchError(KernelError):
    pass


class InstantiationError(KernelError):
    pass


class DerivationFormatError(InceptionError):
    pass


class CutEliminationError(InceptionError):
    def __init__(self, message: str, path: str = "root"):
        self.path = path
        super().__init__(f"[{path}] {message}")


class CorpusError(InceptionError):
    pass

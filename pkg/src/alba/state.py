"""Mutable bookkeeping of one ALBA run over a definite inequality."""
import copy
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from dto import AlbaStep, Polarity
from syntax import Inequality
from .clause import Clause, print_clause

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceRecord:
    step: AlbaStep
    detail: str
    snapshot: Clause

    def render(self) -> str:
        return f"{self.step.value}: {self.detail}\n  {print_clause(self.snapshot)}"


@dataclass
class AlbaState:
    # eliminable propositional variables still present, with their ε
    epsilon: Dict[str, Polarity]
    nominals: List[str] = field(default_factory=list)
    conominals: List[str] = field(default_factory=list)
    inequalities: List[Inequality] = field(default_factory=list)
    clauses: List[Clause] = field(default_factory=list)
    goal: Inequality = None  # type: ignore[assignment]
    # (nesting level, "i" | "m") -> next index
    counters: Dict[Tuple[int, str], int] = field(default_factory=dict)
    trace: List[TraceRecord] = field(default_factory=list)

    def fresh(self, kind: str, level: int = 0) -> str:
        n = self.counters.get((level, kind), 0)
        self.counters[(level, kind)] = n + 1
        return f"{kind}{n}" if level == 0 else f"{kind}{level}_{n}"

    def as_clause(self) -> Clause:
        """The state read as a quasi-inequality; remaining atoms are free (universally quantified)."""
        return Clause(
            nominals=tuple(self.nominals),
            conominals=tuple(self.conominals),
            antecedent_ineqs=tuple(self.inequalities),
            antecedent_clauses=tuple(self.clauses),
            consequent=self.goal,
        )

    def record(self, step: AlbaStep, detail: str) -> None:
        self.trace.append(TraceRecord(step, detail, self.as_clause()))
        logger.debug("[alba] %s: %s", step.value, detail)

    def copy(self) -> "AlbaState":
        return copy.deepcopy(self)

"""Semantic cross-check of an ALBA run on one finite algebra."""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from alba import AlbaRun
from errors import OracleBudgetError
from .model import FiniteLEAlgebra
from .semantics import axiom_valid, clause_valid

logger = logging.getLogger(__name__)


@dataclass
class OracleVerdict:
    algebra: str
    size: int
    axiom_valid: Optional[bool] = None
    clause_valid: Optional[bool] = None
    # "<component>:<step>#<index>" for every pipeline snapshot that disagrees
    mismatches: List[str] = field(default_factory=list)
    skipped: str = ""

    @property
    def agrees(self) -> bool:
        return not self.skipped and not self.mismatches and self.axiom_valid == self.clause_valid

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "size": self.size,
            "axiom_valid": self.axiom_valid,
            "clause_valid": self.clause_valid,
            "mismatches": list(self.mismatches),
            "skipped": self.skipped,
        }


def check_run(run: AlbaRun, alg: FiniteLEAlgebra) -> OracleVerdict:
    """
    Compare the axiom's validity with the validity of every intermediate
    snapshot of every definite component and of the final clauses.
    """
    verdict = OracleVerdict(alg.label, alg.size)
    try:
        verdict.axiom_valid = axiom_valid(run.axiom, alg)
        component_truth = []
        for ci, component in enumerate(run.components):
            expected = axiom_valid(component.inequality, alg)
            component_truth.append(expected)
            for k, record in enumerate(component.trace):
                if clause_valid(record.snapshot, alg) != expected:
                    verdict.mismatches.append(f"{ci}:{record.step.value}#{k}")
        if verdict.axiom_valid != all(component_truth):
            verdict.mismatches.append("split")
        verdict.clause_valid = all(clause_valid(c, alg) for c in run.clauses)
    except OracleBudgetError as e:
        verdict.skipped = str(e)
        logger.warning("[oracle] %s skipped: %s", alg.label, e)
    if verdict.mismatches:
        logger.error("[oracle] %s: mismatch at %s", alg.label, ", ".join(verdict.mismatches))
    return verdict

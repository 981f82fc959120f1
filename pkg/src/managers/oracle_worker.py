import logging
import time
from typing import Any, Dict, List

from pydantic import BaseModel, Field

from algebra import check_run, enumerate_algebras
from alba import run_alba
from signature import close_under_residuals, signature_from_json
from syntax import parse_inequality

try:
    import ray
except ImportError:  # pragma: no cover
    ray = None

logger = logging.getLogger(__name__)


class OracleTask(BaseModel):
    """One slice of an oracle sweep: algebras `start` .. `start + count - 1` for one axiom."""
    signature: Dict[str, Any]
    axiom: str
    seed: int = Field(ge=0)
    start: int = Field(ge=0)
    count: int = Field(ge=1)
    max_size: int = Field(ge=2, le=6)
    worker: int = 0


def check_algebras_local(task: OracleTask) -> Dict[str, Any]:
    """Run ALBA on the task's axiom and compare it on each algebra of the slice."""
    t0 = time.perf_counter()
    sig = close_under_residuals(signature_from_json(task.signature))
    run = run_alba(parse_inequality(task.axiom, sig), sig)
    alba_s = time.perf_counter() - t0

    t0 = time.perf_counter()
    verdicts: List[Dict[str, Any]] = []
    for alg in enumerate_algebras(sig, task.max_size, task.seed, task.count, task.start):
        verdict = check_run(run, alg)
        if not verdict.agrees:
            logger.warning("[oracle][worker=%d] %s disagrees", task.worker, alg.label)
        verdicts.append(verdict.to_json())
    oracle_s = time.perf_counter() - t0
    logger.info(
        "[oracle][worker=%d] algebras %d..%d checked in %.3fs",
        task.worker, task.start, task.start + task.count - 1, alba_s + oracle_s,
    )
    return {"verdicts": verdicts, "_timing": {"alba_s": alba_s, "oracle_s": oracle_s}}


if ray is not None:
    @ray.remote(num_cpus=1)
    def check_algebras(task: Dict[str, Any]) -> Dict[str, Any]:
        """Stateless Ray task: one oracle slice, verdicts as JSON documents."""
        return check_algebras_local(OracleTask.model_validate(task))
else:  # pragma: no cover
    check_algebras = None

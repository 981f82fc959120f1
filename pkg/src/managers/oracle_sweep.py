"""
Oracle sweep: ALBA output against the axiom on a seeded stream of random
finite algebras, sliced into tasks that run in this process or on Ray.
Algebra i depends only on (seed, i), so both modes give the same verdicts
in the same order.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import config
from algebra import OracleVerdict
from signature import Signature, signature_to_json
from syntax import Inequality, print_inequality
from .oracle_worker import OracleTask, check_algebras_local, ray

logger = logging.getLogger(__name__)

# algebras per task
SLICE_SIZE = 25


@dataclass
class SweepResult:
    axiom: str
    verdicts: List[OracleVerdict] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def mismatches(self) -> List[OracleVerdict]:
        return [v for v in self.verdicts if not v.skipped and not v.agrees]

    @property
    def skipped(self) -> List[OracleVerdict]:
        return [v for v in self.verdicts if v.skipped]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def render(self) -> str:
        lines = [
            f"{self.axiom}: {len(self.verdicts)} algebra(s), {len(self.mismatches)} mismatch(es), "
            f"{len(self.skipped)} skipped"
        ]
        for v in self.verdicts:
            status = "skipped" if v.skipped else ("ok" if v.agrees else "MISMATCH " + ",".join(v.mismatches))
            lines.append(f"  {v.algebra} size={v.size} axiom={v.axiom_valid} clause={v.clause_valid} {status}")
        return "\n".join(lines)


class OracleSweep:
    def __init__(
        self,
        sig: Signature,
        axiom: Inequality,
        seed: int = config.RANDOM_SEED,
        count: int = 200,
        max_size: int = config.MAX_ALGEBRA_SIZE,
        use_ray: Optional[bool] = None,
    ):
        self.sig = sig
        self.axiom = axiom
        self.seed = seed
        self.count = count
        self.max_size = max_size
        self.use_ray = config.USE_RAY if use_ray is None else use_ray
        self.timings: Dict[str, float] = {}

    def tasks(self) -> List[OracleTask]:
        doc = signature_to_json(self.sig)
        text = print_inequality(self.axiom)
        return [
            OracleTask(
                signature=doc, axiom=text, seed=self.seed, start=start,
                count=min(SLICE_SIZE, self.count - start), max_size=self.max_size, worker=i,
            )
            for i, start in enumerate(range(0, self.count, SLICE_SIZE))
        ]

    def run(self) -> SweepResult:
        t0 = time.perf_counter()
        tasks = self.tasks()
        if self.use_ray and ray is None:
            logger.warning("[oracle] Ray is not installed, running the sweep sequentially")
        if self.use_ray and ray is not None and tasks:
            from .ray_orchestrator import RayOrchestrator

            orchestrator = RayOrchestrator()
            try:
                outputs = orchestrator.collect(orchestrator.distribute_work(tasks))
            finally:
                orchestrator.cleanup()
        else:
            outputs = [check_algebras_local(t) for t in tasks]
        self.timings["sweep_s"] = time.perf_counter() - t0
        for out in outputs:
            for key, value in out["_timing"].items():
                self.timings[key] = self.timings.get(key, 0.0) + value

        result = SweepResult(
            print_inequality(self.axiom),
            [OracleVerdict(**doc) for out in outputs for doc in out["verdicts"]],
            dict(self.timings),
        )
        logger.info(
            "[oracle] %s: %d algebra(s), %d mismatch(es), %.3fs",
            result.axiom, len(result.verdicts), len(result.mismatches), self.timings["sweep_s"],
        )
        return result


def run_sweep(
    sig: Signature,
    axiom: Inequality,
    seed: int = config.RANDOM_SEED,
    count: int = 200,
    max_size: int = config.MAX_ALGEBRA_SIZE,
    use_ray: Optional[bool] = None,
) -> SweepResult:
    return OracleSweep(sig, axiom, seed, count, max_size, use_ray).run()

import logging
import os
from pathlib import Path
from typing import Any, Dict, List

import config
from .oracle_worker import OracleTask, check_algebras, ray

_SRC_DIR = str(Path(__file__).parents[1])

logger = logging.getLogger(__name__)


class RayOrchestrator:
    def __init__(self):
        if ray is None:
            raise RuntimeError("Ray is not installed")
        existing_pythonpath = os.getenv("PYTHONPATH", "")
        pythonpath = f"{_SRC_DIR}:{existing_pythonpath}" if existing_pythonpath else _SRC_DIR
        ray.init(
            address=config.RAY_ADDRESS,
            ignore_reinit_error=True,
            runtime_env={"env_vars": {"PYTHONPATH": pythonpath}},
        )

    def distribute_work(self, tasks: List[OracleTask]) -> List["ray.ObjectRef"]:
        """Submit one check_algebras task per slice; returns futures."""
        if not tasks:
            raise IndexError("No oracle tasks provided")
        logger.info("[oracle] submitting %d slice(s) to Ray", len(tasks))
        return [check_algebras.remote(t.model_dump()) for t in tasks]

    def collect(self, futures) -> List[Dict[str, Any]]:
        return ray.get(futures)

    def cleanup(self):
        ray.shutdown()

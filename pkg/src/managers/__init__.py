from .oracle_worker import OracleTask, check_algebras, check_algebras_local
from .oracle_sweep import OracleSweep, SweepResult, run_sweep

__all__ = ["OracleTask", "check_algebras", "check_algebras_local", "OracleSweep", "SweepResult", "run_sweep"]

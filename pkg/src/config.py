"""Environment-driven settings shared by the CLI, the oracle and the corpus loader."""
import os
from pathlib import Path

_REPO_ROOT = Path(__file__).parents[1]

# ============================================================================
# Configuration
# ============================================================================

CORPUS_ROOT = Path(os.getenv("INCEPTION_CORPUS_ROOT", str(_REPO_ROOT / "corpus")))
SCHEMA_ROOT = Path(os.getenv("INCEPTION_SCHEMA_ROOT", str(_REPO_ROOT / "schema" / "v1")))

# |carrier| ** #variables evaluations allowed per validity query
ORACLE_BUDGET = int(os.getenv("INCEPTION_ORACLE_BUDGET", str(10 ** 7)))
RANDOM_SEED = int(os.getenv("INCEPTION_RANDOM_SEED", "1"))
MAX_ALGEBRA_SIZE = int(os.getenv("INCEPTION_MAX_ALGEBRA_SIZE", "4"))
USE_RAY = os.getenv("INCEPTION_USE_RAY", "0") == "1"
RAY_ADDRESS = os.getenv("RAY_ADDRESS")
# reductions before cut elimination gives up on a derivation
CUTELIM_MAX_STEPS = int(os.getenv("INCEPTION_CUTELIM_MAX_STEPS", "5000"))

from .lattice import Lattice, chain, lattice_from_order, macneille_completion, random_lattice
from .model import (
    FiniteLEAlgebra, build_algebra, enumerate_algebras, find_algebra, random_algebra, validate_algebra,
)
from .semantics import axiom_valid, clause_valid, counterexample, evaluate
from .io import algebra_from_json, algebra_to_json, load_algebra, write_algebra
from .oracle import OracleVerdict, check_run

__all__ = [
    "Lattice", "chain", "lattice_from_order", "macneille_completion", "random_lattice",
    "FiniteLEAlgebra", "build_algebra", "enumerate_algebras", "find_algebra", "random_algebra",
    "validate_algebra",
    "axiom_valid", "clause_valid", "counterexample", "evaluate",
    "algebra_from_json", "algebra_to_json", "load_algebra", "write_algebra",
    "OracleVerdict", "check_run",
]

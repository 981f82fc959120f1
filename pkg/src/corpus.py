"""
Bundled golden corpus: signatures, axioms, golden clauses and rules,
derivations, mutants and the two-axiom cut calculus.

Everything is located through `manifest.json` under `config.CORPUS_ROOT`.
"""
import json
import logging
from functools import cached_property
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError

import config
from alba import Clause, parse_clause
from dto import Polarity
from errors import CorpusError
from rulegen import RuleGroup, load_rules
from signature import Signature, load_signature
from syntax import Inequality, InductiveCertificate, certificate_for, load_axioms, parse_inequality

logger = logging.getLogger(__name__)

MANIFEST = "manifest.json"


class GoldenCase(BaseModel):
    name: str
    signature: str
    axiom: str
    depth: int = Field(ge=0)
    # pinned order-type; omitted when the default certificate search is expected
    epsilon: Optional[Dict[str, str]] = None
    clause: str
    rules: str
    calculus: str
    derivation: str


class AnalyticSet(BaseModel):
    signature: str
    axioms: str


class Mutant(BaseModel):
    file: str
    path: str


class CutCase(BaseModel):
    calculus: str
    derivation: str
    endsequent: str


class Manifest(BaseModel):
    cases: List[GoldenCase]
    analytic: AnalyticSet
    mutants: List[Mutant] = Field(default_factory=list)
    cut_elimination: CutCase


def read_clause_file(path: str | Path, sig: Signature) -> Clause:
    """The first non-comment line of a `.clause` file."""
    for line in Path(path).read_text().splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            return parse_clause(stripped, sig)
    raise CorpusError(f"{path}: no clause found")


class Corpus:
    def __init__(self, root: str | Path = config.CORPUS_ROOT):
        self.root = Path(root)
        self._signatures: Dict[str, Signature] = {}

    @cached_property
    def manifest(self) -> Manifest:
        path = self.root / MANIFEST
        try:
            manifest = Manifest.model_validate(json.loads(path.read_text()))
        except FileNotFoundError as e:
            raise CorpusError(f"no corpus manifest at {path}") from e
        except (json.JSONDecodeError, ValidationError) as e:
            raise CorpusError(f"{path}: {e}") from e
        logger.info(
            "[corpus] %s: %d golden case(s), %d mutant(s)", self.root, len(manifest.cases), len(manifest.mutants)
        )
        return manifest

    def path(self, relative: str) -> Path:
        return self.root / relative

    @property
    def cases(self) -> List[GoldenCase]:
        return self.manifest.cases

    def case(self, name: str) -> GoldenCase:
        for c in self.cases:
            if c.name == name:
                return c
        raise CorpusError(f"no golden case named {name}")

    def signature(self, relative: str) -> Signature:
        if relative not in self._signatures:
            self._signatures[relative] = load_signature(self.path(relative))
        return self._signatures[relative]

    def axiom(self, case: GoldenCase) -> Inequality:
        return parse_inequality(case.axiom, self.signature(case.signature))

    def certificate(self, case: GoldenCase) -> Optional[InductiveCertificate]:
        """Certificate for the pinned order-type, or None when the case pins none."""
        if case.epsilon is None:
            return None
        eps = {name: Polarity.from_json(raw) for name, raw in case.epsilon.items()}
        return certificate_for(self.axiom(case), eps, self.signature(case.signature))

    def golden_clause(self, case: GoldenCase) -> Clause:
        return read_clause_file(self.path(case.clause), self.signature(case.signature))

    def golden_rules(self, case: GoldenCase) -> List[RuleGroup]:
        return load_rules(self.path(case.rules), self.signature(case.signature))

    def analytic_axioms(self) -> List[Inequality]:
        spec = self.manifest.analytic
        return load_axioms(self.path(spec.axioms), self.signature(spec.signature))

    def analytic_signature(self) -> Signature:
        return self.signature(self.manifest.analytic.signature)


def load_corpus(root: Optional[str | Path] = None) -> Corpus:
    corpus = Corpus(root or config.CORPUS_ROOT)
    _ = corpus.manifest
    return corpus

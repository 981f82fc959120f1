"""
Shared fixtures for the toolchain tests.

Provides:
- the bundled golden corpus and its closed signatures
- small hand-built signatures for unit tests
"""
import os
import sys

import pytest

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from corpus import Corpus, load_corpus  # noqa: E402
from signature import Signature, close_under_residuals, signature_from_json  # noqa: E402


# ============================================================================
# Signatures
# ============================================================================

MODAL_DOC = {
    "name": "modal",
    "connectives": [
        {"name": "dia", "family": "F", "arity": 1, "order_type": [1]},
        {"name": "o", "family": "F", "arity": 2, "order_type": [1, 1]},
        {"name": "box", "family": "G", "arity": 1, "order_type": [1]},
    ],
    "aliases": {"dia.1": "bbox", "box.1": "bdia", "o.1": "slash", "o.2": "bslash"},
}

BASIC_DOC = {
    "name": "basic",
    "connectives": [
        {"name": "dia", "family": "F", "arity": 1, "order_type": [1]},
        {"name": "box", "family": "G", "arity": 1, "order_type": [1]},
    ],
    "aliases": {"dia.1": "bbox", "box.1": "bdia"},
}

NEGATION_DOC = {
    "name": "negation",
    "connectives": [
        {"name": "tri", "family": "F", "arity": 1, "order_type": ["d"]},
        {"name": "lhd", "family": "G", "arity": 1, "order_type": ["d"]},
    ],
    "aliases": {"tri.1": "btri", "lhd.1": "blhd"},
}


def closed(doc) -> Signature:
    return close_under_residuals(signature_from_json(doc))


# ============================================================================
# Fixtures
# ============================================================================

@pytest.fixture(scope="session")
def corpus() -> Corpus:
    return load_corpus()


@pytest.fixture(scope="session")
def modal_sig() -> Signature:
    return closed(MODAL_DOC)


@pytest.fixture(scope="session")
def basic_sig() -> Signature:
    return closed(BASIC_DOC)


@pytest.fixture(scope="session")
def negation_sig() -> Signature:
    return closed(NEGATION_DOC)


@pytest.fixture(scope="session")
def star_sig(corpus) -> Signature:
    return corpus.signature("signatures/star.json")


@pytest.fixture(scope="session")
def mixed_sig(corpus) -> Signature:
    return corpus.signature("signatures/mixed.json")

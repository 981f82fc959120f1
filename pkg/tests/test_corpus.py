import json

import pytest

from alba import print_clause
from corpus import Corpus, load_corpus, read_clause_file
from errors import CorpusError
from selftest import CheckOutcome, Selftest, SelftestResult


# ──────────────────────────────────────────────────────────────────────────────
# Manifest
# ──────────────────────────────────────────────────────────────────────────────

class TestManifest:

    def test_bundled_corpus(self, corpus):
        assert [case.name for case in corpus.cases] == [
            "diamond_box", "fusion_box", "alternating_chain", "star_dia", "mixed_order", "long_chain",
        ]
        for case in corpus.cases:
            for relative in (case.signature, case.clause, case.rules, case.calculus, case.derivation):
                assert corpus.path(relative).exists(), relative

    def test_pinned_certificate(self, corpus):
        assert corpus.certificate(corpus.case("fusion_box")) is None
        cert = corpus.certificate(corpus.case("mixed_order"))
        assert cert is not None

    def test_unknown_case(self, corpus):
        with pytest.raises(CorpusError, match="no golden case named nowhere"):
            corpus.case("nowhere")

    def test_missing_manifest(self, tmp_path):
        with pytest.raises(CorpusError, match="no corpus manifest"):
            load_corpus(tmp_path)

    @pytest.mark.parametrize("text", ["{", json.dumps({"cases": []})])
    def test_bad_manifest(self, tmp_path, text):
        (tmp_path / "manifest.json").write_text(text)
        with pytest.raises(CorpusError, match="manifest.json"):
            _ = Corpus(tmp_path).manifest

    def test_signatures_are_cached(self, corpus):
        assert corpus.signature("signatures/modal.json") is corpus.signature("signatures/modal.json")


class TestClauseFiles:

    def test_comments_are_skipped(self, tmp_path, modal_sig):
        path = tmp_path / "a.clause"
        path.write_text("# header\n\nforall [j | m] (dia(j) <= m => j <= bbox(m))\n")
        assert print_clause(read_clause_file(path, modal_sig)) == "forall [j | m] (dia(j) <= m => j <= bbox(m))"

    def test_empty_file(self, tmp_path, modal_sig):
        path = tmp_path / "empty.clause"
        path.write_text("# nothing here\n")
        with pytest.raises(CorpusError, match="no clause found"):
            read_clause_file(path, modal_sig)


# ──────────────────────────────────────────────────────────────────────────────
# Selftest
# ──────────────────────────────────────────────────────────────────────────────

class TestSelftest:

    @pytest.fixture(scope="class")
    def result(self, corpus):
        return Selftest(corpus, seed=5, algebras=5, cut_corpus=6, max_size=3).run()

    def test_everything_passes(self, result):
        assert result.ok, result.render()

    def test_every_check_runs(self, result):
        names = {o.name for o in result.outcomes}
        assert {"classify", "lint", "cut-elim/golden", "cut-elim/corpus"} <= names
        assert {f"alba/{n}" for n in ("fusion_box", "long_chain")} <= names
        assert sum(name.startswith("mutant/") for name in names) == 12
        assert {"alba_s", "oracle_s", "cut_corpus_s"} <= set(result.timings)

    def test_summary_line(self, result):
        n = len(result.outcomes)
        assert result.render().splitlines()[-1] == f"{n}/{n} check(s) passed"

    def test_broken_golden_file_is_reported(self, corpus, tmp_path):
        root = tmp_path / "corpus"
        for path in corpus.root.rglob("*"):
            if path.is_file():
                target = root / path.relative_to(corpus.root)
                target.parent.mkdir(parents=True, exist_ok=True)
                target.write_bytes(path.read_bytes())
        (root / "clauses" / "fusion_box.clause").write_text("forall [j | m] (=> j <= m)\n")
        selftest = Selftest(Corpus(root), seed=5, algebras=2, cut_corpus=6, max_size=3)
        selftest.check_alba()
        failures = [o.name for o in selftest.result.failures]
        assert failures == ["alba/fusion_box"]

    def test_outcome_rendering(self):
        result = SelftestResult([CheckOutcome("a", True), CheckOutcome("b", False, "broken")])
        assert result.render().splitlines() == ["[PASS] a", "[FAIL] b: broken", "1/2 check(s) passed"]
        assert not result.ok

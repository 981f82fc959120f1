import json

import pytest

from checker import (
    ROOT, Derivation, build_calculus, check_derivation, congruence_classes, derivation_from_json,
    derivation_to_json, dream_path, height, inception_depth, inhomogeneous_classes, is_cut_free, load_calculus,
    load_derivation, node_at, premise_path, render_derivation, replace_node, size, walk, write_derivation,
)
from errors import DerivationFormatError, KernelError
from kernel import CUT, ID, parse_sequent


# ============================================================================
# Golden cases
# ============================================================================

GOLDEN = ["diamond_box", "fusion_box", "alternating_chain", "star_dia", "mixed_order", "long_chain"]

# path of the inception rule R inside the fusion_box derivation
FUSION_R = "root/p0/p0/p0/p0"


# ──────────────────────────────────────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────────────────────────────────────

def golden(corpus, name):
    return load_derivation(corpus.path(corpus.case(name).derivation))


def load_mutant(corpus, file):
    """The derivation and calculus, or the load error."""
    try:
        d, calc = load_derivation(corpus.path(file))
    except DerivationFormatError as e:
        return None, None, e
    return d, calc, None


# ──────────────────────────────────────────────────────────────────────────────
# Golden derivations
# ──────────────────────────────────────────────────────────────────────────────

class TestGoldenDerivations:

    @pytest.mark.parametrize("name", GOLDEN)
    def test_accepted(self, corpus, name):
        d, calc = golden(corpus, name)
        report = check_derivation(d, calc)
        assert report.ok, report.render()
        assert report.cut_free

    @pytest.mark.parametrize("name", GOLDEN)
    def test_depth_matches_case(self, corpus, name):
        d, calc = golden(corpus, name)
        assert check_derivation(d, calc).depth == corpus.case(name).depth

    def test_endsequent(self, corpus):
        d, _ = golden(corpus, "fusion_box")
        sig = corpus.signature("signatures/modal.json")
        assert d.conclusion == parse_sequent("o(box(o(dia(p), p)), dia(p)) |- p", sig)

    def test_display_macro_expands_to_postulates(self, corpus):
        d, _ = golden(corpus, "fusion_box")
        assert all(node.rule != "display" for _, node, _ in walk(d))
        assert node_at(d, "root/p0").rule.startswith("dp.")
        assert node_at(d, FUSION_R).rule == "R"

    def test_parameters_are_recorded(self, corpus):
        d, calc = golden(corpus, "fusion_box")
        report = check_derivation(d, calc)
        assert report.params == {"N1": FUSION_R}

    def test_render(self, corpus):
        d, calc = golden(corpus, "fusion_box")
        assert check_derivation(d, calc).render().startswith("accepted:")
        assert "[dream 0] box(o(dia(p), p)) |- !box(#N1)    (box_L)" in render_derivation(d)


# ──────────────────────────────────────────────────────────────────────────────
# Mutants
# ──────────────────────────────────────────────────────────────────────────────

class TestMutants:

    def test_enough_mutants(self, corpus):
        assert len(corpus.manifest.mutants) >= 10

    @pytest.mark.parametrize("index", range(12))
    def test_rejected_at_path(self, corpus, index):
        mutant = corpus.manifest.mutants[index]
        d, calc, error = load_mutant(corpus, mutant.file)
        if error is not None:
            assert str(error).startswith(f"{mutant.path}:"), str(error)
            return
        report = check_derivation(d, calc)
        assert not report.ok
        assert mutant.path in {issue.path for issue in report.issues}, report.render()

    @pytest.mark.parametrize("file, message", [
        ("mutants/wrong_rule.json", "expects 2 premise(s), got 1"),
        ("mutants/missing_dream.json", "expects 1 dream(s), got 0"),
        ("mutants/param_escape.json", "used outside its contract"),
        ("mutants/foreign_rule_in_dream.json", "not available in this dream"),
        ("mutants/unknown_rule.json", "not available in the calculus"),
        ("mutants/instantiated_uninstantiable.json", "instantiated with"),
        ("mutants/contract_rule_at_top.json", "not available in this dream"),
    ])
    def test_messages(self, corpus, file, message):
        d, calc, error = load_mutant(corpus, file)
        assert error is None
        assert any(message in issue.message for issue in check_derivation(d, calc).issues)

    def test_sort_clash_is_a_load_error(self, corpus):
        _, _, error = load_mutant(corpus, "mutants/sort_clash.json")
        assert isinstance(error, DerivationFormatError)


# ──────────────────────────────────────────────────────────────────────────────
# Derivation trees
# ──────────────────────────────────────────────────────────────────────────────

class TestDerivationTree:

    @pytest.fixture
    def small(self, modal_sig):
        leaf = Derivation(ID, parse_sequent("p |- p", modal_sig))
        dream = Derivation("box_L", parse_sequent("box(p) |- !box(p)", modal_sig), (leaf,))
        return Derivation("R", parse_sequent("^o(p, ^dia(p)) |- p", modal_sig), (leaf,), (dream,))

    def test_paths(self):
        assert premise_path(ROOT, 0) == "root/p0"
        assert dream_path("root/p0", 1) == "root/p0/d1"

    def test_walk_order(self, small):
        assert [(path, in_dream) for path, _, in_dream in walk(small)] == [
            ("root", False), ("root/p0", False), ("root/d0", True), ("root/d0/p0", True),
        ]

    def test_measures(self, small):
        assert height(small) == 3
        assert size(small) == 4
        assert is_cut_free(small)
        assert inception_depth(small, {"R": 1}.get) == 1

    def test_replace_node(self, small, modal_sig):
        cut = Derivation(CUT, parse_sequent("p |- p", modal_sig), (small.premises[0], small.premises[0]))
        changed = replace_node(small, "root/d0/p0", cut)
        assert node_at(changed, "root/d0/p0").rule == CUT
        assert not is_cut_free(changed)
        assert node_at(small, "root/d0/p0").rule == ID

    def test_bad_path(self, small):
        with pytest.raises(KeyError):
            node_at(small, "top/p0")


# ──────────────────────────────────────────────────────────────────────────────
# Derivation files
# ──────────────────────────────────────────────────────────────────────────────

class TestDerivationFiles:

    def test_write_and_reload(self, corpus, tmp_path):
        d, calc = golden(corpus, "alternating_chain")
        path = tmp_path / "alternating_chain.json"
        write_derivation(d, path)
        again, _ = load_derivation(path, calc)
        assert again == d
        assert check_derivation(again, calc).ok

    def test_bindings_survive(self, corpus):
        d, calc = golden(corpus, "star_dia")
        again = derivation_from_json({"root": derivation_to_json(d)}, calc)
        assert again == d

    def test_missing_calculus(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text(json.dumps({"root": {"rule": "Id", "conclusion": "p |- p"}}))
        with pytest.raises(DerivationFormatError, match="no calculus"):
            load_derivation(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "d.json"
        path.write_text("{")
        with pytest.raises(DerivationFormatError, match="invalid JSON"):
            load_derivation(path)

    def test_bad_sequent_names_its_node(self, corpus):
        calc = load_calculus(corpus.path(corpus.case("fusion_box").calculus))
        doc = {"root": {"rule": "Cut", "conclusion": "p |- p", "premises": [
            {"rule": "Id", "conclusion": "p |- p"},
            {"rule": "Id", "conclusion": "p |- ^dia(p)"},
        ]}}
        with pytest.raises(DerivationFormatError, match="^root/p1: "):
            derivation_from_json(doc, calc)

    def test_display_needs_equivalent_sequents(self, corpus):
        calc = load_calculus(corpus.path(corpus.case("fusion_box").calculus))
        doc = {"root": {"rule": "display", "conclusion": "q |- p", "premises": [
            {"rule": "Id", "conclusion": "p |- p"},
        ]}}
        with pytest.raises(DerivationFormatError, match="not display-equivalent"):
            derivation_from_json(doc, calc)

    def test_binding_for_unknown_variable(self, corpus):
        calc = load_calculus(corpus.path(corpus.case("fusion_box").calculus))
        doc = {"root": {"rule": "Id", "conclusion": "p |- p", "bindings": {"Q": "p"}}}
        with pytest.raises(DerivationFormatError, match="has no variable Q"):
            derivation_from_json(doc, calc)


class TestCalculus:

    def test_golden_calculus(self, corpus):
        calc = load_calculus(corpus.path(corpus.case("fusion_box").calculus))
        assert calc.depth_of("R") == 1
        assert calc.depth_of("R.c0.r0") == 0
        assert calc.depth_of("Id") == 0
        assert calc.depth_of("nope") is None
        assert "R.c0.r0" not in calc.top_env()

    def test_dream_env_adds_contract_rules(self, corpus):
        calc = load_calculus(corpus.path(corpus.case("fusion_box").calculus))
        top = calc.top_env()
        env = calc.dream_env({"extra": top["Id"]})
        assert "extra" in env and "R" not in env

    def test_clashing_rule_names(self, corpus):
        case = corpus.case("fusion_box")
        sig = corpus.signature(case.signature)
        groups = corpus.golden_rules(case)
        with pytest.raises(KernelError, match="Duplicate rule name"):
            build_calculus("twice", sig, groups + groups)


# ──────────────────────────────────────────────────────────────────────────────
# Congruence
# ──────────────────────────────────────────────────────────────────────────────

class TestCongruence:

    def test_metavariable_instances_are_congruent(self, corpus):
        d, calc = golden(corpus, "fusion_box")
        cmap = congruence_classes(d, check_derivation(d, calc))
        # X of R and the antecedent of its contract aim
        assert cmap.congruent((FUSION_R, 0, (0,)), (f"{FUSION_R}/d0", 0, ()))

    def test_classes_are_homogeneous(self, corpus):
        for name in GOLDEN:
            d, calc = golden(corpus, name)
            cmap = congruence_classes(d, check_derivation(d, calc))
            assert inhomogeneous_classes(d, cmap, calc.signature) == []

    def test_identity_link_is_optional(self, corpus):
        d, calc = golden(corpus, "fusion_box")
        report = check_derivation(d, calc)
        leaf = f"{FUSION_R}/p0"
        assert node_at(d, leaf).rule == ID
        assert not congruence_classes(d, report).congruent((leaf, 0, ()), (leaf, 1, ()))
        assert congruence_classes(d, report, link_identity=True).congruent((leaf, 0, ()), (leaf, 1, ()))

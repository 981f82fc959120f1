import numpy as np
import pytest

from checker import Derivation, check_derivation, is_cut_free, load_calculus, load_derivation, node_at
from cutelim import (
    CutMeasure, contract_conclusions, cut, cut_measure, cut_sites, eliminate_all_cuts, generate_cut_corpus, idexp,
    insert_random_cut, rebuild_witness, reduce_principal, substitute_application, uppermost_cut,
)
from dto import ReductionKind
from errors import CutEliminationError
from kernel import (
    CUT, ID, FormulaLeaf, MetaVar, parse_sequent, print_sequent, print_structure, sequent_metavars, sequent_positions,
)
from syntax import Atom, parse_formula


# ============================================================================
# Corpus sizes
# ============================================================================

GOLDEN = ["diamond_box", "fusion_box", "alternating_chain", "star_dia", "mixed_order", "long_chain"]
PER_CASE = 17  # six cases, at least a hundred derivations
SEED = 42


# ──────────────────────────────────────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────────────────────────────────────

def golden(corpus, name):
    return load_derivation(corpus.path(corpus.case(name).derivation))


def assert_decreasing(result):
    for record in result.trace:
        if record.after is not None:
            assert record.after < record.before, record.render()


def id_node(text, sig):
    return Derivation(ID, parse_sequent(text, sig))


def print_sides(d):
    return print_structure(d.conclusion.ante), print_structure(d.conclusion.succ)


# ──────────────────────────────────────────────────────────────────────────────
# Worked reduction
# ──────────────────────────────────────────────────────────────────────────────

class TestGoldenReduction:

    @pytest.fixture(scope="class")
    def run(self, corpus):
        spec = corpus.manifest.cut_elimination
        d, calc = load_derivation(corpus.path(spec.derivation))
        return spec, d, calc, eliminate_all_cuts(d, calc)

    def test_input_has_a_cut(self, run):
        _, d, calc, _ = run
        assert check_derivation(d, calc).ok
        assert not is_cut_free(d)

    def test_endsequent_is_kept(self, run):
        spec, _, calc, result = run
        assert result.derivation.conclusion == parse_sequent(spec.endsequent, calc.signature)

    def test_output_checks_and_is_cut_free(self, run):
        _, _, calc, result = run
        report = check_derivation(result.derivation, calc)
        assert report.ok, report.render()
        assert report.cut_free

    def test_trace_starts_with_a_parametric_push_and_rebuilds(self, run):
        _, _, _, result = run
        kinds = result.kinds()
        assert kinds[0] is ReductionKind.PARAMETRIC
        assert ReductionKind.REBUILD in kinds
        assert result.steps >= 1

    def test_measure_decreases(self, run):
        assert_decreasing(run[3])

    def test_trace_renders(self, run):
        _, _, _, result = run
        lines = result.render_trace().splitlines()
        assert len(lines) == len(result.trace)
        assert "parametric" in lines[0]
        assert {"check_s", "reduce_s", "total_s"} <= set(result.timings)


# ──────────────────────────────────────────────────────────────────────────────
# Generated corpus
# ──────────────────────────────────────────────────────────────────────────────

class TestCutCorpus:

    @pytest.mark.parametrize("name", GOLDEN)
    def test_every_cut_is_eliminated(self, corpus, name):
        d, calc = golden(corpus, name)
        derivations = generate_cut_corpus([d], calc, PER_CASE, SEED)
        assert len(derivations) == PER_CASE
        for with_cuts in derivations:
            assert not is_cut_free(with_cuts)
            assert check_derivation(with_cuts, calc).ok
            result = eliminate_all_cuts(with_cuts, calc)
            assert result.derivation.conclusion == d.conclusion
            assert is_cut_free(result.derivation)
            assert check_derivation(result.derivation, calc).ok
            assert_decreasing(result)

    def test_corpus_size(self, corpus):
        total = 0
        for name in GOLDEN:
            d, calc = golden(corpus, name)
            total += len(generate_cut_corpus([d], calc, PER_CASE, SEED))
        assert total >= 100

    def test_generation_is_deterministic(self, corpus):
        d, calc = golden(corpus, "fusion_box")
        assert generate_cut_corpus([d], calc, 5, SEED) == generate_cut_corpus([d], calc, 5, SEED)
        assert generate_cut_corpus([d], calc, 5, SEED)[3] == generate_cut_corpus([d], calc, 4, SEED)[3]

    def test_no_input(self, corpus):
        calc = load_calculus(corpus.path(corpus.case("fusion_box").calculus))
        assert generate_cut_corpus([], calc, 5, SEED) == []


class TestCutInsertion:

    @pytest.mark.parametrize("text", ["p", "dia(p)", "box(o(dia(p), p))", "p & q", "p | dia(q)", "top", "bot"])
    def test_identity_expansion_checks(self, corpus, text):
        calc = load_calculus(corpus.path(corpus.case("fusion_box").calculus))
        f = parse_formula(text, calc.signature)
        d = idexp(f, calc.signature)
        report = check_derivation(d, calc)
        assert report.ok, report.render()
        assert print_sides(d) == (text, text)

    def test_insert_keeps_endsequent(self, corpus):
        d, calc = golden(corpus, "fusion_box")
        with_cut = insert_random_cut(d, calc, np.random.default_rng(1))
        assert with_cut.conclusion == d.conclusion
        assert not is_cut_free(with_cut)
        assert check_derivation(with_cut, calc).ok

    def test_sites_have_a_formula_side(self, corpus):
        d, _ = golden(corpus, "fusion_box")
        sites = cut_sites(d)
        assert "root" in sites
        assert all(node_at(d, path).rule != "Cut" for path in sites)


# ──────────────────────────────────────────────────────────────────────────────
# Single reductions
# ──────────────────────────────────────────────────────────────────────────────

class TestReductions:

    @pytest.fixture
    def calc(self, corpus):
        return load_calculus(corpus.path(corpus.case("fusion_box").calculus))

    def test_identity_premise_is_dropped(self, calc):
        sig = calc.signature
        d = cut(id_node("p |- p", sig), id_node("p |- p", sig))
        assert uppermost_cut(d) == "root"
        result = eliminate_all_cuts(d, calc)
        assert result.derivation.rule == ID
        assert result.kinds() == [ReductionKind.AXIOM]

    def test_cut_on_a_compound_formula(self, calc):
        sig = calc.signature
        f = parse_formula("dia(o(p, box(q)))", sig)
        d = cut(idexp(f, sig), idexp(f, sig))
        result = eliminate_all_cuts(d, calc)
        assert result.derivation.conclusion == d.conclusion
        assert check_derivation(result.derivation, calc).ok
        assert ReductionKind.AXIOM not in result.kinds()[:1]
        assert_decreasing(result)

    def test_uppermost_cut_prefers_the_innermost(self, calc):
        sig = calc.signature
        inner = cut(id_node("p |- p", sig), id_node("p |- p", sig))
        d = cut(inner, id_node("p |- p", sig))
        assert uppermost_cut(d) == "root/p0"

    def test_rejects_a_derivation_that_does_not_check(self, calc):
        sig = calc.signature
        d = cut(id_node("p |- p", sig), id_node("q |- q", sig))
        with pytest.raises(CutEliminationError, match="does not check") as info:
            eliminate_all_cuts(d, calc)
        assert info.value.path == "root"

    def test_step_limit(self, calc):
        sig = calc.signature
        d = cut(id_node("p |- p", sig), id_node("p |- p", sig))
        with pytest.raises(CutEliminationError, match="gave up after 0"):
            eliminate_all_cuts(d, calc, max_steps=0)

    def test_principal_cut_on_a_diamond(self, calc):
        sig = calc.signature
        f = parse_formula("dia(p)", sig)
        node = cut(idexp(f, sig).premises[0], idexp(f, sig))
        result, measures = reduce_principal(node, calc)
        assert result.conclusion == node.conclusion
        assert check_derivation(result, calc).ok
        assert [m.complexity for m in measures] == [0]

    def test_principal_cut_on_a_box(self, calc):
        sig = calc.signature
        f = parse_formula("box(p)", sig)
        node = cut(idexp(f, sig), idexp(f, sig).premises[0])
        result, measures = reduce_principal(node, calc)
        assert print_sequent(result.conclusion) == "box(p) |- !box(p)"
        assert check_derivation(result, calc).ok
        assert len(measures) == 1

    def test_principal_cut_on_a_meet(self, calc):
        sig = calc.signature
        right = Derivation("and_L1", parse_sequent("p & q |- p", sig), (id_node("p |- p", sig),))
        result, measures = reduce_principal(cut(idexp(parse_formula("p & q", sig), sig), right), calc)
        assert result.rule == CUT
        assert print_sides(result) == ("p & q", "p")
        assert check_derivation(result, calc).ok
        assert [m.complexity for m in measures] == [0]

    def test_principal_needs_matching_introductions(self, calc):
        sig = calc.signature
        f = parse_formula("dia(p)", sig)
        with pytest.raises(CutEliminationError, match="not matching introductions"):
            reduce_principal(cut(idexp(f, sig), idexp(f, sig)), calc)

    def test_no_principal_reduction_on_an_atom(self, calc):
        sig = calc.signature
        with pytest.raises(CutEliminationError, match="no principal reduction"):
            reduce_principal(cut(id_node("p |- p", sig), id_node("p |- p", sig)), calc)


# ──────────────────────────────────────────────────────────────────────────────
# Substituted applications and rebuilt witnesses
# ──────────────────────────────────────────────────────────────────────────────

class TestSubstitution:

    def test_substitution_reaches_nested_premises(self, corpus):
        _, calc = golden(corpus, "alternating_chain")
        sig = calc.signature
        rule = calc.lookup("R")
        sigma = {"X": FormulaLeaf(Atom("p")), "Y": FormulaLeaf(Atom("q"))}
        replacement = parse_sequent("^bdia(p) |- q", sig).ante
        new = substitute_application(rule, sigma, [(0, ())], replacement, sig)
        assert new.name == "R[^bdia(p)]"
        assert [print_sequent(r.conclusion) for r in new.closure()] == [
            "^bdia(p) |- q", "N |- !box(K)", "H |- !box(L)",
        ]
        assert print_sequent(new.contracts[0].aim) == "^dia(N) |- q"
        innermost = list(new.closure())[-1]
        assert [print_sequent(s) for s in innermost.premises] == ["^dia(^bdia(p)) |- L"]
        assert contract_conclusions(new) == contract_conclusions(rule)

    @pytest.mark.parametrize("name", GOLDEN)
    def test_contract_conclusions_ignore_the_endsequent(self, corpus, name):
        _, calc = golden(corpus, name)
        sig = calc.signature
        p, q = FormulaLeaf(Atom("p")), FormulaLeaf(Atom("q"))
        scanned = 0
        for rule in calc.rules:
            if not rule.contracts:
                continue
            sigma = {mv.name: p for mv in sequent_metavars(rule.conclusion)}
            for pos, sub in sequent_positions(rule.conclusion):
                if isinstance(sub, MetaVar):
                    new = substitute_application(rule, sigma, [pos], q, sig)
                    assert contract_conclusions(new) == contract_conclusions(rule), (rule.name, pos)
                    scanned += 1
        assert scanned > 0

    def test_introduced_formula_is_not_a_parameter(self, corpus):
        _, calc = golden(corpus, "fusion_box")
        q = FormulaLeaf(Atom("q"))
        with pytest.raises(CutEliminationError, match="not a parameter"):
            substitute_application(calc.lookup("dia_L"), {"A1": Atom("p"), "W": q}, [(0, ())], q, calc.signature)


class TestWitness:

    @pytest.fixture
    def calc(self, corpus):
        return load_calculus(corpus.path(corpus.case("fusion_box").calculus))

    def test_succedent_occurrence_is_cut_against_the_bridge(self, calc):
        sig = calc.signature
        witness = idexp(parse_formula("box(p)", sig), sig)
        bridge = witness.premises[0]
        aim = parse_sequent("box(p) |- !box(p)", sig)
        rebuilt = rebuild_witness(witness, aim, bridge, calc)
        assert rebuilt.conclusion == aim
        assert rebuilt.rule == CUT
        assert rebuilt.premises == (witness, bridge)
        assert check_derivation(rebuilt, calc).ok

    def test_precedent_occurrence_is_cut_against_the_bridge(self, calc):
        sig = calc.signature
        witness = idexp(parse_formula("dia(p)", sig), sig)
        bridge = witness.premises[0]
        aim = parse_sequent("^dia(p) |- dia(p)", sig)
        rebuilt = rebuild_witness(witness, aim, bridge, calc)
        assert rebuilt.conclusion == aim
        assert rebuilt.premises == (bridge, witness)
        assert check_derivation(rebuilt, calc).ok

    def test_unchanged_aim_keeps_the_witness(self, calc):
        sig = calc.signature
        witness = idexp(parse_formula("box(p)", sig), sig)
        assert rebuild_witness(witness, witness.conclusion, witness.premises[0], calc) is witness

    def test_aim_must_differ_only_by_the_bridge(self, calc):
        sig = calc.signature
        witness = idexp(parse_formula("box(p)", sig), sig)
        aim = parse_sequent("box(p) |- !box(q)", sig)
        with pytest.raises(CutEliminationError, match="differ beyond"):
            rebuild_witness(witness, aim, witness.premises[0], calc)


class TestMeasure:

    def test_lexicographic(self):
        assert CutMeasure(0, 9, 9) < CutMeasure(1, 0, 0)
        assert CutMeasure(1, 2, 9) < CutMeasure(1, 3, 0)
        assert CutMeasure(1, 2, 3) < CutMeasure(1, 2, 4)
        assert str(CutMeasure(1, 2, 3)) == "(1, 2, 3)"

    def test_cut_measure_of_golden_input(self, corpus):
        spec = corpus.manifest.cut_elimination
        d, calc = load_derivation(corpus.path(spec.derivation))
        node = node_at(d, uppermost_cut(d))
        left, right = node.premises
        measure = cut_measure(left, right, left.conclusion.succ.formula, calc.depth_of)
        assert measure.inception_depth >= 1
        assert measure.height >= 2

import json

import pytest

from alba import parse_clause, run_alba
from dto import RuleKind, Sort
from errors import RuleGenerationError
from kernel import InceptionRule, lint_calculus, lint_closure, lint_rule, parse_sequent, print_sequent
from rulegen import (
    check_analytic, check_closure, flatten, load_rules, render_groups, render_mapping, render_rule_tree,
    rule_differences, rule_from_json, rule_to_json, rules_from_json, rules_match, translate, translate_run,
    translate_with_mapping, write_rules,
)
from syntax import parse_inequality


# ============================================================================
# Golden cases
# ============================================================================

GOLDEN_DEPTHS = [
    ("diamond_box", 1),
    ("fusion_box", 1),
    ("alternating_chain", 2),
    ("star_dia", 1),
    ("mixed_order", 1),
    ("long_chain", 3),
]

LINT_CONDITIONS = ("C1", "C2", "C3", "C4", "C5", "fresh-aims", "contract-conclusions")


# ──────────────────────────────────────────────────────────────────────────────
# Helpers
# ──────────────────────────────────────────────────────────────────────────────

def generated(corpus, name):
    case = corpus.case(name)
    sig = corpus.signature(case.signature)
    run = run_alba(corpus.axiom(case), sig, corpus.certificate(case))
    return case, sig, translate_run(run, sig)


def rule_doc(conclusion, premises=(), contracts=()):
    return {"name": "T", "premises": list(premises), "contracts": list(contracts), "conclusion": conclusion}


# ──────────────────────────────────────────────────────────────────────────────
# Golden rules
# ──────────────────────────────────────────────────────────────────────────────

class TestGoldenRules:

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_matches_golden_rules(self, corpus, name):
        case, _, group = generated(corpus, name)
        expected = flatten(corpus.golden_rules(case))
        assert rule_differences(expected, group.rules) == []

    @pytest.mark.parametrize("name, depth", GOLDEN_DEPTHS)
    def test_depth(self, corpus, name, depth):
        _, _, group = generated(corpus, name)
        assert [r.depth for r in group.rules] == [depth]

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_closure_passes_lint(self, corpus, name):
        _, sig, group = generated(corpus, name)
        for report in lint_closure(group.rules[0], sig):
            for condition in LINT_CONDITIONS:
                assert report.passed(condition), (report.rule, report.problems)

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_contract_rules_are_analytic(self, corpus, name):
        _, _, group = generated(corpus, name)
        assert check_closure(group.rules[0]) == {}

    def test_top_rule_is_an_inception_rule(self, corpus):
        _, _, group = generated(corpus, "fusion_box")
        rule = group.rules[0]
        assert rule.kind is RuleKind.INCEPTION
        assert [print_sequent(p) for p in rule.premises] == ["Y |- Z"]
        assert print_sequent(rule.contracts[0].aim) == "X |- !box(N)"
        assert [v.name for v in rule.contracts[0].uninstantiable] == ["N"]
        assert print_sequent(rule.conclusion) == "^o(X, ^dia(Y)) |- Z"

    def test_analytic_axioms_give_analytic_rules(self, corpus):
        sig = corpus.analytic_signature()
        for ineq in corpus.analytic_axioms():
            for rule in translate_run(run_alba(ineq, sig), sig).rules:
                assert rule.depth == 0
                assert check_analytic(rule) == []
                assert all(r.ok for r in lint_closure(rule, sig))


# ──────────────────────────────────────────────────────────────────────────────
# Translation
# ──────────────────────────────────────────────────────────────────────────────

class TestTranslation:

    def test_flat_clause(self, basic_sig):
        clause = parse_clause("forall [j | m] (dia(j) <= m => j <= bbox(m))", basic_sig)
        translation = translate_with_mapping(clause, basic_sig)
        rule = translation.rule
        assert rule.depth == 0 and rule.kind is RuleKind.STRUCTURAL
        assert [print_sequent(p) for p in rule.premises] == ["^dia(X) |- Y"]
        assert print_sequent(rule.conclusion) == "X |- !bbox(Y)"
        assert translation.table() == {"R/j": "X", "R/m": "Y"}
        assert [e.sort for e in translation.mapping] == [Sort.F, Sort.G]

    def test_nested_names_come_from_their_own_pool(self, basic_sig):
        clause = parse_clause("forall [j | m] (forall [ | n] (dia(j) <= n => j <= box(n)) => j <= m)", basic_sig)
        rule = translate(clause, basic_sig, name="Q")
        assert rule.name == "Q"
        assert rule.contracts[0].uninstantiable[0].name == "N"
        assert print_sequent(rule.contracts[0].aim) == "X |- !box(N)"
        assert [r.name for r in rule.contracts[0].rules] == ["Q.c0.r0"]

    def test_split_axiom_names_components(self, modal_sig):
        run = run_alba(parse_inequality("dia(p | q) <= r", modal_sig), modal_sig)
        group = translate_run(run, modal_sig)
        assert [r.name for r in group.rules] == ["R0", "R1"]

    def test_variable_without_bounds(self, modal_sig):
        run = run_alba(parse_inequality("box(p) <= q | r", modal_sig), modal_sig)
        rules = translate_run(run, modal_sig).rules
        assert [(len(r.premises), r.depth) for r in rules] == [(0, 0)]

    def test_unsafe_clause_is_rejected(self, basic_sig):
        clause = parse_clause("forall [j | m] (j <= p => j <= m)", basic_sig)
        with pytest.raises(RuleGenerationError, match="polarity-safe|Propositional"):
            translate(clause, basic_sig)

    def test_renderings(self, corpus):
        _, _, group = generated(corpus, "fusion_box")
        tree = render_rule_tree(group.rules[0])
        assert "[R] depth 1" in tree and "[R.c0.r0] depth 0" in tree
        assert render_mapping(group.translations[0]).splitlines()[0].split() == [
            "scope", "variable", "metavariable", "sort",
        ]
        assert render_groups([group]).startswith("# o(box(o(dia(p), p)), dia(p)) <= p")


# ──────────────────────────────────────────────────────────────────────────────
# Rules files
# ──────────────────────────────────────────────────────────────────────────────

class TestRulesFiles:

    def test_write_and_load(self, corpus, tmp_path):
        _, sig, group = generated(corpus, "alternating_chain")
        path = tmp_path / "alternating_chain.rules.json"
        write_rules([group], sig, path)
        loaded = load_rules(path, sig)
        assert rules_match(flatten(loaded)[0], group.rules[0])
        assert loaded[0].translations[0].mapping == group.translations[0].mapping

    def test_rule_json_carries_depth(self, corpus):
        _, _, group = generated(corpus, "long_chain")
        assert rule_to_json(group.rules[0])["depth"] == 3

    def test_declared_depth_must_agree(self, modal_sig):
        doc = dict(rule_doc("X |- Y"), depth=2)
        with pytest.raises(RuleGenerationError, match="declared depth 2"):
            rule_from_json(doc, modal_sig)

    def test_unknown_uninstantiable(self, modal_sig):
        doc = rule_doc("X |- Z", contracts=[{"aim": "X |- !box(N)", "uninstantiable": ["M"], "rules": []}])
        with pytest.raises(RuleGenerationError, match="occur nowhere"):
            rule_from_json(doc, modal_sig)

    def test_ill_sorted_sequent_names_its_place(self, modal_sig):
        with pytest.raises(RuleGenerationError, match="T premise 0"):
            rule_from_json(rule_doc("X |- Y", premises=["X |- ^dia(Y)"]), modal_sig)

    def test_schema_violation(self, modal_sig):
        with pytest.raises(RuleGenerationError):
            rules_from_json({"groups": [{"axiom": "p <= p"}]}, modal_sig)

    def test_invalid_json(self, modal_sig, tmp_path):
        path = tmp_path / "broken.rules.json"
        path.write_text("[")
        with pytest.raises(RuleGenerationError, match="invalid JSON"):
            load_rules(path, modal_sig)

    def test_golden_files_round_trip_through_json(self, corpus):
        case = corpus.case("star_dia")
        sig = corpus.signature(case.signature)
        doc = json.loads(corpus.path(case.rules).read_text())
        rule = rule_from_json(doc["groups"][0]["rules"][0], sig)
        assert rules_match(rule_from_json(rule_to_json(rule), sig), rule)


# ──────────────────────────────────────────────────────────────────────────────
# Lint
# ──────────────────────────────────────────────────────────────────────────────

class TestLint:

    def test_repeated_conclusion_metavariable(self, modal_sig):
        rule = InceptionRule("bad", (), (), parse_sequent("^o(X, X) |- Y", modal_sig))
        report = lint_rule(rule, modal_sig)
        assert not report.passed("C3")
        assert check_analytic(rule) == ["bad: X occurs 2 times in the conclusion"]

    def test_premise_formula_outside_conclusion(self, modal_sig):
        rule = InceptionRule("bad", (parse_sequent("q |- Y", modal_sig),), (), parse_sequent("p |- Y", modal_sig))
        assert not lint_rule(rule, modal_sig).passed("C1")

    def test_nested_formula_in_conclusion(self, modal_sig):
        rule = InceptionRule("bad", (), (), parse_sequent("^dia(p) |- Y", modal_sig))
        assert not lint_rule(rule, modal_sig).passed("C5")

    def test_stray_premise_metavariable(self, modal_sig):
        rule = InceptionRule("bad", (parse_sequent("X |- W", modal_sig),), (), parse_sequent("X |- Y", modal_sig))
        assert check_analytic(rule) == ["bad: premise 0 introduces W"]

    def test_aim_must_use_conclusion_variables(self, modal_sig):
        doc = rule_doc("X |- Z", contracts=[{"aim": "U |- !box(N)", "uninstantiable": ["N"], "rules": []}])
        report = lint_rule(rule_from_json(doc, modal_sig), modal_sig)
        assert not report.passed("fresh-aims")

    def test_contract_rule_may_not_conclude_with_outer_variables(self, modal_sig):
        inner = {"name": "T.c0.r0", "premises": [], "conclusion": "K |- Z"}
        doc = rule_doc("X |- Z", contracts=[{"aim": "X |- !box(N)", "uninstantiable": ["N"], "rules": [inner]}])
        report = lint_rule(rule_from_json(doc, modal_sig), modal_sig)
        assert not report.passed("contract-conclusions")

    def test_calculus_lint_reports_missing_introductions(self, corpus):
        _, sig, group = generated(corpus, "fusion_box")
        result = lint_calculus(group.rules, sig)
        assert "dia_L" in result.missing_introductions
        assert not result.ok

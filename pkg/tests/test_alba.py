import pytest

from alba import (
    AlbaState, ackermann_eliminate, alpha_equivalent, canonical_form, first_approximation, free_variables,
    is_polarity_safe, normal_form, parse_clause, print_clause, render_clause, run_alba, shadowed_bindings,
    solve_for_variable, unravel_step,
)
from dto import AlbaStep, Polarity
from errors import AlbaError, NotInductiveError
from syntax import (
    Atom, Conn, Conominal, Inequality, Nominal, find_inductive_certificate, parse_inequality, print_inequality,
    walk,
)


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


def golden_run(corpus, name):
    case = corpus.case(name)
    sig = corpus.signature(case.signature)
    return case, run_alba(corpus.axiom(case), sig, corpus.certificate(case))


# ──────────────────────────────────────────────────────────────────────────────
# Pipeline
# ──────────────────────────────────────────────────────────────────────────────

class TestGoldenOutputs:

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_matches_golden_clause(self, corpus, name):
        case, run = golden_run(corpus, name)
        expected = corpus.golden_clause(case)
        assert alpha_equivalent(run.clause, expected), print_clause(run.clause)

    @pytest.mark.parametrize("name, depth", GOLDEN_DEPTHS)
    def test_nesting_gives_depth(self, corpus, name, depth):
        _, run = golden_run(corpus, name)
        assert run.clause.depth() == depth

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_no_atoms_survive(self, corpus, name):
        _, run = golden_run(corpus, name)
        assert not any(isinstance(v, Atom) for v in free_variables(run.clause))

    def test_analytic_axioms_run(self, corpus):
        sig = corpus.analytic_signature()
        for ineq in corpus.analytic_axioms():
            assert run_alba(ineq, sig).clauses


class TestPipeline:

    def test_trace_order(self, modal_sig):
        run = run_alba(parse_inequality("dia(box(p)) <= box(dia(box(p)))", modal_sig), modal_sig)
        steps = [record.step for record in run.trace]
        assert steps[0] is AlbaStep.FIRST_APPROX
        assert AlbaStep.ACKERMANN in steps
        assert steps.index(AlbaStep.FIRST_APPROX) < steps.index(AlbaStep.ACKERMANN)

    def test_trace_records_render(self, modal_sig):
        run = run_alba(parse_inequality("dia(p) <= p", modal_sig), modal_sig)
        for record in run.trace:
            assert record.render().startswith(record.step.value)

    def test_timings(self, modal_sig):
        run = run_alba(parse_inequality("dia(p) <= p", modal_sig), modal_sig)
        assert {"certificate_s", "split_s", "alba_s"} <= set(run.timings)

    def test_non_inductive_axiom(self, modal_sig):
        with pytest.raises(NotInductiveError, match="not"):
            run_alba(parse_inequality("box(dia(p)) <= dia(box(p))", modal_sig), modal_sig)

    def test_split_axiom_has_one_clause_per_component(self, modal_sig):
        run = run_alba(parse_inequality("dia(p | q) <= r", modal_sig), modal_sig)
        assert len(run.clauses) == 2
        with pytest.raises(AlbaError, match="2 definite components"):
            _ = run.clause

    def test_trivial_antecedents_are_dropped(self, modal_sig):
        run = run_alba(parse_inequality("box(p) <= q | r", modal_sig), modal_sig)
        expected = parse_clause("forall [j | m] (=> j <= m)", modal_sig)
        assert alpha_equivalent(run.clause, expected), print_clause(run.clause)
        assert any("trivial antecedent" in record.detail for record in run.trace)

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_nested_clauses_bind_only_fresh_names(self, corpus, name):
        _, run = golden_run(corpus, name)
        assert shadowed_bindings(run.clause) == []

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_extractor_variables_occur_once_in_the_goal(self, corpus, name):
        _, run = golden_run(corpus, name)
        consequent = run.clause.consequent
        goal = [
            leaf.name for side in (consequent.lhs, consequent.rhs) for leaf in walk(side)
            if isinstance(leaf, (Nominal, Conominal))
        ]
        for variable in run.clause.bound:
            assert goal.count(variable) == 1, variable


# ──────────────────────────────────────────────────────────────────────────────
# Clauses
# ──────────────────────────────────────────────────────────────────────────────

class TestClause:

    def test_golden_text_prints_back(self, corpus):
        case = corpus.case("fusion_box")
        path = corpus.path(case.clause)
        text = [line for line in path.read_text().splitlines() if line and not line.startswith("#")][0]
        assert print_clause(corpus.golden_clause(case)) == text

    def test_binding(self, modal_sig):
        clause = parse_clause("forall [j | m] (j <= p => dia(j) <= m)", modal_sig)
        assert clause.nominals == ("j",) and clause.conominals == ("m",)
        assert clause.consequent.lhs.args[0] == Nominal("j")
        assert clause.consequent.rhs == Conominal("m")
        assert free_variables(clause) == [Atom("p")]

    @pytest.mark.parametrize("text, nesting, depth", [
        ("forall [j | m] (=> j <= m)", 0, 0),
        ("forall [j | m] (forall [ | n] (j <= n => j <= n) => j <= m)", 1, 1),
        ("forall [j | m] (forall [ | n] (forall [i | ] (i <= n => i <= n) => j <= n) => j <= m)", 2, 1),
    ])
    def test_nesting(self, modal_sig, text, nesting, depth):
        clause = parse_clause(text, modal_sig)
        assert clause.nesting() == nesting
        assert clause.depth() == depth

    def test_render_is_multiline(self, corpus):
        case = corpus.case("alternating_chain")
        text = render_clause(corpus.golden_clause(case))
        assert text.count("forall") == 5
        assert text.splitlines()[0].startswith("forall [j | m]")


class TestClauseMatching:

    def test_renaming(self, modal_sig):
        a = parse_clause("forall [j | m] (dia(j) <= m => j <= m)", modal_sig)
        b = parse_clause("forall [i | n] (dia(i) <= n => i <= n)", modal_sig)
        assert alpha_equivalent(a, b)
        assert canonical_form(a) == canonical_form(b)

    def test_antecedent_and_quantifier_order(self, modal_sig):
        a = parse_clause("forall [i, j | m] (i <= m, dia(j) <= m => o(i, j) <= m)", modal_sig)
        b = parse_clause("forall [j, i | m] (dia(i) <= m, j <= m => o(j, i) <= m)", modal_sig)
        assert not alpha_equivalent(a, b)
        assert normal_form(a) == normal_form(b)

    def test_different_shapes(self, modal_sig):
        a = parse_clause("forall [j | m] (dia(j) <= m => j <= m)", modal_sig)
        b = parse_clause("forall [j | m] (box(j) <= m => j <= m)", modal_sig)
        assert not alpha_equivalent(a, b)
        assert normal_form(a) != normal_form(b)

    def test_swapped_binders_do_not_match(self, modal_sig):
        a = parse_clause("forall [i, j | m] (i <= m => o(i, dia(j)) <= m)", modal_sig)
        b = parse_clause("forall [i, j | m] (j <= m => o(i, dia(j)) <= m)", modal_sig)
        assert not alpha_equivalent(a, b)
        assert normal_form(a) != normal_form(b)

    def test_shadowed_bindings(self, modal_sig):
        clause = parse_clause("forall [j | m] (forall [ | m] (j <= m => j <= m) => j <= m)", modal_sig)
        assert shadowed_bindings(clause) == ["m"]
        assert shadowed_bindings(parse_clause("forall [j | m] (=> j <= m)", modal_sig)) == []


# ──────────────────────────────────────────────────────────────────────────────
# Single steps
# ──────────────────────────────────────────────────────────────────────────────

def box(f):
    return Conn("box", (f,))


def dia(f):
    return Conn("dia", (f,))


def fusion(a, b):
    return Conn("o", (a, b))


def state_with(inequalities, goal, epsilon=None, nominals=("i0",), conominals=("m0",)):
    return AlbaState(
        epsilon=dict(epsilon or {}),
        nominals=list(nominals),
        conominals=list(conominals),
        inequalities=list(inequalities),
        goal=goal,
    )


class TestFirstApproximation:

    @pytest.mark.parametrize("axiom, expected", [
        ("p <= p", "forall [i0 | m0] (i0 <= p, p <= m0 => i0 <= m0)"),
        (
            "o(box(o(dia(p), p)), dia(p)) <= p",
            "forall [i0, i1 | m0] (i0 <= box(o(dia(p), p)), i1 <= p, p <= m0 => o(i0, dia(i1)) <= m0)",
        ),
        (
            "p <= dia(box(dia(box(dia(p)))))",
            "forall [i0 | m0] (i0 <= p, dia(box(dia(box(dia(p))))) <= m0 => i0 <= m0)",
        ),
    ])
    def test_cuts_at_pia_roots(self, modal_sig, axiom, expected):
        ineq = parse_inequality(axiom, modal_sig)
        state = first_approximation(ineq, find_inductive_certificate(ineq, modal_sig), modal_sig)
        assert print_clause(state.as_clause()) == expected
        assert [record.step for record in state.trace] == [AlbaStep.FIRST_APPROX]

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_fresh_variables_occur_once_in_the_goal(self, corpus, name):
        case = corpus.case(name)
        sig = corpus.signature(case.signature)
        ineq = corpus.axiom(case)
        state = first_approximation(ineq, corpus.certificate(case) or find_inductive_certificate(ineq, sig), sig)
        goal = [
            leaf.name for side in (state.goal.lhs, state.goal.rhs) for leaf in walk(side)
            if isinstance(leaf, (Nominal, Conominal))
        ]
        assert sorted(goal) == sorted(state.nominals + state.conominals)

    def test_needs_a_certificate(self, modal_sig):
        with pytest.raises(NotInductiveError):
            first_approximation(parse_inequality("box(dia(p)) <= dia(box(p))", modal_sig), None, modal_sig)


class TestSolving:

    def test_box_is_residuated_to_its_left_adjoint(self, modal_sig):
        solved = solve_for_variable(Inequality(Nominal("j"), box(Atom("p"))), "p", Polarity.ONE, modal_sig)
        assert solved == Inequality(Conn("bdia", (Nominal("j"),)), Atom("p"))

    def test_dia_is_residuated_to_its_right_adjoint(self, modal_sig):
        solved = solve_for_variable(Inequality(dia(Atom("p")), Conominal("m")), "p", Polarity.DUAL, modal_sig)
        assert solved == Inequality(Atom("p"), Conn("bbox", (Conominal("m"),)))

    def test_bound_is_kept(self, modal_sig):
        ineq = Inequality(Nominal("j"), Atom("p"))
        assert solve_for_variable(ineq, "p", Polarity.ONE, modal_sig) == ineq

    def test_two_critical_arguments(self, modal_sig):
        ineq = Inequality(fusion(Atom("p"), Atom("p")), Conominal("m"))
        with pytest.raises(AlbaError, match="critical in 2 arguments of 'o'"):
            solve_for_variable(ineq, "p", Polarity.DUAL, modal_sig)


class TestAckermann:

    def test_minimal_valuation_is_substituted(self, modal_sig):
        j, m, p = Nominal("j"), Conominal("m"), Atom("p")
        bdia_j = Conn("bdia", (j,))
        state = state_with(
            [Inequality(bdia_j, p), Inequality(dia(box(p)), m)],
            Inequality(dia(j), box(m)),
            epsilon={"p": Polarity.ONE}, nominals=("j",), conominals=("m",),
        )
        ackermann_eliminate(state, "p", modal_sig)
        assert state.inequalities == [Inequality(dia(box(bdia_j)), m)]
        assert state.goal == Inequality(dia(j), box(m))
        assert "p" not in state.epsilon
        assert state.trace[-1].detail == "eliminated p with 1 bound(s)"

    def test_without_bounds_trivial_antecedents_go(self, modal_sig):
        i, m, p = Nominal("i0"), Conominal("m0"), Atom("p")
        state = state_with([Inequality(p, m), Inequality(i, m)], Inequality(i, m), epsilon={"p": Polarity.ONE})
        ackermann_eliminate(state, "p", modal_sig)
        assert state.inequalities == [Inequality(i, m)]
        assert state.trace[-1].detail == "eliminated p with 0 bound(s), dropped 1 trivial antecedent(s)"

    def test_unsolved_constraint(self, modal_sig):
        state = state_with(
            [Inequality(Nominal("i0"), box(Atom("p")))], Inequality(Nominal("i0"), Conominal("m0")),
            epsilon={"p": Polarity.ONE},
        )
        with pytest.raises(AlbaError, match="Unsolved constraint on p"):
            ackermann_eliminate(state, "p", modal_sig)


class TestUnravel:

    @pytest.fixture
    def state(self):
        i0, i1, m0 = Nominal("i0"), Nominal("i1"), Conominal("m0")
        return state_with(
            [Inequality(i0, box(fusion(dia(m0), m0))), Inequality(i1, m0)],
            Inequality(fusion(i0, dia(i1)), m0),
            nominals=("i0", "i1"),
        )

    def test_offending_rhs_is_nested(self, state, modal_sig):
        unravel_step(state, modal_sig)
        assert [print_inequality(i) for i in state.inequalities] == ["i1 <= m0"]
        assert [print_clause(c) for c in state.clauses] == [
            "forall [ | m1_0] (o(dia(m0), m0) <= m1_0 => i0 <= box(m1_0))"
        ]
        assert state.trace[-1].step is AlbaStep.UNRAVEL

    def test_cut_leaves_stay_free_in_the_nested_clause(self, state, modal_sig):
        unravel_step(state, modal_sig)
        unravel_step(state, modal_sig)
        inner = state.clauses[0].antecedent_clauses[0]
        assert print_clause(inner) == "forall [i2_0, i2_1 | ] (i2_0 <= m0, i2_1 <= m0 => o(dia(i2_0), i2_1) <= m1_0)"
        assert inner.conominals == ()
        assert shadowed_bindings(state.as_clause()) == []

    def test_safe_state_is_unchanged(self, state, modal_sig):
        unravel_step(state, modal_sig)
        unravel_step(state, modal_sig)
        before = (state.as_clause(), len(state.trace))
        unravel_step(state, modal_sig)
        assert (state.as_clause(), len(state.trace)) == before
        assert is_polarity_safe(state.as_clause(), modal_sig)


class TestPolaritySafety:

    @pytest.mark.parametrize("text, safe", [
        ("forall [j | m] (j <= m => j <= m)", True),
        ("forall [j | m] (dia(box(bdia(j))) <= m => dia(j) <= box(m))", False),
    ])
    def test_examples(self, modal_sig, text, safe):
        assert is_polarity_safe(parse_clause(text, modal_sig), modal_sig) is safe

    @pytest.mark.parametrize("name", [name for name, _ in GOLDEN_DEPTHS])
    def test_golden_clauses_are_safe(self, corpus, name):
        case = corpus.case(name)
        assert is_polarity_safe(corpus.golden_clause(case), corpus.signature(case.signature))

"""
Release gate: replays every golden check of the bundled corpus.

Each check appends one `CheckOutcome`; a failing check never stops the
others, so a single run names every broken golden file.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

import config
from alba import AlbaRun, alpha_equivalent, normal_form, print_clause, run_alba
from checker import check_derivation, is_cut_free, load_derivation
from corpus import Corpus
from cutelim import eliminate_all_cuts, generate_cut_corpus
from dto import Polarity, ReductionKind
from errors import DerivationFormatError, InceptionError
from kernel import lint_closure, parse_sequent, print_sequent
from managers import run_sweep
from rulegen import check_closure, flatten, rule_differences, translate_run
from syntax import find_inductive_certificate, inequality_depth, parse_inequality

logger = logging.getLogger(__name__)

LINT_CONDITIONS = ("C1", "C2", "C3", "C4", "C5", "fresh-aims", "contract-conclusions")


@dataclass
class CheckOutcome:
    name: str
    ok: bool
    detail: str = ""

    def render(self) -> str:
        head = "PASS" if self.ok else "FAIL"
        return f"[{head}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class SelftestResult:
    outcomes: List[CheckOutcome] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(o.ok for o in self.outcomes)

    @property
    def failures(self) -> List[CheckOutcome]:
        return [o for o in self.outcomes if not o.ok]

    def render(self) -> str:
        lines = [o.render() for o in self.outcomes]
        lines.append(f"{len(self.outcomes) - len(self.failures)}/{len(self.outcomes)} check(s) passed")
        return "\n".join(lines)


class Selftest:
    def __init__(self, corpus: Corpus, seed: int = config.RANDOM_SEED, algebras: int = 200, cut_corpus: int = 100,
                 max_size: int = config.MAX_ALGEBRA_SIZE):
        self.corpus = corpus
        self.seed = seed
        self.algebras = algebras
        self.cut_corpus = cut_corpus
        self.max_size = max_size
        self.result = SelftestResult()
        self._runs: Dict[str, AlbaRun] = {}

    def outcome(self, name: str, ok: bool, detail: str = "") -> None:
        self.result.outcomes.append(CheckOutcome(name, ok, detail))
        if not ok:
            logger.warning("[selftest] %s failed: %s", name, detail)

    def guarded(self, name: str, fn: Callable[[], None]) -> None:
        try:
            fn()
        except InceptionError as e:
            self.outcome(name, False, f"{type(e).__name__}: {e}")

    def alba_run(self, case) -> AlbaRun:
        if case.name not in self._runs:
            sig = self.corpus.signature(case.signature)
            self._runs[case.name] = run_alba(self.corpus.axiom(case), sig, self.corpus.certificate(case))
        return self._runs[case.name]

    # ────────────────────────────────────────────────────────────────────
    # Checks
    # ────────────────────────────────────────────────────────────────────

    def check_alba(self) -> None:
        for case in self.corpus.cases:
            name = f"alba/{case.name}"

            def one(case=case, name=name):
                got = self.alba_run(case).clause
                want = self.corpus.golden_clause(case)
                if alpha_equivalent(got, want):
                    self.outcome(name, True)
                elif normal_form(got) == normal_form(want):
                    self.outcome(name, False, f"binder or antecedent order differs: {print_clause(got)}")
                else:
                    self.outcome(name, False, print_clause(got))

            self.guarded(name, one)

    def check_rules(self) -> None:
        for case in self.corpus.cases:
            name = f"gen-rules/{case.name}"

            def one(case=case, name=name):
                sig = self.corpus.signature(case.signature)
                generated = translate_run(self.alba_run(case), sig).rules
                problems = rule_differences(flatten(self.corpus.golden_rules(case)), generated)
                depths = [r.depth for r in generated]
                if depths != [case.depth]:
                    problems.append(f"depths {depths}, expected [{case.depth}]")
                self.outcome(name, not problems, "; ".join(problems))

            self.guarded(name, one)

    def check_derivations(self) -> None:
        for case in self.corpus.cases:
            name = f"check/{case.name}"

            def one(case=case, name=name):
                d, calc = load_derivation(self.corpus.path(case.derivation))
                report = check_derivation(d, calc)
                self.outcome(name, report.ok, "; ".join(str(i) for i in report.issues))

            self.guarded(name, one)
        for mutant in self.corpus.manifest.mutants:
            name = f"mutant/{mutant.file}"
            try:
                d, calc = load_derivation(self.corpus.path(mutant.file))
            except DerivationFormatError as e:
                self.outcome(name, str(e).startswith(f"{mutant.path}:"), f"load error {e}")
                continue
            report = check_derivation(d, calc)
            paths = sorted({i.path for i in report.issues})
            self.outcome(name, mutant.path in paths, f"expected an issue at {mutant.path}, got {paths}")

    def check_cut_golden(self) -> None:
        spec = self.corpus.manifest.cut_elimination

        def one():
            d, calc = load_derivation(self.corpus.path(spec.derivation))
            result = eliminate_all_cuts(d, calc)
            kinds = result.kinds()
            endsequent = parse_sequent(spec.endsequent, calc.signature)
            problems = []
            if result.derivation.conclusion != endsequent:
                problems.append(f"endsequent {print_sequent(result.derivation.conclusion)}")
            if not check_derivation(result.derivation, calc).ok:
                problems.append("output does not check")
            if not kinds or kinds[0] is not ReductionKind.PARAMETRIC or ReductionKind.REBUILD not in kinds:
                problems.append(f"trace {[k.value for k in kinds]}")
            self.outcome("cut-elim/golden", not problems, "; ".join(problems))

        self.guarded("cut-elim/golden", one)

    def check_oracle(self) -> None:
        for case in self.corpus.cases:
            name = f"oracle/{case.name}"

            def one(case=case, name=name):
                sweep = run_sweep(
                    self.corpus.signature(case.signature), self.corpus.axiom(case),
                    seed=self.seed, count=self.algebras, max_size=self.max_size,
                )
                self.outcome(name, sweep.ok, f"{len(sweep.mismatches)} mismatch(es)" if not sweep.ok else "")

            self.guarded(name, one)

    def check_cut_corpus(self) -> None:
        cases = self.corpus.cases
        per_case = -(-self.cut_corpus // len(cases))
        eliminated, failures = 0, []
        for case in cases:
            try:
                d, calc = load_derivation(self.corpus.path(case.derivation))
                for i, with_cuts in enumerate(generate_cut_corpus([d], calc, per_case, self.seed)):
                    result = eliminate_all_cuts(with_cuts, calc)
                    if result.derivation.conclusion != d.conclusion or not is_cut_free(result.derivation):
                        failures.append(f"{case.name}#{i}")
                    eliminated += 1
            except InceptionError as e:
                failures.append(f"{case.name}: {e}")
        self.outcome("cut-elim/corpus", not failures and eliminated >= self.cut_corpus,
                     f"{eliminated} eliminated; failures {failures}" if failures else f"{eliminated} eliminated")

    def check_lint(self) -> None:
        problems = []
        for case in self.corpus.cases:
            try:
                sig = self.corpus.signature(case.signature)
                for rule in translate_run(self.alba_run(case), sig).rules:
                    for report in lint_closure(rule, sig):
                        failed = [c for c in LINT_CONDITIONS if not report.passed(c)]
                        if failed:
                            problems.append(f"{case.name}/{report.rule}: {failed}")
                    problems += [f"{case.name}/{n}: {p}" for n, ps in check_closure(rule).items() for p in ps]
            except InceptionError as e:
                problems.append(f"{case.name}: {e}")
        sig = self.corpus.analytic_signature()
        for axiom in self.corpus.analytic_axioms():
            try:
                for rule in translate_run(run_alba(axiom, sig), sig).rules:
                    problems += [f"{n}: {p}" for n, ps in check_closure(rule).items() for p in ps]
            except InceptionError as e:
                problems.append(str(e))
        self.outcome("lint", not problems, "; ".join(problems))

    def check_classification(self) -> None:
        def one():
            problems = []
            modal = self.corpus.signature(self.corpus.case("fusion_box").signature)
            depth = inequality_depth(parse_inequality("o(box(o(dia(p), p)), dia(p)) <= p", modal), modal)
            if depth != 1:
                problems.append(f"depth {depth} for the one-contract axiom")
            sig = self.corpus.analytic_signature()
            for axiom in self.corpus.analytic_axioms():
                cert = find_inductive_certificate(axiom, sig)
                if cert is None or cert.depth != 0 or not cert.analytic:
                    problems.append(f"analytic axiom not reported at depth 0: {axiom}")
            cert = find_inductive_certificate(parse_inequality("dia(box(p)) <= box(dia(box(p)))", modal), modal)
            if cert is None or cert.eps("p") is not Polarity.ONE:
                problems.append("no certificate with ε(p) = 1 for dia(box(p)) <= box(dia(box(p)))")
            self.outcome("classify", not problems, "; ".join(problems))

        self.guarded("classify", one)

    def run(self) -> SelftestResult:
        for name, check in (
            ("classify_s", self.check_classification),
            ("alba_s", self.check_alba),
            ("rules_s", self.check_rules),
            ("lint_s", self.check_lint),
            ("check_s", self.check_derivations),
            ("cut_golden_s", self.check_cut_golden),
            ("cut_corpus_s", self.check_cut_corpus),
            ("oracle_s", self.check_oracle),
        ):
            t0 = time.perf_counter()
            check()
            self.result.timings[name] = time.perf_counter() - t0
        logger.info(
            "[selftest] %d check(s), %d failure(s), %.1fs",
            len(self.result.outcomes), len(self.result.failures), sum(self.result.timings.values()),
        )
        return self.result


def run_selftest(corpus: Corpus, seed: int = config.RANDOM_SEED, algebras: int = 200, cut_corpus: int = 100,
                 max_size: int = config.MAX_ALGEBRA_SIZE) -> SelftestResult:
    return Selftest(corpus, seed, algebras, cut_corpus, max_size).run()

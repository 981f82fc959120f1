"""
Translation of polarity-safe clauses into inception rules.

Nominals become F-sort metavariables and conominals G-sort ones; every
connective becomes its structural proxy. Antecedent inequalities turn into
plain premises and antecedent clauses into contracts whose uninstantiable
variables are the clause's own quantified variables:

    forall [x, y | z] (y <= z, forall [ | n] (... => x <= box(n)) => o(x, dia(y)) <= z)

    Y |- Z    [X |- !box(N)]^{R.c0.r0}_{N}
    --------------------------------------- R
               ^o(X, ^dia(Y)) |- Z
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from alba import AlbaRun, Clause, is_polarity_safe
from dto import Family, Polarity, RuleKind, Sort
from errors import RuleGenerationError
from signature import Signature
from syntax import (
    And, Atom, Bot, Conn, Conominal, Formula, Inequality, Nominal, Or, Top, print_formula, print_inequality,
)
from kernel import (
    STRUCT_BOT, STRUCT_TOP, Contract, InceptionRule, MetaVar, Sequent, Structure, StructConn, print_sequent,
    sequent_metavars, sort_errors,
)

logger = logging.getLogger(__name__)

# metavariables for the variables quantified by the outermost clause
CONCLUSION_POOL = ("X", "Y", "Z", "W", "U", "V")
# metavariables for variables quantified at any deeper level
NESTED_POOL = ("N", "K", "H", "L", "O", "Q", "S", "T")


@dataclass(frozen=True)
class MappingEntry:
    scope: str
    variable: str
    metavariable: str
    sort: Sort


@dataclass
class Translation:
    rule: InceptionRule
    mapping: List[MappingEntry] = field(default_factory=list)

    def table(self) -> Dict[str, str]:
        """`scope/variable -> metavariable`, the form written next to rules files."""
        return {f"{e.scope}/{e.variable}": e.metavariable for e in self.mapping}


class NameSupply:
    """Metavariable names unique across one rule tree, handed out in pre-order."""

    def __init__(self):
        self._used: set = set()

    def take(self, nested: bool) -> str:
        pool = NESTED_POOL if nested else CONCLUSION_POOL
        suffixed = (f"{base}{n}" for n in itertools.count(1) for base in pool)
        name = next(c for c in itertools.chain(pool, suffixed) if c not in self._used)
        self._used.add(name)
        return name


class RuleTranslator:
    def __init__(self, sig: Signature):
        self.sig = sig
        self.names = NameSupply()
        self.mapping: List[MappingEntry] = []

    # ────────────────────────────────────────────────────────────────────────
    # s(.) on formulas and inequalities
    # ────────────────────────────────────────────────────────────────────────

    def structure(self, f: Formula, env: Dict[str, MetaVar], expected: Sort) -> Structure:
        if isinstance(f, (Nominal, Conominal)):
            if f.name not in env:
                raise RuleGenerationError(f"Variable '{f.name}' is not bound by any enclosing quantifier")
            return env[f.name]
        if isinstance(f, Top) and expected is Sort.F:
            return StructConn(STRUCT_TOP, Family.F)
        if isinstance(f, Bot) and expected is Sort.G:
            return StructConn(STRUCT_BOT, Family.G)
        if isinstance(f, Conn):
            if f.name not in self.sig:
                raise RuleGenerationError(f"Unknown connective '{f.name}'")
            spec = self.sig.get(f.name)
            args = []
            for k, arg in enumerate(f.args, start=1):
                base = Sort.of(spec.family)
                args.append(self.structure(arg, env, base if spec.polarity(k) is Polarity.ONE else base.flip()))
            return StructConn(f.name, spec.family, tuple(args))
        if isinstance(f, Atom):
            raise RuleGenerationError(f"Propositional variable '{f.name}' has no structural reading")
        if isinstance(f, (And, Or)):
            raise RuleGenerationError(f"Lattice connective in {print_formula(f)} has no structural counterpart")
        raise RuleGenerationError(f"{print_formula(f)} cannot stand in a {expected.value}-sort position")

    def sequent(self, ineq: Inequality, env: Dict[str, MetaVar]) -> Sequent:
        seq = Sequent(self.structure(ineq.lhs, env, Sort.F), self.structure(ineq.rhs, env, Sort.G))
        problems = sort_errors(seq, self.sig)
        if problems:
            raise RuleGenerationError(f"{print_sequent(seq)} is ill-sorted: {'; '.join(problems)}")
        return seq

    # ────────────────────────────────────────────────────────────────────────
    # Clauses
    # ────────────────────────────────────────────────────────────────────────

    def bind(
        self, clause: Clause, env: Dict[str, MetaVar], scope: str, nested: bool
    ) -> Tuple[Dict[str, MetaVar], List[MetaVar]]:
        inner = dict(env)
        bound = []
        for names, sort in ((clause.nominals, Sort.F), (clause.conominals, Sort.G)):
            for variable in names:
                mv = MetaVar(self.names.take(nested), sort)
                inner[variable] = mv
                bound.append(mv)
                self.mapping.append(MappingEntry(scope, variable, mv.name, sort))
        return inner, bound

    def rule(self, clause: Clause, name: str, env: Dict[str, MetaVar], nested: bool) -> InceptionRule:
        env, _ = self.bind(clause, env, name, nested)
        premises = tuple(self.sequent(i, env) for i in clause.antecedent_ineqs)
        contracts = tuple(
            self.contract(sub, f"{name}.c{k}", env) for k, sub in enumerate(clause.antecedent_clauses)
        )
        conclusion = self.sequent(clause.consequent, env)
        rule = InceptionRule(name=name, premises=premises, contracts=contracts, conclusion=conclusion)
        if rule.depth:
            rule = InceptionRule(name, premises, contracts, conclusion, RuleKind.INCEPTION)
        return rule

    def contract(self, clause: Clause, prefix: str, env: Dict[str, MetaVar]) -> Contract:
        env, uninstantiable = self.bind(clause, env, prefix, nested=True)
        rules: List[InceptionRule] = []
        for ineq in clause.antecedent_ineqs:
            # a bare inequality in a contract reads as an axiom of the contract
            rules.append(InceptionRule(f"{prefix}.r{len(rules)}", (), (), self.sequent(ineq, env)))
        for sub in clause.antecedent_clauses:
            rules.append(self.rule(sub, f"{prefix}.r{len(rules)}", env, nested=True))
        return Contract(
            aim=self.sequent(clause.consequent, env), rules=tuple(rules), uninstantiable=tuple(uninstantiable)
        )


def translate_with_mapping(clause: Clause, sig: Signature, name: str = "R") -> Translation:
    if not is_polarity_safe(clause, sig):
        raise RuleGenerationError("Clause is not polarity-safe")
    translator = RuleTranslator(sig)
    rule = translator.rule(clause, name, {}, nested=False)
    if rule.depth != clause.depth():
        logger.warning("[rulegen] %s: rule depth %d differs from clause depth %d", name, rule.depth, clause.depth())
    logger.info("[rulegen] %s: depth %d, %d contract rule(s)", name, rule.depth, sum(1 for _ in rule.closure()) - 1)
    return Translation(rule, translator.mapping)


def translate(clause: Clause, sig: Signature, name: str = "R") -> InceptionRule:
    return translate_with_mapping(clause, sig, name).rule


def check_analytic(rule: InceptionRule, inherited: Optional[frozenset] = None) -> List[str]:
    """
    Diagnostics for a depth-0 rule: conclusion metavariables occur once and
    every premise metavariable occurs in the conclusion or is `inherited`
    from an enclosing contract.
    """
    inherited = inherited or frozenset()
    problems = []
    if rule.depth:
        problems.append(f"{rule.name} has depth {rule.depth}, analytic rules have depth 0")
    counts = Counter(mv.name for mv in sequent_metavars(rule.conclusion))
    for name, n in sorted(counts.items()):
        if n > 1:
            problems.append(f"{rule.name}: {name} occurs {n} times in the conclusion")
    for i, premise in enumerate(rule.premises):
        stray = {mv.name for mv in sequent_metavars(premise)} - set(counts) - inherited
        for name in sorted(stray):
            problems.append(f"{rule.name}: premise {i} introduces {name}")
    return problems



def check_closure(rule: InceptionRule) -> Dict[str, List[str]]:
    """`check_analytic` on every depth-0 rule of the closure, with the variables each one inherits."""
    found: Dict[str, List[str]] = {}

    def visit(r: InceptionRule, inherited: frozenset) -> None:
        if not r.depth:
            problems = check_analytic(r, inherited)
            if problems:
                found[r.name] = problems
        scope = inherited | {mv.name for mv in r.metavariables()}
        for contract in r.contracts:
            inner = scope | {v.name for v in contract.uninstantiable}
            for sub in contract.rules:
                visit(sub, inner)

    visit(rule, frozenset())
    return found


@dataclass
class RuleGroup:
    """The rules generated from one axiom, one per definite component."""
    axiom: str
    translations: List[Translation] = field(default_factory=list)

    @property
    def rules(self) -> List[InceptionRule]:
        return [t.rule for t in self.translations]


def translate_run(run: AlbaRun, sig: Signature, name: str = "R") -> RuleGroup:
    group = RuleGroup(print_inequality(run.axiom))
    several = len(run.components) > 1
    for k, component in enumerate(run.components):
        group.translations.append(translate_with_mapping(component.clause, sig, f"{name}{k}" if several else name))
    return group

"""
Node-by-node verification of derivations.

Each node is matched against its rule under the bindings it inherits from
enclosing applications. Plain premises must equal the instantiated premise
schemas; each dream must derive the instantiated aim of its contract, with
the uninstantiable variables read as parameters no other contract uses.
Dreams see the base calculus, the calculus's depth-0 rules and the rules of
the contract they fulfil.
"""
import logging
import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional

from errors import InstantiationError, KernelError
from kernel import (
    InceptionRule, ParamAllocator, RuleEnv, RuleInstance, Substitution, instantiate, match_sequent,
    print_sequent, sequent_params,
)
from .calculus import Calculus
from .derivation import ROOT, Derivation, dream_path, inception_depth, is_cut_free, premise_path, walk

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NodeIssue:
    path: str
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{self.path} ({self.rule}): {self.message}"


@dataclass
class Application:
    """A checked rule application, kept for congruence tracking."""
    path: str
    rule: InceptionRule
    substitution: Substitution
    # metavariable -> path of the application that bound it
    origins: Dict[str, str]


@dataclass
class CheckReport:
    issues: List[NodeIssue] = field(default_factory=list)
    applications: List[Application] = field(default_factory=list)
    # parameter ident -> path of the application whose contract introduced it
    params: Dict[str, str] = field(default_factory=dict)
    nodes: int = 0
    depth: int = 0
    cut_free: bool = True
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, path: str, rule: str, message: str) -> None:
        self.issues.append(NodeIssue(path, rule, message))
        logger.debug("[checker][path=%s] %s: %s", path, rule, message)

    def render(self) -> str:
        head = "accepted" if self.ok else f"rejected ({len(self.issues)} issue(s))"
        lines = [f"{head}: {self.nodes} node(s), inception depth {self.depth}, cut-free {self.cut_free}"]
        lines += [f"  {issue}" for issue in self.issues]
        return "\n".join(lines)


class DerivationChecker:
    def __init__(self, calculus: Calculus):
        self.calculus = calculus
        self.allocator = ParamAllocator()
        self.report = CheckReport()

    def run(self, d: Derivation) -> CheckReport:
        t0 = time.perf_counter()
        self.allocator.reserved = {p.ident for _, node, _ in walk(d) for p in sequent_params(node.conclusion)}
        self.visit(d, ROOT, self.calculus.top_env(), frozenset())
        self.report.timings["check_s"] = time.perf_counter() - t0
        self.report.depth = inception_depth(d, self.calculus.depth_of)
        self.report.cut_free = is_cut_free(d)
        return self.report

    def visit(self, node: Derivation, path: str, env: RuleEnv, scope: FrozenSet[str]) -> None:
        self.report.nodes += 1
        for param in sequent_params(node.conclusion):
            if param.ident not in scope:
                self.report.add(path, node.rule, f"parameter #{param.ident} is used outside its contract")
        scoped = env.get(node.rule)
        if scoped is None:
            where = "in this dream" if self.calculus.lookup(node.rule) else "in the calculus"
            self.report.add(path, node.rule, f"rule {node.rule} is not available {where}")
            return
        rule = scoped.rule
        if len(node.premises) != len(rule.premises):
            self.report.add(path, rule.name, f"expects {len(rule.premises)} premise(s), got {len(node.premises)}")
            return
        if len(node.dreams) != len(rule.contracts):
            self.report.add(path, rule.name, f"expects {len(rule.contracts)} dream(s), got {len(node.dreams)}")
            return
        sigma = self.bind(node, path, rule, scoped.bindings())
        if sigma is None:
            return
        instance = self.instantiate(path, rule, sigma, scoped.origin_map())
        if instance is None:
            return
        for i, (expected, child) in enumerate(zip(instance.premises, node.premises)):
            if expected != child.conclusion:
                self.report.add(
                    path, rule.name,
                    f"premise {i} should be {print_sequent(expected)}, found {print_sequent(child.conclusion)}",
                )
        for k, (obligation, dream) in enumerate(zip(instance.obligations, node.dreams)):
            if obligation.aim != dream.conclusion:
                self.report.add(
                    path, rule.name,
                    f"dream {k} should derive {print_sequent(obligation.aim)}, found {print_sequent(dream.conclusion)}",
                )
        for i, child in enumerate(node.premises):
            self.visit(child, premise_path(path, i), env, scope)
        for k, (obligation, dream) in enumerate(zip(instance.obligations, node.dreams)):
            fresh = frozenset(p.ident for p in obligation.params.values())
            for ident in fresh:
                self.report.params[ident] = path
            self.visit(dream, dream_path(path, k), self.calculus.dream_env(obligation.scope), scope | fresh)

    def bind(self, node: Derivation, path: str, rule: InceptionRule, inherited: Substitution) -> Optional[Substitution]:
        sigma = dict(inherited)
        for name, value in node.bindings:
            if name in sigma and sigma[name] != value:
                self.report.add(path, node.rule, f"binding {name} conflicts with an inherited one")
                return None
            sigma[name] = value
        matched = match_sequent(rule.conclusion, node.conclusion, sigma)
        if matched is None:
            self.report.add(
                path, rule.name,
                f"conclusion {print_sequent(node.conclusion)} does not match {print_sequent(rule.conclusion)}",
            )
            return None
        for i, (schema, child) in enumerate(zip(rule.premises, node.premises)):
            extended = match_sequent(schema, child.conclusion, matched)
            if extended is None:
                self.report.add(
                    path, rule.name,
                    f"premise {i} {print_sequent(child.conclusion)} does not match {print_sequent(schema)}",
                )
                return None
            matched = extended
        for k, (contract, dream) in enumerate(zip(rule.contracts, node.dreams)):
            found = match_sequent(contract.aim, dream.conclusion, matched)
            if found is None:
                continue
            # only the uninstantiable variables are read off the dream
            for var in contract.uninstantiable:
                if var.name in found and var.name not in matched:
                    matched[var.name] = found[var.name]
        return matched

    def instantiate(
        self, path: str, rule: InceptionRule, sigma: Substitution, origins: Dict[str, str]
    ) -> Optional[RuleInstance]:
        try:
            instance = instantiate(rule, sigma, self.allocator, origin=path, inherited_origins=origins)
        except InstantiationError as e:
            self.report.add(path, rule.name, str(e))
            return None
        except KernelError as e:
            self.report.add(path, rule.name, f"cannot instantiate: {e}")
            return None
        full = dict(instance.substitution)
        for obligation in instance.obligations:
            full.update(obligation.params)
        self.report.applications.append(Application(
            path=path,
            rule=rule,
            substitution=full,
            origins={name: origins.get(name, path) for name in full},
        ))
        return instance


def check_derivation(d: Derivation, calculus: Calculus) -> CheckReport:
    """Total: every problem becomes an issue with the path of the offending node."""
    report = DerivationChecker(calculus).run(d)
    logger.info(
        "[checker] %s: %s, %d node(s), depth %d, %d issue(s), %.3fs",
        print_sequent(d.conclusion), "accepted" if report.ok else "rejected", report.nodes, report.depth,
        len(report.issues), report.timings["check_s"],
    )
    return report

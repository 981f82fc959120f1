"""
Command-line front end.

    inception classify  --signature SIG AXIOMS
    inception alba      --signature SIG AXIOMS [--trace] [--out CLAUSES]
    inception gen-rules --signature SIG AXIOMS [--out RULES]
    inception check     DERIVATION
    inception cut-elim  DERIVATION [--trace] [--out DERIVATION]
    inception oracle    --signature SIG AXIOMS [--seed N] [--random N] [--max-size N]
    inception selftest  [--seed N] [--random N]

Exit codes: 0 success, 1 domain failure, 2 usage or parse error.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

import config
from alba import print_clause, render_clause, run_alba
from checker import check_derivation, load_derivation, render_derivation, write_derivation
from corpus import Corpus
from cutelim import eliminate_all_cuts
from dto import ExitCode
from errors import (
    AlbaError, CorpusError, CutEliminationError, DerivationFormatError, FormulaSyntaxError, InceptionError,
    KernelError, NotInductiveError, RuleGenerationError, SignatureError,
)
from kernel import lint_closure
from managers import run_sweep
from rulegen import check_closure, render_groups, translate_run, write_rules
from selftest import run_selftest
from signature import Signature, load_signature
from syntax import Inequality, find_inductive_certificate, load_axioms, print_inequality

logger = logging.getLogger(__name__)

Command = Literal["classify", "alba", "gen-rules", "check", "cut-elim", "oracle", "selftest"]

_NEEDS_SIGNATURE = {"classify", "alba", "gen-rules", "oracle"}


class RunConfig(BaseModel):
    command: Command
    inputs: List[Path] = Field(default_factory=list)
    signature: Optional[Path] = None
    seed: int = Field(default=config.RANDOM_SEED, ge=0)
    random: int = Field(default=200, ge=0)
    max_size: int = Field(default=config.MAX_ALGEBRA_SIZE, ge=2, le=6)
    trace: bool = False
    out: Optional[Path] = None

    @model_validator(mode="after")
    def _paths_exist(self) -> "RunConfig":
        if self.command == "selftest":
            return self
        if not self.inputs:
            raise ValueError(f"{self.command} needs an input file")
        if self.command in _NEEDS_SIGNATURE and self.signature is None:
            raise ValueError(f"{self.command} needs --signature")
        for path in [*self.inputs, *([self.signature] if self.signature else [])]:
            if not path.exists():
                raise ValueError(f"{path} does not exist")
        return self


# ────────────────────────────────────────────────────────────────────────────
# Commands
# ────────────────────────────────────────────────────────────────────────────

def _axioms(cfg: RunConfig) -> tuple[Signature, List[Inequality]]:
    sig = load_signature(cfg.signature)
    axioms = [a for path in cfg.inputs for a in load_axioms(path, sig)]
    return sig, axioms


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        print(text)
    else:
        out.write_text(text + "\n")
        logger.info("[cli] wrote %s", out)


def cmd_classify(cfg: RunConfig) -> ExitCode:
    sig, axioms = _axioms(cfg)
    rows, code = [], ExitCode.OK
    for ineq in axioms:
        cert = find_inductive_certificate(ineq, sig)
        if cert is None:
            code = ExitCode.DOMAIN_FAILURE
            rows.append({"axiom": print_inequality(ineq), "inductive": False})
            continue
        rows.append({
            "axiom": print_inequality(ineq),
            "inductive": True,
            "epsilon": {name: eps.to_json() for name, eps in cert.epsilon},
            "omega": [list(edge) for edge in cert.omega],
            "depth": cert.depth,
            "analytic": cert.analytic,
            "definite": cert.definite,
        })
    _emit(json.dumps(rows, indent=2, ensure_ascii=False), cfg.out)
    return code


def cmd_alba(cfg: RunConfig) -> ExitCode:
    sig, axioms = _axioms(cfg)
    lines = []
    for ineq in axioms:
        run = run_alba(ineq, sig)
        lines.append(f"# {print_inequality(ineq)}")
        if cfg.trace:
            lines += [record.render() for record in run.trace]
            lines += [render_clause(c) for c in run.clauses]
        lines += [print_clause(c) for c in run.clauses]
    _emit("\n".join(lines), cfg.out)
    return ExitCode.OK


def cmd_gen_rules(cfg: RunConfig) -> ExitCode:
    sig, axioms = _axioms(cfg)
    groups = [translate_run(run_alba(ineq, sig), sig) for ineq in axioms]
    code = ExitCode.OK
    for group in groups:
        for rule in group.rules:
            failing = [r for r in lint_closure(rule, sig) if not r.ok]
            for report in failing:
                logger.warning("[cli] %s fails %s", report.rule, sorted(k for k, v in report.problems.items() if v))
            for name, problems in check_closure(rule).items():
                logger.warning("[cli] %s is not analytic: %s", name, "; ".join(problems))
            if failing:
                code = ExitCode.DOMAIN_FAILURE
    print(render_groups(groups))
    if cfg.out is not None:
        write_rules(groups, sig, cfg.out)
        logger.info("[cli] wrote %s", cfg.out)
    return code


def cmd_check(cfg: RunConfig) -> ExitCode:
    code = ExitCode.OK
    for path in cfg.inputs:
        d, calc = load_derivation(path)
        report = check_derivation(d, calc)
        print(f"{path}: {report.render()}")
        if not report.ok:
            code = ExitCode.DOMAIN_FAILURE
    return code


def cmd_cut_elim(cfg: RunConfig) -> ExitCode:
    d, calc = load_derivation(cfg.inputs[0])
    result = eliminate_all_cuts(d, calc)
    report = check_derivation(result.derivation, calc)
    print(f"{result.steps} reduction step(s); output {report.render()}")
    if cfg.trace:
        print(result.render_trace())
        print(render_derivation(result.derivation))
    if cfg.out is not None:
        doc = json.loads(cfg.inputs[0].read_text())
        ref = doc.get("calculus")
        if ref:
            ref = str(Path(ref) if Path(ref).is_absolute() else (cfg.inputs[0].parent / ref).resolve())
        write_derivation(result.derivation, cfg.out, ref)
        logger.info("[cli] wrote %s", cfg.out)
    return ExitCode.OK if report.ok else ExitCode.DOMAIN_FAILURE


def cmd_oracle(cfg: RunConfig) -> ExitCode:
    sig, axioms = _axioms(cfg)
    code = ExitCode.OK
    blocks = []
    for ineq in axioms:
        sweep = run_sweep(sig, ineq, seed=cfg.seed, count=cfg.random, max_size=cfg.max_size)
        blocks.append(sweep.render())
        if not sweep.ok:
            code = ExitCode.DOMAIN_FAILURE
    _emit("\n".join(blocks), cfg.out)
    return code


def cmd_selftest(cfg: RunConfig) -> ExitCode:
    result = run_selftest(Corpus(config.CORPUS_ROOT), seed=cfg.seed, algebras=cfg.random, max_size=cfg.max_size)
    _emit(result.render(), cfg.out)
    return ExitCode.OK if result.ok else ExitCode.DOMAIN_FAILURE


COMMANDS = {
    "classify": cmd_classify,
    "alba": cmd_alba,
    "gen-rules": cmd_gen_rules,
    "check": cmd_check,
    "cut-elim": cmd_cut_elim,
    "oracle": cmd_oracle,
    "selftest": cmd_selftest,
}


# ────────────────────────────────────────────────────────────────────────────
# Entry point
# ────────────────────────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inception", description="Inception display calculi toolchain")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("inputs", nargs="*", type=Path, help="axiom or derivation files")
    parser.add_argument("--signature", type=Path, default=None, help="signature JSON for axiom files")
    parser.add_argument("--seed", type=int, default=config.RANDOM_SEED,
                        help=f"random seed (default: {config.RANDOM_SEED})")
    parser.add_argument("--random", type=int, default=200, help="number of random algebras (default: 200)")
    parser.add_argument("--max-size", dest="max_size", type=int, default=config.MAX_ALGEBRA_SIZE,
                        help=f"largest algebra carrier (default: {config.MAX_ALGEBRA_SIZE})")
    parser.add_argument("--trace", action="store_true", help="print step traces")
    parser.add_argument("--out", type=Path, default=None, help="write the result here instead of stdout")
    return parser


# exceptions a command may raise, by exit code
_USAGE_ERRORS = (FormulaSyntaxError, SignatureError, DerivationFormatError, CorpusError, KernelError)
_DOMAIN_ERRORS = (NotInductiveError, AlbaError, RuleGenerationError, CutEliminationError)


def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    try:
        cfg = RunConfig(**vars(args))
    except ValidationError as e:
        print(f"inception: {e.errors()[0]['msg']}", file=sys.stderr)
        return ExitCode.USAGE
    try:
        return COMMANDS[cfg.command](cfg)
    except _USAGE_ERRORS as e:
        print(f"inception: {e}", file=sys.stderr)
        return ExitCode.USAGE
    except _DOMAIN_ERRORS as e:
        print(f"inception: {e}", file=sys.stderr)
        return ExitCode.DOMAIN_FAILURE
    except InceptionError as e:
        print(f"inception: {e}", file=sys.stderr)
        return ExitCode.DOMAIN_FAILURE


def main() -> None:
    logging.basicConfig(level=logging.INFO)
    sys.exit(run())


if __name__ == "__main__":
    main()

"""
Text front end for formulas and inequalities.

One LALR grammar serves every textual format; `FormulaBuilder` resolves
connective names against a signature and is extended by the clause and
sequent readers of the alba and kernel packages.
"""
import logging
from functools import lru_cache
from pathlib import Path
from typing import List

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from errors import FormulaSyntaxError, InceptionError
from signature import ConnectiveSpec, Signature
from .formulas import And, Atom, Bot, Conn, Formula, Inequality, Or, Top

logger = logging.getLogger(__name__)

_GRAMMAR_PATH = Path(__file__).with_name("grammar.lark")
_STARTS = ["start_formula", "start_inequality", "start_clause", "start_sequent", "start_structure"]


@lru_cache(maxsize=1)
def get_parser() -> Lark:
    return Lark(
        _GRAMMAR_PATH.read_text(),
        start=_STARTS,
        parser="lalr",
        propagate_positions=True,
        maybe_placeholders=False,
    )


def _error_at(token: Token, message: str) -> FormulaSyntaxError:
    return FormulaSyntaxError(message, getattr(token, "line", None), getattr(token, "column", None))


class FormulaBuilder(Transformer):
    """Builds formula values, checking names and arities against the signature."""

    def __init__(self, sig: Signature):
        super().__init__()
        self.sig = sig

    def _connective(self, token: Token, arity: int) -> ConnectiveSpec:
        if token not in self.sig:
            raise _error_at(token, f"Unknown connective '{token}'")
        spec = self.sig.get(str(token))
        if spec.arity != arity:
            raise _error_at(token, f"Connective '{token}' expects {spec.arity} argument(s), got {arity}")
        return spec

    def application(self, items):
        name, args = items
        self._connective(name, len(args))
        return Conn(str(name), tuple(args))

    def args(self, items):
        return list(items)

    def name(self, items):
        (token,) = items
        if token in self.sig:
            self._connective(token, 0)
            return Conn(str(token), ())
        return Atom(str(token))

    def infix_app(self, items):
        left, op, right = items
        self._connective(op, 2)
        return Conn(str(op), (left, right))

    def and_(self, items):
        return And(items[0], items[1])

    def or_(self, items):
        return Or(items[0], items[1])

    def top(self, _items):
        return Top()

    def bot(self, _items):
        return Bot()

    def inequality(self, items):
        return Inequality(items[0], items[1])

    def start_formula(self, items):
        return items[0]

    def start_inequality(self, items):
        return items[0]


def run_parser(text: str, start: str, builder: Transformer):
    """Parse `text` from `start` and transform it, mapping every failure to a domain error."""
    try:
        tree = get_parser().parse(text, start=start)
    except UnexpectedEOF as e:
        raise FormulaSyntaxError(f"Unexpected end of input in {text!r}") from e
    except UnexpectedCharacters as e:
        raise FormulaSyntaxError(f"Unexpected character {text[e.pos_in_stream]!r}", e.line, e.column) from e
    except UnexpectedInput as e:
        token = getattr(e, "token", "?")
        raise FormulaSyntaxError(f"Unexpected token {str(token)!r}", e.line, e.column) from e
    try:
        return builder.transform(tree)
    except VisitError as e:
        if isinstance(e.orig_exc, InceptionError):
            raise e.orig_exc from None
        raise


def parse_formula(text: str, sig: Signature) -> Formula:
    return run_parser(text, "start_formula", FormulaBuilder(sig))


def parse_inequality(text: str, sig: Signature) -> Inequality:
    return run_parser(text, "start_inequality", FormulaBuilder(sig))


def parse_axioms(text: str, sig: Signature) -> List[Inequality]:
    """One inequality per line; blank lines and lines starting with '#' are skipped."""
    axioms = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            axioms.append(parse_inequality(stripped, sig))
        except FormulaSyntaxError as e:
            raise FormulaSyntaxError(f"line {lineno}: {e}") from e
    return axioms


def load_axioms(path: str | Path, sig: Signature) -> List[Inequality]:
    axioms = parse_axioms(Path(path).read_text(), sig)
    logger.info("[syntax] read %d axiom(s) from %s", len(axioms), path)
    return axioms

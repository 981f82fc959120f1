"""Reader for sequents and rule-schema sequents (`<struct> |- <struct>`)."""
from typing import List

from dto import Family, Sort
from errors import KernelError
from signature import Signature
from syntax import FormulaBuilder, run_parser
from .structures import (
    STRUCT_BOT, STRUCT_TOP, FormulaLeaf, MetaVar, Param, Sequent, Structure, StructConn, assign_sorts,
    assign_structure_sorts, sort_errors,
)


class SequentBuilder(FormulaBuilder):
    """Structures come out unsorted; sorts are assigned from positions afterwards."""

    def struct_name(self, items):
        return str(items[0])

    def struct_args(self, items):
        return list(items)

    def hat(self, items):
        name, *rest = items
        return StructConn(name, Family.F, tuple(rest[0]) if rest else ())

    def check(self, items):
        name, *rest = items
        return StructConn(name, Family.G, tuple(rest[0]) if rest else ())

    def param(self, items):
        # placeholder sort, fixed by assign_sorts
        return Param(str(items[0])[1:], Sort.F)

    def metavar(self, items):
        return MetaVar(str(items[0]), Sort.F)

    def leaf(self, items):
        return FormulaLeaf(items[0])

    def sequent(self, items):
        return Sequent(items[0], items[1])

    def start_sequent(self, items):
        return items[0]

    def start_structure(self, items):
        return items[0]


def parse_sequent(text: str, sig: Signature) -> Sequent:
    """Parse and sort-check one sequent; sort clashes raise KernelError."""
    seq = assign_sorts(run_parser(text, "start_sequent", SequentBuilder(sig)), sig)
    problems: List[str] = sort_errors(seq, sig)
    if problems:
        raise KernelError(f"Ill-sorted sequent {text!r}: {'; '.join(problems)}")
    return seq


def parse_structure(text: str, sig: Signature, sort: Sort) -> Structure:
    """Parse one structure standing in a position of the given sort."""
    s = assign_structure_sorts(run_parser(text, "start_structure", SequentBuilder(sig)), sort, sig)
    # sort-check against a neutral opposite side
    filler = StructConn(STRUCT_BOT, Family.G) if sort is Sort.F else StructConn(STRUCT_TOP, Family.F)
    seq = Sequent(s, filler) if sort is Sort.F else Sequent(filler, s)
    problems = sort_errors(seq, sig)
    if problems:
        raise KernelError(f"Ill-sorted structure {text!r}: {'; '.join(problems)}")
    return s

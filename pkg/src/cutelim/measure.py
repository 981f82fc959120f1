"""Termination measure of a cut: inception depth, cut formula complexity, height."""
from dataclasses import dataclass
from typing import Callable, Optional

from checker import Derivation, height, inception_depth
from syntax import Formula, complexity


@dataclass(frozen=True, order=True)
class CutMeasure:
    """Compared lexicographically in field order."""
    inception_depth: int
    complexity: int
    height: int

    def __str__(self) -> str:
        return f"({self.inception_depth}, {self.complexity}, {self.height})"


def cut_measure(
    left: Derivation, right: Derivation, formula: Formula, depth_of: Callable[[str], Optional[int]]
) -> CutMeasure:
    """Measure of a cut on `formula` between `left` (X |- A) and `right` (A |- Y)."""
    return CutMeasure(
        inception_depth=inception_depth(left, depth_of) + inception_depth(right, depth_of),
        complexity=complexity(formula),
        height=height(left) + height(right),
    )
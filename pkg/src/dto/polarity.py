from enum import Enum


class Family(Enum):
    F = "F"
    G = "G"

    def dual(self) -> "Family":
        return Family.G if self is Family.F else Family.F


class Polarity(Enum):
    """One entry of an order-type: monotone (1) or antitone (d)."""
    ONE = "1"
    DUAL = "d"

    def flip(self) -> "Polarity":
        return Polarity.DUAL if self is Polarity.ONE else Polarity.ONE

    def compose(self, other: "Polarity") -> "Polarity":
        """`self` raised to `other`: unchanged under 1, flipped under d."""
        return self if other is Polarity.ONE else self.flip()

    @classmethod
    def from_json(cls, raw) -> "Polarity":
        if raw in (1, "1"):
            return cls.ONE
        if raw in ("d", "∂"):
            return cls.DUAL
        raise ValueError(f"Invalid order-type entry: {raw!r}")

    def to_json(self):
        return 1 if self is Polarity.ONE else "d"


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"

    def flip(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    def under(self, polarity: Polarity) -> "Sign":
        return self if polarity is Polarity.ONE else self.flip()


class Sort(Enum):
    """Structure sorts: F-sort lives in antecedents, G-sort in succedents."""
    F = "F"
    G = "G"

    def flip(self) -> "Sort":
        return Sort.G if self is Sort.F else Sort.F

    @classmethod
    def of(cls, family: Family) -> "Sort":
        return cls.F if family is Family.F else cls.G

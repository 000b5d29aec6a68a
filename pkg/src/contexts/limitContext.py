from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union


@dataclass(frozen=True, eq=True)
class DyadicRational:
    """numerator / 2^exponent, kept canonical (odd numerator, or 0 / 2^0).

    A negative exponent multiplies: DyadicRational(3, -2) == 12.
    """
    numerator: int
    exponent: int = 0

    def __post_init__(self):
        num, exp = self.numerator, self.exponent
        if num == 0:
            exp = 0
        else:
            shift = (num & -num).bit_length() - 1
            num >>= shift
            exp -= shift
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    @classmethod
    def power_of_two(cls, e: int) -> "DyadicRational":
        return cls(1, -e)

    def _aligned(self, other: "DyadicRational"):
        exp = max(self.exponent, other.exponent)
        return self.numerator << (exp - self.exponent), other.numerator << (exp - other.exponent), exp

    def __add__(self, other: Union["DyadicRational", int]) -> "DyadicRational":
        if isinstance(other, int):
            other = DyadicRational(other)
        a, b, exp = self._aligned(other)
        return DyadicRational(a + b, exp)

    __radd__ = __add__

    def __mul__(self, other: Union["DyadicRational", int]) -> "DyadicRational":
        if isinstance(other, int):
            other = DyadicRational(other)
        return DyadicRational(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __lt__(self, other: "DyadicRational") -> bool:
        a, b, _ = self._aligned(other)
        return a < b

    def to_fraction(self) -> Fraction:
        if self.exponent >= 0:
            return Fraction(self.numerator, 1 << self.exponent)
        return Fraction(self.numerator << -self.exponent)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def __str__(self) -> str:
        f = self.to_fraction()
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class LimitTerm:
    n: int
    contribution: DyadicRational


@dataclass(frozen=True)
class LimitReport:
    """Exact quotient 2^(G-1) / denominator; the decimal is display-only."""
    G: int
    numerator: int
    denominator: int
    decimal: str
    denominator_sum: DyadicRational
    terms: Tuple[LimitTerm, ...] = ()

    @property
    def quotient(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def recompute(self) -> Fraction:
        total = DyadicRational(0)
        for term in self.terms:
            total = total + term.contribution
        return Fraction(1 << (self.G - 1)) / total.to_fraction()

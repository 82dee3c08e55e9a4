"""Arbitrary-precision non-negative rationals with mediant arithmetic.

Values are always stored reduced.  Besides ordinary positive fractions the
domain contains exactly two zero-component pairs, 1/0 and 0/1, which anchor
the top of the mediant trees.  General signed arithmetic (+, -, *, /) is
deliberately out of scope; the trees only ever need mediants, determinants
and comparisons.
"""

from math import gcd
from typing import NamedTuple


class Rational(NamedTuple):
    """A reduced fraction num/den over non-negative big integers.

    Equality and hashing are componentwise, which is exact because every
    stored value is reduced.  Do not call the constructor with an unreduced
    pair; use :func:`make_rational`.
    """

    num: int
    den: int

    @property
    def is_pseudo(self) -> bool:
        """True for the two formal anchors 1/0 and 0/1 (and the zero 0/1)."""
        return self.num == 0 or self.den == 0

    def reciprocal(self) -> "Rational":
        return Rational(self.den, self.num)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    # Tuple ordering would compare lexicographically, which is wrong for
    # fractions, so cross-multiplied comparisons are defined explicitly.
    # Pseudo-fractions have no defined order.
    def _cmp_key(self, other: "Rational") -> tuple[int, int]:
        if self.is_pseudo or other.is_pseudo:
            raise ValueError("pseudo-fractions are not ordered")
        return self.num * other.den, other.num * self.den

    def __lt__(self, other) -> bool:
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other) -> bool:
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other) -> bool:
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other) -> bool:
        a, b = self._cmp_key(other)
        return a >= b


def make_rational(num: int, den: int) -> Rational:
    """Validate and reduce a fraction given as a pair of integers.

    Rejects (0, 0) and negative components.  Pairs with one zero component
    reduce to the canonical anchors 1/0 or 0/1.
    """
    if num < 0 or den < 0:
        raise ValueError(f"negative component in {num}/{den}")
    if num == 0 and den == 0:
        raise ValueError("0/0 is not a rational")
    g = gcd(num, den)
    return Rational(num // g, den // g)


def parse_rational(text: str) -> Rational:
    """Parse the textual form "num/den" (ASCII digits, single slash)."""
    parts = text.strip().split("/")
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ValueError(f"malformed rational {text!r}, expected \"n/d\"")
    return make_rational(int(parts[0]), int(parts[1]))


def mediant(a: Rational, b: Rational) -> Rational:
    """Componentwise sum (a.num+b.num)/(a.den+b.den), reduced."""
    return make_rational(a.num + b.num, a.den + b.den)


def determinant(a: Rational, b: Rational) -> int:
    """Signed cross determinant of a = p/q and b = r/s: q*r - p*s.

    Antisymmetric in its arguments; the two signs correspond to the two
    unimodular neighbour families, so the sign is exposed rather than
    folded into an absolute value.
    """
    return a.den * b.num - a.num * b.den


def addable(a: Rational, b: Rational) -> bool:
    """Whether the mediant of a and b lands on a tree vertex: |det| = 1."""
    return abs(determinant(a, b)) == 1


ONE = Rational(1, 1)
ZERO_OVER_ONE = Rational(0, 1)
ONE_OVER_ZERO = Rational(1, 0)

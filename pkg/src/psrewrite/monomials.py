"""Exponent-vector monomials and admissible degree-compatible orders.

A monomial over variables x1..xn is a vector of natural exponents; the
empty monomial 1 is the all-zeros vector.  The only order currently
shipped is deglex: total degree first, ties broken lexicographically with
x1 the most significant variable (larger exponent at the first difference
wins).  Deglex is admissible (1 <= m for every m) and compatible with the
degree, which is what every termination argument in the rewriting engine
leans on.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, Optional

from .errors import DimensionMismatchError

LESS = -1
EQUAL = 0
GREATER = 1


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def variable(cls, index: int, n: int, power: int = 1) -> Monomial:
        """Monomial x_index^power over n variables; index is 1-based."""
        if not 1 <= index <= n:
            raise ValueError(f"variable index {index} out of range 1..{n}")
        exps = [0] * n
        exps[index - 1] = power
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def multiply(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    __mul__ = multiply

    def divides(self, other: Monomial) -> Optional[Monomial]:
        """Quotient other/self when self divides other, else None."""
        _check_same_n(self, other)
        if all(a <= b for a, b in zip(self.exponents, other.exponents)):
            return Monomial(tuple(b - a for a, b in zip(self.exponents, other.exponents)))
        return None

    def lcm(self, other: Monomial) -> Monomial:
        _check_same_n(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        factors = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                factors.append(f"x{i + 1}")
            elif e > 1:
                factors.append(f"x{i + 1}^{e}")
        return "*".join(factors) if factors else "1"


def _check_same_n(m1: Monomial, m2: Monomial) -> None:
    if m1.n != m2.n:
        raise DimensionMismatchError(
            f"monomials over {m1.n} and {m2.n} variables"
        )


class OrderKind(Enum):
    DEGLEX = "deglex"


@dataclass(frozen=True)
class MonomialOrder:
    """A total, multiplicative, admissible, degree-compatible order."""

    kind: OrderKind = OrderKind.DEGLEX

    def key(self, m: Monomial):
        # Tuple comparison realises deglex: degree first, then the raw
        # exponent vector compared left to right (x1 most significant).
        return (m.degree, m.exponents)

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        """LESS/EQUAL/GREATER for m1 against m2."""
        _check_same_n(m1, m2)
        k1, k2 = self.key(m1), self.key(m2)
        if k1 < k2:
            return LESS
        if k1 > k2:
            return GREATER
        return EQUAL

    def less(self, m1: Monomial, m2: Monomial) -> bool:
        return self.compare(m1, m2) == LESS

    def min(self, monomials) -> Monomial:
        return min(monomials, key=self.key)


DEGLEX = MonomialOrder(OrderKind.DEGLEX)


def monomials_of_degree(n: int, d: int) -> Iterator[Monomial]:
    """All monomials over n variables of total degree exactly d."""
    # Stars and bars: positions of n-1 separators among d + n - 1 slots.
    for bars in combinations(range(d + n - 1), n - 1):
        exps = []
        prev = -1
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 2 - prev)
        yield Monomial(tuple(exps))


def monomials_below(order: MonomialOrder, limit: Monomial) -> list[Monomial]:
    """The finite set {m : m < limit}, sorted ascending for the order.

    Finiteness is what makes normalisation below a degree bound terminate:
    a degree-compatible order admits only finitely many monomials under
    any fixed one.
    """
    out = []
    for d in range(limit.degree + 1):
        for m in monomials_of_degree(limit.n, d):
            if order.less(m, limit):
                out.append(m)
    out.sort(key=order.key)
    return out

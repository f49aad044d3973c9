"""Truncated multivariate formal power series over exact rationals.

A series is stored as its known polynomial part plus a precision bound:
``precision = p`` means every coefficient of total degree < p is exact and
nothing is known beyond (the value is f + O(deg p)); ``precision = None``
means the stored polynomial is the whole value.  Coefficients are
`fractions.Fraction`; floating point never enters.  Arithmetic propagates
the sharpest sound precision, and stored terms are always pruned of zeros
and of degrees at or above the bound.

Leading data follows the local-order convention used for standard bases
of power series ideals: the leading monomial of f is the *minimum* of its
support under the admissible order, i.e. the leading monomial for the
opposite order.  The metric ``delta(f, g) = 2^(-val(f - g))`` is the
(x1..xn)-adic ultrametric, with val the smallest total degree in the
support and val(0) = infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import DimensionMismatchError, ZeroOrUnknownLeadingError
from .monomials import Monomial, MonomialOrder

Coefficient = Fraction


@dataclass(frozen=True)
class Valuation:
    """Smallest total degree in the support, as far as the data shows.

    ``bound`` is the degree and ``lower_bound_only`` tells whether it is
    exact: a definite value (the known part is nonzero), a lower bound
    ("at least p", the known part vanishes at finite precision p), or
    infinite (``bound is None``, the value is exactly zero).
    """

    bound: Optional[int]
    lower_bound_only: bool = False

    @classmethod
    def definite(cls, v: int) -> Valuation:
        return cls(v, False)

    @classmethod
    def at_least(cls, p: int) -> Valuation:
        return cls(p, True)

    @classmethod
    def infinite(cls) -> Valuation:
        return cls(None, False)

    @property
    def is_infinite(self) -> bool:
        return self.bound is None

    @property
    def is_definite(self) -> bool:
        return self.bound is not None and not self.lower_bound_only

    def guaranteed_at_least(self, d: int) -> bool:
        return self.bound is None or self.bound >= d

    def __str__(self) -> str:
        if self.bound is None:
            return "inf"
        if self.lower_bound_only:
            return f">={self.bound}"
        return str(self.bound)


class TruncatedSeries:
    """Immutable known-part-plus-precision representation of a series."""

    __slots__ = ("n", "_terms", "precision")

    def __init__(self, n: int, terms: Mapping[Monomial, Fraction] | Iterable = (),
                 precision: Optional[int] = None):
        if n < 1:
            raise ValueError("need at least one variable")
        if precision is not None and precision < 0:
            raise ValueError("precision must be a natural number")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, Fraction] = {}
        for m, c in items:
            if m.n != n:
                raise DimensionMismatchError(f"monomial over {m.n} variables in a {n}-variable series")
            if precision is not None and m.degree >= precision:
                continue
            c = Fraction(c)
            if c == 0:
                continue
            acc = clean.get(m, Fraction(0)) + c
            if acc == 0:
                clean.pop(m, None)
            else:
                clean[m] = acc
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, n: int, precision: Optional[int] = None) -> TruncatedSeries:
        return cls(n, {}, precision)

    @classmethod
    def constant(cls, n: int, c) -> TruncatedSeries:
        return cls(n, {Monomial.one(n): Fraction(c)})

    @classmethod
    def term(cls, m: Monomial, c, precision: Optional[int] = None) -> TruncatedSeries:
        return cls(m.n, {m: Fraction(c)}, precision)

    # -- inspection ------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def items(self):
        return self._terms.items()

    @property
    def support(self) -> frozenset[Monomial]:
        return frozenset(self._terms)

    def sorted_terms(self, order: MonomialOrder) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]))

    def known_zero(self) -> bool:
        """True when the stored polynomial part is zero."""
        return not self._terms

    def is_exactly_zero(self) -> bool:
        return not self._terms and self.precision is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.n == other.n and self.precision == other.precision
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.n, self.precision, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        from .textio import format_series
        return f"TruncatedSeries({format_series(self)!r})"

    # -- arithmetic ------------------------------------------------------

    def _check_compatible(self, other: TruncatedSeries) -> None:
        if self.n != other.n:
            raise DimensionMismatchError(f"series over {self.n} and {other.n} variables")

    def add(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compatible(other)
        prec = _min_precision(self.precision, other.precision)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, Fraction(0)) + c
            if s == 0:
                acc.pop(m, None)
            else:
                acc[m] = s
        return TruncatedSeries(self.n, acc, prec)

    def negate(self) -> TruncatedSeries:
        return TruncatedSeries(self.n, {m: -c for m, c in self._terms.items()}, self.precision)

    def subtract(self, other: TruncatedSeries) -> TruncatedSeries:
        return self.add(other.negate())

    def multiply(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check_compatible(other)
        prec = _product_precision(self, other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1.multiply(m2)
                if prec is not None and m.degree >= prec:
                    continue
                s = acc.get(m, Fraction(0)) + c1 * c2
                if s == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = s
        return TruncatedSeries(self.n, acc, prec)

    def scale_term(self, c, m: Monomial) -> TruncatedSeries:
        """The series c * m * self; precision shifts by deg(m)."""
        if m.n != self.n:
            raise DimensionMismatchError(f"monomial over {m.n} variables, series over {self.n}")
        c = Fraction(c)
        prec = None if self.precision is None else self.precision + m.degree
        if c == 0:
            return TruncatedSeries.zero(self.n, prec)
        return TruncatedSeries(
            self.n, {m1.multiply(m): c1 * c for m1, c1 in self._terms.items()}, prec)

    def truncate(self, p: int) -> TruncatedSeries:
        """Forget everything at degree >= p (never raises precision)."""
        prec = p if self.precision is None else min(self.precision, p)
        return TruncatedSeries(self.n, self._terms, prec)

    __add__ = add
    __sub__ = subtract
    __mul__ = multiply
    __neg__ = negate

    # -- leading data and valuation ---------------------------------------

    def valuation(self) -> Valuation:
        if self._terms:
            return Valuation.definite(min(m.degree for m in self._terms))
        if self.precision is None:
            return Valuation.infinite()
        return Valuation.at_least(self.precision)

    def leading(self, order: MonomialOrder) -> tuple[Monomial, Fraction]:
        """Minimum of the support under the admissible order, with its
        coefficient.  Stored terms all lie below the precision bound, so a
        nonempty known part determines the minimum; an empty one does not."""
        if not self._terms:
            raise ZeroOrUnknownLeadingError(
                "known support is empty; leading term undetermined"
                if self.precision is not None else "zero series has no leading term")
        m = order.min(self._terms)
        return m, self._terms[m]


def _min_precision(p1: Optional[int], p2: Optional[int]) -> Optional[int]:
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    return min(p1, p2)


def _product_precision(f: TruncatedSeries, g: TruncatedSeries) -> Optional[int]:
    # Sharpest sound bound: min(p_f + v_g, p_g + v_f), each side infinite
    # when the factor is exact.  The valuation lower bound of the other
    # factor shifts how far the unknown tail can reach down.
    def side(p: Optional[int], other: TruncatedSeries) -> Optional[int]:
        if p is None:
            return None
        v = other.valuation()
        if v.bound is None:
            return None
        return p + v.bound

    return _min_precision(side(f.precision, g), side(g.precision, f))


def delta(f: TruncatedSeries, g: TruncatedSeries) -> tuple[Fraction, bool]:
    """The adic distance 2^(-val(f-g)) as an exact rational.

    Returns (value, upper_bound_only).  The flag is set when the known
    part of f - g vanishes but the precision is finite: equality below the
    bound is all the data shows, so the true distance is only known to be
    at most 2^(-p).
    """
    v = f.subtract(g).valuation()
    if v.is_infinite:
        return Fraction(0), False
    return Fraction(1, 2 ** v.bound), v.lower_bound_only

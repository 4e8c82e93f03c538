"""Arrow vector space over the dense linear order of the rationals.

Arrows are ordered pairs lo < hi of exact rationals; composition glues
intervals that share an endpoint.  There are no atomic arrows here (every
interval splits at its midpoint), so the norm is taken directly as the
interval width rather than from a basis.  Endpoints are exact Fractions:
composability requires exact endpoint equality, which floats cannot give.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError, UndefinedSum
from .geometry import Multivector, _wedge
from .vectors import ZERO, _ZeroVector, is_zero


def parse_endpoint(text: str) -> Fraction:
    """Exact conversion of a decimal ("3.141") or fraction ("22/7") literal."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad endpoint literal %r: %s" % (text, exc)) from None


def format_endpoint(value: Fraction) -> str:
    """Fraction string; integers are emitted without a denominator."""
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


@dataclass(frozen=True, order=True)
class IntervalArrow:
    """Arrow lo → hi of the real-line order category; lo < hi strictly."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("interval endpoints must satisfy lo < hi, got %s >= %s" % (self.lo, self.hi))

    def __repr__(self):
        return "(%s, %s)" % (format_endpoint(self.lo), format_endpoint(self.hi))


IntervalVector = Union[_ZeroVector, IntervalArrow]


def interval(lo, hi) -> IntervalArrow:
    """Build an arrow from endpoint literals or numbers."""
    if isinstance(lo, str):
        lo = parse_endpoint(lo)
    if isinstance(hi, str):
        hi = parse_endpoint(hi)
    return IntervalArrow(Fraction(lo), Fraction(hi))


def interval_norm(f: IntervalVector) -> Fraction:
    """hi - lo, strictly positive; ||O|| = 0."""
    if is_zero(f):
        return Fraction(0)
    return f.hi - f.lo


def interval_add(f: IntervalVector, g: IntervalVector) -> IntervalVector:
    """f (+) g: glues (lo(f), hi(f)) and (hi(f), hi(g)) when hi(f) = lo(g)."""
    if is_zero(f):
        return g
    if is_zero(g):
        return f
    if f.hi != g.lo:
        raise UndefinedSum("intervals %r and %r do not share an endpoint" % (f, g))
    return IntervalArrow(f.lo, g.hi)


def split(f: IntervalArrow) -> tuple[IntervalArrow, IntervalArrow]:
    """Midpoint split: f = g (+) h with both parts valid; always succeeds."""
    mid = (f.lo + f.hi) / 2
    return IntervalArrow(f.lo, mid), IntervalArrow(mid, f.hi)


def _composable(f: IntervalArrow, g: IntervalArrow) -> bool:
    return f.hi == g.lo


def interval_inner(f: IntervalVector, g: IntervalVector) -> Fraction:
    if is_zero(f) or is_zero(g):
        return Fraction(0)
    if f == g or _composable(f, g):
        return interval_norm(f) * interval_norm(g)
    return Fraction(0)


def interval_outer(f: IntervalVector, g: IntervalVector) -> Multivector:
    if is_zero(f) or is_zero(g) or f == g or _composable(f, g):
        return Multivector.zero()
    return _wedge(f, g)


def interval_geometric(f: IntervalVector, g: IntervalVector) -> Multivector:
    return Multivector(interval_inner(f, g)) + interval_outer(f, g)


def interval_products(f: IntervalVector, g: IntervalVector):
    """(inner, outer, geometric) of the pair, with rational scalars."""
    return interval_inner(f, g), interval_outer(f, g), interval_geometric(f, g)

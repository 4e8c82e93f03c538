"""Inner, outer (wedge), and geometric products of arrow vectors.

Products map into multivectors with an integer scalar part and integer
coefficients on canonical bivector blades.  The coefficient ring is the
signed integers: the stated scalars are all natural numbers, but blade
cancellation on orthogonal pairs (f∧g + g∧f = 0) needs additive inverses.

A blade stores its two vectors in the canonical arrow order (lexicographic
on id); wedging in the reversed order contributes coefficient -1.  The
blade "area" is not stored, being derivable as ||first|| × ||second||.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .category import FiniteCategory
from .vectors import Basis, NormTable, Vector, _check_vector, is_zero


@dataclass(frozen=True, order=True)
class Blade2:
    """Canonical grade-2 blade: first < second in the carrier order."""

    first: Any
    second: Any


class Multivector:
    """Scalar plus signed combination of canonical bivector blades.

    Canonical form never stores a zero blade coefficient; equality is
    field-wise equality of canonical forms.  Scalars are integers for
    category arrows and exact rationals for the real-line backend.
    """

    def __init__(self, scalar=0, blades=None):
        self.scalar = scalar
        self.blades = {b: c for b, c in (blades or {}).items() if c != 0}

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def from_blade(cls, blade: Blade2, coefficient=1):
        return cls(0, {blade: coefficient})

    def is_zero(self) -> bool:
        return self.scalar == 0 and not self.blades

    def __add__(self, other: "Multivector") -> "Multivector":
        blades = dict(self.blades)
        for b, c in other.blades.items():
            blades[b] = blades.get(b, 0) + c
        return Multivector(self.scalar + other.scalar, blades)

    def __neg__(self) -> "Multivector":
        return Multivector(-self.scalar, {b: -c for b, c in self.blades.items()})

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.scalar == other.scalar and self.blades == other.blades

    def __hash__(self):
        return hash((self.scalar, frozenset(self.blades.items())))

    def __repr__(self):
        terms = []
        if self.scalar != 0 or not self.blades:
            terms.append(str(self.scalar))
        for b in sorted(self.blades):
            c = self.blades[b]
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            coeff = "" if mag == 1 else "%s*" % mag
            terms.append("%s %s(%s∧%s)" % (sign, coeff, b.first, b.second))
        return " ".join(terms)


def _wedge(f, g, key=lambda v: v) -> Multivector:
    """Oriented blade f∧g: +1 on the canonically ordered pair, else -1."""
    kf, kg = key(f), key(g)
    if kf < kg:
        return Multivector.from_blade(Blade2(f, g), 1)
    return Multivector.from_blade(Blade2(g, f), -1)


def inner(category: FiniteCategory, norms: NormTable, f: Vector, g: Vector) -> int:
    """||f|| × ||g|| when g = f or cod(f) = dom(g); 0 otherwise.

    Asymmetric by design when only one composite exists.  The zero vector
    is orthogonal to everything, itself included.
    """
    _check_vector(category, f)
    _check_vector(category, g)
    if is_zero(f) or is_zero(g):
        return 0
    if f == g or category.composable(f, g):
        return norms[f] * norms[g]
    return 0


def is_orthogonal(category: FiniteCategory, norms: NormTable, f: Vector, g: Vector) -> bool:
    """Neither composite exists: f·g = g·f = 0."""
    return inner(category, norms, f, g) == 0 and inner(category, norms, g, f) == 0


def is_parallel(category: FiniteCategory, f: Vector, g: Vector) -> bool:
    """f = g, or both composites g∘f and f∘g exist.  Non-zero vectors only."""
    _check_vector(category, f)
    _check_vector(category, g)
    if is_zero(f) or is_zero(g):
        raise ValueError("parallelism is defined for non-zero vectors")
    return f == g or (category.composable(f, g) and category.composable(g, f))


def outer(category: FiniteCategory, norms: NormTable, f: Vector, g: Vector) -> Multivector:
    """f∧g: an oriented bivector when the pair neither composes nor coincides."""
    _check_vector(category, f)
    _check_vector(category, g)
    if is_zero(f) or is_zero(g) or f == g or category.composable(f, g):
        return Multivector.zero()
    return _wedge(f, g)


def blade_area(norms: NormTable, blade: Blade2) -> int:
    return norms[blade.first] * norms[blade.second]


def geometric(category: FiniteCategory, norms: NormTable, f: Vector, g: Vector) -> Multivector:
    """fg = f·g + f∧g; for f = g non-zero this is the scalar ||f||²."""
    return Multivector(inner(category, norms, f, g)) + outer(category, norms, f, g)


def anticommutator(category: FiniteCategory, norms: NormTable, f: Vector, g: Vector) -> Multivector:
    """fg + gf under componentwise addition."""
    return geometric(category, norms, f, g) + geometric(category, norms, g, f)


@dataclass
class CliffordReport:
    """Counterexamples to the two Clifford conditions (expected: none)."""

    unit_square_failures: list[tuple[str, Multivector]]
    anticommutation_failures: list[tuple[str, str]]

    @property
    def holds(self) -> bool:
        return not self.unit_square_failures and not self.anticommutation_failures


def clifford_report(category: FiniteCategory, norms: NormTable, basis: Basis) -> CliffordReport:
    """Check e² = 1 for basis arrows and fg = -gf on orthogonal pairs."""
    unit_failures = []
    for e in basis:
        square = geometric(category, norms, e, e)
        if square != Multivector(1):
            unit_failures.append((e, square))
    anti_failures = []
    vectors = category.non_identity_arrows()
    for f in vectors:
        for g in vectors:
            if f == g or not is_orthogonal(category, norms, f, g):
                continue
            if geometric(category, norms, f, g) != -geometric(category, norms, g, f):
                anti_failures.append((f, g))
    return CliffordReport(unit_failures, anti_failures)

"""Shared test utilities: random category generation and independent oracles."""

from __future__ import annotations

import random

from catgeo import FiniteCategory, Multivector, build_free, build_thin
from catgeo.geometry import _wedge
from catgeo.vectors import Basis


def random_thin(rng: random.Random, max_objects: int = 8, max_edges: int = 14) -> FiniteCategory:
    """Thin category of a random DAG; edges only go i -> j with i < j."""
    n = rng.randint(1, max_objects)
    objects = ["a%d" % i for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)
    m = rng.randint(0, min(max_edges, len(pairs)))
    generators = [("g%d" % k, "a%d" % i, "a%d" % j) for k, (i, j) in enumerate(pairs[:m])]
    return build_thin(objects, generators)


def random_free(rng: random.Random, max_objects: int = 6, max_edges: int = 8) -> FiniteCategory:
    """Free category on a random acyclic multigraph (parallel edges allowed)."""
    n = rng.randint(1, max_objects)
    objects = ["a%d" % i for i in range(n)]
    m = rng.randint(0, max_edges) if n > 1 else 0
    generators = []
    for k in range(m):
        i = rng.randint(0, n - 2)
        j = rng.randint(i + 1, n - 1)
        generators.append(("g%d" % k, "a%d" % i, "a%d" % j))
    return build_free(objects, generators)


def oracle_norms(category: FiniteCategory, basis: Basis, depth_bound: int) -> dict[str, int]:
    """Brute-force minima over all composable basis sequences up to the bound.

    Enumerates every sequence (no visited pruning), recording the minimal
    length realizing each arrow; independent of the BFS implementation.
    """
    best: dict[str, int] = {}

    def extend(arrow: str, length: int) -> None:
        if best.get(arrow, depth_bound + 1) > length:
            best[arrow] = length
        if length >= depth_bound:
            return
        cod = category.arrow(arrow).cod
        for e in basis:
            if category.arrow(e).dom == cod:
                composite = category.table[(arrow, e)]
                if not category.is_identity(composite):
                    extend(composite, length + 1)

    for e in basis:
        extend(e, 1)
    return best


def closed_form_anticommutator(category, norms, f: str, g: str) -> Multivector:
    """The four-case closed form of fg + gf for distinct non-zero vectors."""
    fa, ga = category.arrow(f), category.arrow(g)
    fg_composes = fa.cod == ga.dom
    gf_composes = ga.cod == fa.dom
    if fg_composes and gf_composes:
        return Multivector(2 * norms[f] * norms[g])
    if fg_composes:
        return Multivector(norms[f] * norms[g]) + _wedge(g, f)
    if gf_composes:
        return Multivector(norms[g] * norms[f]) + _wedge(f, g)
    return Multivector.zero()

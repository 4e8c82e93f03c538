"""Law suites over randomly generated categories and rational intervals."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from catgeo import (
    ZERO,
    anticommutator,
    atomic_basis,
    build_free,
    build_thin,
    clifford_report,
    compute_norms,
    geometric,
    inner,
    interval,
    interval_add,
    interval_norm,
    outer,
    vec_add,
)

from helpers import closed_form_anticommutator, oracle_norms


@st.composite
def thin_categories(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    objects = ["a%d" % i for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs), max_size=min(10, len(pairs))) if pairs else st.just(set()))
    generators = [("g%d" % k, "a%d" % i, "a%d" % j) for k, (i, j) in enumerate(sorted(chosen))]
    return build_thin(objects, generators)


@st.composite
def free_categories(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    objects = ["a%d" % i for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=6) if pairs else st.just([]))
    generators = [("g%d" % k, "a%d" % i, "a%d" % j) for k, (i, j) in enumerate(edges)]
    return build_free(objects, generators)


categories = thin_categories() | free_categories()


@settings(max_examples=60, deadline=None)
@given(categories)
def test_norm_positivity_and_atomicity(cat):
    basis = atomic_basis(cat)
    norms = compute_norms(cat, basis)
    for arrow in cat.non_identity_arrows():
        assert norms[arrow] >= 1
        assert (norms[arrow] == 1) == (arrow in basis)
    assert norms.norm(ZERO) == 0


@settings(max_examples=60, deadline=None)
@given(categories)
def test_triangle_inequality(cat):
    norms = compute_norms(cat, atomic_basis(cat))
    for f in cat.non_identity_arrows():
        for g in cat.non_identity_arrows():
            if cat.composable(f, g):
                composite = cat.table[(f, g)]
                assert norms[composite] <= norms[f] + norms[g]


@settings(max_examples=40, deadline=None)
@given(categories)
def test_bfs_norms_match_brute_force(cat):
    vectors = cat.non_identity_arrows()
    if len(vectors) > 12:
        return
    basis = atomic_basis(cat)
    norms = compute_norms(cat, basis)
    expected = oracle_norms(cat, basis, len(vectors))
    assert dict(norms.items()) == dict(sorted(expected.items()))


@settings(max_examples=40, deadline=None)
@given(categories)
def test_clifford_conditions(cat):
    basis = atomic_basis(cat)
    norms = compute_norms(cat, basis)
    assert clifford_report(cat, norms, basis).holds


@settings(max_examples=40, deadline=None)
@given(categories)
def test_anticommutator_matches_closed_form(cat):
    norms = compute_norms(cat, atomic_basis(cat))
    vectors = cat.non_identity_arrows()
    for f in vectors:
        for g in vectors:
            if f == g:
                continue
            assert anticommutator(cat, norms, f, g) == closed_form_anticommutator(cat, norms, f, g)


@settings(max_examples=40, deadline=None)
@given(categories)
def test_zero_vector_laws(cat):
    norms = compute_norms(cat, atomic_basis(cat))
    for f in cat.non_identity_arrows():
        assert vec_add(cat, ZERO, f) == f
        assert vec_add(cat, f, ZERO) == f
        assert inner(cat, norms, f, ZERO) == 0
        assert inner(cat, norms, ZERO, f) == 0
        assert outer(cat, norms, f, ZERO).is_zero()
        assert outer(cat, norms, ZERO, f).is_zero()
        assert geometric(cat, norms, ZERO, f).is_zero()


@settings(max_examples=40, deadline=None)
@given(categories)
def test_outer_antisymmetry_on_orthogonal_pairs(cat):
    from catgeo import is_orthogonal

    norms = compute_norms(cat, atomic_basis(cat))
    for f in cat.non_identity_arrows():
        for g in cat.non_identity_arrows():
            if is_orthogonal(cat, norms, f, g):
                assert outer(cat, norms, f, g) == -outer(cat, norms, g, f)
                assert anticommutator(cat, norms, f, g).is_zero() or f == g


rationals = st.fractions(min_value=Fraction(-100), max_value=Fraction(100), max_denominator=997)


@given(rationals, rationals, rationals)
def test_interval_norm_additivity(a, b, c):
    lo, mid, hi = sorted((a, b, c))
    if lo == mid or mid == hi:
        return
    g = interval(lo, mid)
    h = interval(mid, hi)
    f = interval_add(g, h)
    assert interval_norm(f) == interval_norm(g) + interval_norm(h)


@given(rationals, rationals)
def test_interval_midpoint_split(a, b):
    if a == b:
        return
    lo, hi = min(a, b), max(a, b)
    from catgeo import split

    f = interval(lo, hi)
    g, h = split(f)
    assert interval_add(g, h) == f
    assert interval_norm(g) + interval_norm(h) == interval_norm(f)

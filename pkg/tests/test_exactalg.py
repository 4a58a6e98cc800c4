import itertools
from fractions import Fraction

import pytest
from hypothesis import example, given, settings, strategies as st

from flagcover.errors import CoverageImpossible, DimensionMismatch, FieldTooSmall
from flagcover.exactalg import (
    GF,
    QQ,
    Field,
    Subspace,
    avoid_subspaces,
    intersect,
    inverse,
    mat_vec,
    member,
    nullspace,
    rank,
    subspace_sum,
    transpose,
    unit_vector,
)
from conftest import all_vectors


def e(i, d=3, field=QQ):
    return unit_vector(field, d, i)


def span(*vs, d=3, field=QQ):
    return Subspace.span(field, d, vs)


# -- rank ---------------------------------------------------------------------

def test_rank_identity():
    assert rank([e(1), e(2), e(3)], QQ) == 3


def test_rank_zero_matrix():
    assert rank([[0] * 5, [0] * 5], QQ) == 0


def test_rank_proportional_rows():
    assert rank([[1, 2], [2, 4]], QQ) == 1


def test_rank_depends_on_field():
    # [[1, 1], [1, -1]] has determinant -2
    assert rank([[1, 1], [1, -1]], QQ) == 2
    assert rank([[1, 1], [1, 1]], GF(2)) == 1
    assert rank([GF(2).vector([1, 1]), GF(2).vector([1, -1])], GF(2)) == 1


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
@example([[0, 3, 1], [3, -1, 0], [2, 0, 1], [0, 0, 1]])  # int pivots must not go through float division
@settings(max_examples=60, deadline=None)
def test_rank_of_transpose_rationals(m):
    assert rank(m, QQ) == rank(transpose(m), QQ)


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rank_of_transpose_f5(m):
    F = GF(5)
    rows = [F.vector(r) for r in m]
    assert rank(rows, F) == rank(transpose(rows), F)


@given(matrices)
@settings(max_examples=40, deadline=None)
def test_rank_over_f3_matches_counting(m):
    # |row space| = 3^rank, counted by brute force
    F = GF(3)
    rows = [F.vector(r) for r in m]
    n = len(rows[0])
    spanned = set()
    for coeffs in itertools.product(range(3), repeat=len(rows)):
        spanned.add(tuple(sum(c * r[t] for c, r in zip(coeffs, rows)) % 3 for t in range(n)))
    assert 3 ** rank(rows, F) == len(spanned)


def test_rational_elimination_is_reproducible():
    m = [[Fraction(1, 3), 2, 5], [7, Fraction(-2, 9), 1], [1, 1, Fraction(1, 7)]]
    a = inverse(m, QQ)
    b = inverse(m, QQ)
    assert a == b
    assert all(isinstance(x, Fraction) for row in a for x in row)
    # exact inverse: m @ a = I
    for i, col in enumerate(transpose(a)):
        assert mat_vec(QQ, m, col) == unit_vector(QQ, 3, i + 1)


def test_nullspace_and_inverse():
    rows = [[1, 2, 3], [2, 4, 6]]
    ker = nullspace(rows, QQ, 3)
    assert len(ker) == 2
    for x in ker:
        assert mat_vec(QQ, rows, x) == (0, 0)
    with pytest.raises(ValueError):
        inverse([[1, 2], [2, 4]], QQ)


# -- fields -------------------------------------------------------------------

def test_field_validation_and_coercion():
    with pytest.raises(ValueError):
        Field.prime(4)
    F = GF(7)
    assert F(-1) == 6
    assert F(Fraction(1, 2)) == 4
    assert F("3/2") == 5
    assert QQ("6/4") == Fraction(3, 2)
    assert QQ("6/4").denominator == 2
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))


# -- subspaces -----------------------------------------------------------------

def test_intersect_coordinate_subspaces():
    assert intersect(span(e(1), e(2)), span(e(2), e(3))) == span(e(2))


def test_intersect_idempotent():
    a = span([1, 2, 3], [0, 1, 1])
    assert intersect(a, a) == a


def test_intersect_disjoint():
    assert intersect(span(e(1)), span(e(2))).dim == 0


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        intersect(span(e(1)), Subspace.span(QQ, 2, [[1, 0]]))


def test_member():
    s = span(e(1), e(2))
    assert member(e(1), s)
    assert not member(e(3), s)
    assert member((0, 0, 0), s)
    assert member((0, 0, 0), Subspace.zero(QQ, 3))


vectors6 = st.lists(st.integers(-2, 2), min_size=6, max_size=6)


@given(st.lists(vectors6, max_size=5), st.lists(vectors6, max_size=5))
@settings(max_examples=60, deadline=None)
def test_modular_law(avecs, bvecs):
    a = Subspace.span(QQ, 6, avecs)
    b = Subspace.span(QQ, 6, bvecs)
    cap = intersect(a, b)
    assert cap.dim + subspace_sum(a, b).dim == a.dim + b.dim
    assert cap <= a and cap <= b


@given(st.lists(st.lists(st.integers(0, 1), min_size=4, max_size=4), max_size=4),
       st.lists(st.lists(st.integers(0, 1), min_size=4, max_size=4), max_size=4))
@settings(max_examples=40, deadline=None)
def test_intersection_size_by_enumeration_f2(avecs, bvecs):
    F = GF(2)
    a = Subspace.span(F, 4, avecs)
    b = Subspace.span(F, 4, bvecs)
    count = sum(1 for v in all_vectors(F, 4) if member(v, a) and member(v, b))
    assert count == 2 ** intersect(a, b).dim


# -- avoidance -----------------------------------------------------------------

def test_avoid_one_line():
    w = Subspace.whole(QQ, 2)
    assert avoid_subspaces(w, [Subspace.span(QQ, 2, [[1, 0]])]) == (0, 1)


def test_avoid_two_lines_matches_scan():
    w = Subspace.whole(QQ, 2)
    avoid = [Subspace.span(QQ, 2, [[1, 0]]), Subspace.span(QQ, 2, [[0, 1]])]
    # scan of {0,1}-combinations: only the sum avoids both lines
    good = [c for c in itertools.product((0, 1), repeat=2)
            if any(c) and not any(member(c, a) for a in avoid)]
    assert good == [(1, 1)]
    assert avoid_subspaces(w, avoid) == (1, 1)


def test_avoid_containing_subspace():
    w = span(e(1))
    with pytest.raises(CoverageImpossible):
        avoid_subspaces(w, [span(e(1))])


def test_avoid_field_too_small():
    F = GF(2)
    lines = [Subspace.span(F, 2, [v]) for v in ([1, 0], [0, 1], [1, 1])]
    with pytest.raises(FieldTooSmall):
        avoid_subspaces(Subspace.whole(F, 2), lines)
    # two lines never cover the plane
    assert avoid_subspaces(Subspace.whole(F, 2), lines[:2]) == (1, 1)


def test_avoid_needs_exhaustive_fallback_over_f3():
    F = GF(3)
    # three planes of F_3^3 not covering it; scan with c in {1, 2} may not suffice
    planes = [Subspace.span(F, 3, vs) for vs in ([[1, 0, 0], [0, 1, 0]], [[1, 0, 0], [0, 0, 1]], [[0, 1, 0], [0, 0, 1]])]
    v = avoid_subspaces(Subspace.whole(F, 3), planes)
    assert not any(member(v, p) for p in planes)


@given(st.lists(st.lists(vectors6, min_size=1, max_size=4), min_size=1, max_size=3),
       st.lists(vectors6, min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_avoid_output_rejected_by_no_subspace(avoid_vecs, wvecs):
    w = Subspace.span(QQ, 6, wvecs)
    avoid = [Subspace.span(QQ, 6, vs) for vs in avoid_vecs]
    if w.dim == 0 or any(w <= a for a in avoid):
        return
    v = avoid_subspaces(w, avoid)
    assert member(v, w)
    assert not any(member(v, a) for a in avoid)
    assert v == avoid_subspaces(w, avoid)

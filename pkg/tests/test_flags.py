import itertools
import random

import pytest

from flagcover.errors import DimensionMismatch
from flagcover.exactalg import GF, QQ, Subspace, intersect, unit_vector
from flagcover.flags import (
    Flag,
    FlagTuple,
    change_basis,
    dim_grid,
    direct_sum,
    is_transverse,
    pair_dims,
    random_flag,
    random_tuple,
    standard_flag,
    transverse_tuple,
)


def test_standard_flag_columns():
    f = standard_flag(3)
    assert f.columns == tuple(unit_vector(QQ, 3, i) for i in (1, 2, 3))
    assert standard_flag(1).columns == ((1,),)
    assert standard_flag(4).layer(2) == Subspace.span(QQ, 4, [unit_vector(QQ, 4, 1), unit_vector(QQ, 4, 2)])


def test_flag_rejects_singular_basis():
    with pytest.raises(ValueError):
        Flag.from_columns([[1, 2], [2, 4]])


def test_random_flag_determinism_and_rank():
    a = random_flag(2, QQ, seed=3)
    assert a == random_flag(2, QQ, seed=3)
    for seed in range(20):
        f = random_flag(4, QQ, seed=seed, coeff_bound=1)
        assert all(f.layer(i).dim == i for i in range(5))


def test_random_flag_residues():
    f = random_flag(3, GF(5), seed=1)
    assert all(0 <= x < 5 for c in f.columns for x in c)


def test_level_and_new_vectors():
    f = Flag.from_columns([[1, 1, 0], [0, 1, 0], [2, 0, 1]])
    assert f.level((1, 1, 0)) == 1
    assert f.level((0, 1, 0)) == 2
    assert f.level((0, 0, 0)) == 0
    assert f.is_new((3, 0, 1), 3)


def test_transverse_examples(generic3):
    s = standard_flag(2)
    assert not is_transverse(FlagTuple.of(s, s))
    assert is_transverse(FlagTuple.of(standard_flag(3)))
    assert is_transverse(generic3)


def _transverse_by_definition(t):
    """Codimension formula evaluated with explicit subspace intersections."""
    d = t.d
    for size in range(2, t.m + 1):
        for subset in itertools.combinations(range(t.m), size):
            for levels in itertools.product(range(1, d + 1), repeat=size):
                s = Subspace.whole(t.field, d)
                for f, lv in zip(subset, levels):
                    s = intersect(s, t[f].layer(lv))
                if d - s.dim != min(d, sum(d - lv for lv in levels)):
                    return False
    return True


@pytest.mark.parametrize("seed", range(6))
def test_is_transverse_matches_definition(seed):
    t = random_tuple(3, 3, QQ, seed, coeff_bound=1 if seed % 2 else 100)
    assert is_transverse(t) == _transverse_by_definition(t)


def test_random_triple_is_transverse():
    t = random_tuple(3, 3, QQ, seed=11, coeff_bound=100)
    assert is_transverse(t) and _transverse_by_definition(t)


def test_transverse_invariant_under_change_of_basis():
    rng = random.Random(0)
    for seed in range(8):
        t = random_tuple(3, 3, QQ, seed, coeff_bound=1)
        g = random_flag(3, QQ, rng=rng)  # any invertible matrix
        rows = [tuple(c[r] for c in g.columns) for r in range(3)]
        assert is_transverse(change_basis(t, rows)) == is_transverse(t)


def test_direct_sum_of_standard_flags():
    t = direct_sum(FlagTuple.of(standard_flag(2)), FlagTuple.of(standard_flag(1)))
    assert t[0] == standard_flag(3)


def test_direct_sum_layers(generic3):
    t = direct_sum(generic3, generic3)
    d = 3
    first_block = Subspace.span(QQ, 6, [unit_vector(QQ, 6, i) for i in range(1, 4)])
    for f, g in zip(t, generic3):
        assert f.layer(d) == first_block
        for j in range(d + 1):
            # restricting to the first block reproduces the original layers
            proj = Subspace.span(QQ, 3, [b[:3] for b in f.layer(j).basis])
            assert proj == g.layer(j)
            assert all(x == 0 for b in f.layer(j).basis for x in b[3:])


def test_direct_sum_mismatch():
    with pytest.raises(DimensionMismatch):
        direct_sum(FlagTuple.of(standard_flag(2)), FlagTuple.of(standard_flag(2), standard_flag(2)))


def test_pair_dims_against_intersections():
    for seed in range(5):
        u, v = random_tuple(2, 4, QQ, seed, coeff_bound=1).flags
        D = pair_dims(u, v)
        for i in range(5):
            for j in range(5):
                assert D[i, j] == intersect(u.layer(i), v.layer(j)).dim


def test_grid_corners(generic3):
    g = dim_grid(generic3)
    assert g(3, 3, 3) == 3
    assert all(g(0, j, k) == 0 for j in range(4) for k in range(4))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_transverse_grid_formula(d):
    t, _ = transverse_tuple(3, d, QQ, seed=d)
    g = dim_grid(t)
    u, v, w = t
    for i, j, k in itertools.product(range(d + 1), repeat=3):
        explicit = intersect(intersect(u.layer(i), v.layer(j)), w.layer(k)).dim
        assert g(i, j, k) == explicit == max(0, i + j + k - 2 * d)


@pytest.mark.parametrize("seed", range(6))
def test_grid_unit_steps(seed):
    t = random_tuple(3, 4, GF(3) if seed % 2 else QQ, seed, coeff_bound=1)
    g = dim_grid(t)
    tab = g.table
    for axis in range(3):
        steps = tab.take(range(1, 5), axis=axis) - tab.take(range(0, 4), axis=axis)
        assert set(steps.flatten()) <= {0, 1}
    assert g(4, 4, 4) == 4

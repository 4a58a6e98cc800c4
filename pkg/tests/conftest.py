import itertools
import random

import pytest

from flagcover.exactalg import QQ, GF
from flagcover.flags import Flag, FlagTuple, random_tuple, transverse_tuple


def perm_flag(perm, field=QQ, rng=None, fill=0.0):
    """Flag whose i-th basis vector is e_perm[i] plus random multiples of earlier ones."""
    d = len(perm)
    base = [[1 if r == perm[j] - 1 else 0 for r in range(d)] for j in range(d)]
    cols = []
    for j in range(d):
        c = list(base[j])
        for k in range(j):
            if rng is not None and rng.random() < fill:
                x = rng.randint(-2, 2)
                c = [a + x * b for a, b in zip(c, base[k])]
        cols.append(c)
    return Flag.from_columns(cols, field)


def structured_triple(seed, d=None, field=QQ):
    """Triples with varied cycle structure: sparse random, permutation-based, or generic."""
    rng = random.Random(seed)
    d = d or rng.randint(2, 7)
    kind = seed % 3
    if kind == 0:
        return random_tuple(3, d, field, seed, coeff_bound=1)
    if kind == 1:
        flags = []
        for _ in range(3):
            p = list(range(1, d + 1))
            rng.shuffle(p)
            flags.append(perm_flag(p, field, rng, rng.random()))
        return FlagTuple(tuple(flags))
    return random_tuple(3, d, field, seed)


def all_vectors(field, d):
    for xs in itertools.product(field.elements(), repeat=d):
        yield tuple(xs)


@pytest.fixture(scope="session")
def generic3():
    """A certified transverse triple in Q^3."""
    t, _ = transverse_tuple(3, 3, QQ, seed=7)
    return t


@pytest.fixture(scope="session")
def block6(generic3):
    from flagcover.flags import direct_sum

    other, _ = transverse_tuple(3, 3, QQ, seed=8)
    return direct_sum(generic3, other)


@pytest.fixture
def F5():
    return GF(5)

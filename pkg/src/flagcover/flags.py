"""Complete flags, tuples of flags, and their intersection dimensions."""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import DimensionMismatch
from .exactalg import (
    QQ,
    Echelon,
    Field,
    Subspace,
    Vector,
    inverse,
    mat_vec,
    nullspace,
    rank,
    transpose,
    unit_vector,
)

FLAG_NAMES = "UVWXYZABCDEFGHIJKLMNOPQRST"


@dataclass(frozen=True)
class Flag:
    """A complete flag in K^d given by an ordered basis.

    ``columns[i-1]`` is a new vector for layer i, so layer(i) is the span of the
    first i columns.
    """

    field: Field
    columns: tuple[Vector, ...]

    def __post_init__(self):
        d = len(self.columns)
        if d < 1 or any(len(c) != d for c in self.columns):
            raise DimensionMismatch("a flag basis must be a square d x d matrix with d >= 1")
        if rank(self.columns, self.field) != d:
            raise ValueError("flag basis is not invertible")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field = QQ) -> "Flag":
        return cls(field, tuple(field.vector(c) for c in columns))

    @property
    def d(self) -> int:
        return len(self.columns)

    @cached_property
    def dual_rows(self) -> tuple[Vector, ...]:
        """Rows of the inverse basis matrix; row r vanishes on layer(i) iff r >= i (0-based)."""
        return tuple(inverse(transpose(self.columns), self.field))

    def coordinates(self, v: Sequence) -> Vector:
        return mat_vec(self.field, self.dual_rows, v)

    def level(self, v: Sequence) -> int:
        """The unique i with v new for layer i (0 for the zero vector)."""
        x = self.coordinates(v)
        for i in range(self.d, 0, -1):
            if x[i - 1]:
                return i
        return 0

    def is_new(self, v: Sequence, i: int) -> bool:
        return self.level(v) == i

    def layer_equations(self, i: int) -> tuple[Vector, ...]:
        """Linear equations cutting out layer(i)."""
        return self.dual_rows[i:]

    def layer(self, i: int) -> Subspace:
        if not 0 <= i <= self.d:
            raise IndexError(f"layer {i} outside 0..{self.d}")
        return Subspace.span(self.field, self.d, self.columns[:i])


@dataclass(frozen=True)
class FlagTuple:
    """An ordered m-tuple of flags sharing the ambient space and field."""

    flags: tuple[Flag, ...]

    def __post_init__(self):
        if not self.flags:
            raise ValueError("need at least one flag")
        f0 = self.flags[0]
        for f in self.flags[1:]:
            if f.d != f0.d or f.field != f0.field:
                raise DimensionMismatch("flags must share dimension and field")

    @classmethod
    def of(cls, *flags: Flag) -> "FlagTuple":
        return cls(tuple(flags))

    @property
    def m(self) -> int:
        return len(self.flags)

    @property
    def d(self) -> int:
        return self.flags[0].d

    @property
    def field(self) -> Field:
        return self.flags[0].field

    def __len__(self):
        return len(self.flags)

    def __iter__(self) -> Iterator[Flag]:
        return iter(self.flags)

    def __getitem__(self, i):
        return self.flags[i]

    def name(self, index: int) -> str:
        return FLAG_NAMES[index]


# -- constructors -------------------------------------------------------------

def standard_flag(d: int, field: Field = QQ) -> Flag:
    return Flag(field, tuple(unit_vector(field, d, i) for i in range(1, d + 1)))


MAX_RETRIES = 1000


def random_flag(d: int, field: Field = QQ, seed=None, coeff_bound: int = 10, rng=None) -> Flag:
    """Flag with integer basis entries uniform in [-coeff_bound, coeff_bound].

    Singular draws are resampled (at most ``MAX_RETRIES`` times). Passing ``rng``
    instead of ``seed`` draws from a shared ``random.Random`` stream.
    """
    if rng is None:
        rng = random.Random(seed)
    for _ in range(MAX_RETRIES):
        cols = [[rng.randint(-coeff_bound, coeff_bound) for _ in range(d)] for _ in range(d)]
        cols = tuple(field.vector(c) for c in cols)
        if rank(cols, field) == d:
            return Flag(field, cols)
    raise RuntimeError(f"no invertible {d}x{d} matrix after {MAX_RETRIES} draws")


def random_tuple(m: int, d: int, field: Field = QQ, seed=None, coeff_bound: int = 10) -> FlagTuple:
    rng = random.Random(seed)
    return FlagTuple(tuple(random_flag(d, field, coeff_bound=coeff_bound, rng=rng) for _ in range(m)))


def transverse_tuple(m: int, d: int, field: Field = QQ, seed=None, coeff_bound: int = 10) -> tuple[FlagTuple, int]:
    """Random m-tuple certified transverse; returns (tuple, attempts used)."""
    rng = random.Random(seed)
    for attempt in range(1, MAX_RETRIES + 1):
        t = FlagTuple(tuple(random_flag(d, field, coeff_bound=coeff_bound, rng=rng) for _ in range(m)))
        if is_transverse(t):
            return t, attempt
    raise RuntimeError(f"no transverse {m}-tuple in K^{d} after {MAX_RETRIES} attempts")


def direct_sum(t1: FlagTuple, t2: FlagTuple) -> FlagTuple:
    """Flags on K^(d+e) whose layer j is U_j x 0 for j <= d and K^d x V_(j-d) above."""
    if t1.m != t2.m or t1.field != t2.field:
        raise DimensionMismatch("direct sum needs the same number of flags over the same field")
    d, e = t1.d, t2.d
    zero = t1.field.zero
    flags = []
    for f, g in zip(t1, t2):
        cols = [tuple(c) + (zero,) * e for c in f.columns]
        cols += [(zero,) * d + tuple(c) for c in g.columns]
        flags.append(Flag(t1.field, tuple(cols)))
    return FlagTuple(tuple(flags))


def change_basis(t: FlagTuple, matrix: Sequence[Sequence]) -> FlagTuple:
    """Apply one invertible linear map (given by rows) to every flag."""
    field = t.field
    rows = [field.vector(r) for r in matrix]
    return FlagTuple(tuple(Flag(field, tuple(mat_vec(field, rows, c) for c in f.columns)) for f in t))


# -- intersection data --------------------------------------------------------

def intersection_equations(t: FlagTuple, levels: dict[int, int]) -> list[Vector]:
    eqs: list[Vector] = []
    for idx, lvl in levels.items():
        eqs.extend(t[idx].layer_equations(lvl))
    return eqs


def intersection(t: FlagTuple, levels: dict[int, int]) -> Subspace:
    """Intersection of the layers {flag index: level}."""
    eqs = intersection_equations(t, levels)
    return Subspace.span(t.field, t.d, nullspace(eqs, t.field, t.d))


def intersection_dim(t: FlagTuple, levels: dict[int, int]) -> int:
    eqs = intersection_equations(t, levels)
    return t.d - (rank(eqs, t.field) if eqs else 0)


@functools.lru_cache(maxsize=4096)
def pair_dims(u: Flag, v: Flag) -> np.ndarray:
    """Table D[i, j] = dim(U_i ∩ V_j) for 0 <= i, j <= d."""
    if u.d != v.d or u.field != v.field:
        raise DimensionMismatch("flags must share dimension and field")
    d = u.d
    # In U-coordinates layer U_i is "support in the first i coordinates", so
    # each V_j reduced by last-nonzero position gives the whole column at once.
    table = np.zeros((d + 1, d + 1), dtype=np.int64)
    for j in range(1, d + 1):
        coords = [tuple(reversed(u.coordinates(c))) for c in v.columns[:j]]
        e = Echelon(u.field, d).extend(coords)
        lasts = sorted(d - pc for pc in e.pivots)
        for i in range(d + 1):
            table[i, j] = sum(1 for x in lasts if x <= i)
    table.flags.writeable = False
    return table


@dataclass(frozen=True)
class DimGrid:
    """dim(U_i ∩ V_j ∩ W_k) for all 0 <= i, j, k <= d."""

    d: int
    table: np.ndarray

    def __call__(self, i: int, j: int, k: int) -> int:
        return int(self.table[i, j, k])

    def __getitem__(self, idx) -> int:
        return int(self.table[idx])


@functools.lru_cache(maxsize=1024)
def dim_grid(t: FlagTuple) -> DimGrid:
    if t.m != 3:
        raise ValueError("dim_grid needs exactly three flags")
    u, v, w = t.flags
    d, field = t.d, t.field
    table = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    # codim of U_i ∩ V_j ∩ W_k is the rank of the stacked layer equations;
    # reuse the echelon for U_i, extend by V rows, then by W rows.
    for i in range(d + 1):
        eu = Echelon(field, d).extend(u.dual_rows[i:])
        ev = eu
        for j in range(d, -1, -1):
            if j < d:
                ev.add(v.dual_rows[j])
            ew = ev.copy()
            for k in range(d, -1, -1):
                if k < d:
                    ew.add(w.dual_rows[k])
                table[i, j, k] = d - ew.rank
    table.flags.writeable = False
    return DimGrid(d, table)


def is_transverse(t: FlagTuple) -> bool:
    """Check codim(∩_S layers) = min(d, Σ codims) for every subset S and levels in [d]."""
    d, field = t.d, t.field
    for size in range(2, t.m + 1):
        for subset in itertools.combinations(range(t.m), size):
            for levels in itertools.product(range(1, d + 1), repeat=size):
                eqs: list[Vector] = []
                for idx, lvl in zip(subset, levels):
                    eqs.extend(t[idx].dual_rows[lvl:])
                expected = min(d, sum(d - lvl for lvl in levels))
                if (rank(eqs, field) if eqs else 0) != expected:
                    return False
    return True

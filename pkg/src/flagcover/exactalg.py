"""Exact linear algebra over the rationals and prime fields.

Vectors are tuples of scalars. Rational scalars are :class:`fractions.Fraction`
(always in lowest terms), prime-field scalars are ints in ``range(p)``.
Matrices are sequences of rows. Nothing here ever touches floating point.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import CoverageImpossible, DimensionMismatch, FieldTooSmall

Vector = tuple


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p is None``) or the prime field F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(int(p))

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def size(self) -> int | None:
        return self.p

    @property
    def zero(self):
        return Fraction(0) if self.p is None else 0

    @property
    def one(self):
        return Fraction(1) if self.p is None else 1

    def __call__(self, x):
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def vector(self, xs: Iterable) -> Vector:
        return tuple(self(x) for x in xs)

    def inv(self, a):
        if self.p is None:
            return Fraction(1) / a  # never float division, even for int input
        return pow(a, -1, self.p)

    def nonzero_scalars(self) -> Iterator:
        """1, 2, 3, ... as field elements; finite for F_p."""
        if self.p is None:
            return (Fraction(c) for c in itertools.count(1))
        return iter(range(1, self.p))

    def elements(self) -> range:
        if self.p is None:
            raise ValueError("the rationals cannot be enumerated")
        return range(self.p)

    def format(self, a) -> str:
        if self.p is None:
            return str(a)  # Fraction prints "k" or "num/den"
        return str(int(a))

    def __str__(self):
        return "QQ" if self.p is None else f"GF({self.p})"


QQ = Field()


def GF(p: int) -> Field:
    return Field.prime(p)


# -- vector helpers -----------------------------------------------------------

def is_zero(v: Sequence) -> bool:
    return not any(v)


def add(field: Field, u: Sequence, v: Sequence) -> Vector:
    if field.p is None:
        return tuple(a + b for a, b in zip(u, v))
    p = field.p
    return tuple((a + b) % p for a, b in zip(u, v))


def scale(field: Field, c, v: Sequence) -> Vector:
    if field.p is None:
        return tuple(c * a for a in v)
    p = field.p
    return tuple(c * a % p for a in v)


def combine(field: Field, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    """Linear combination sum(c_i * v_i) of length-n vectors."""
    out = [field.zero] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for t in range(n):
                out[t] += c * v[t]
    if field.p is not None:
        return tuple(x % field.p for x in out)
    return tuple(out)


def mat_vec(field: Field, rows: Sequence[Sequence], v: Sequence) -> Vector:
    if field.p is None:
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in rows)
    p = field.p
    return tuple(sum(a * b for a, b in zip(r, v)) % p for r in rows)


def transpose(rows: Sequence[Sequence]) -> list[tuple]:
    return [tuple(c) for c in zip(*rows)]


def unit_vector(field: Field, n: int, i: int) -> Vector:
    """The i-th standard basis vector, 1-based."""
    return tuple(field.one if t == i - 1 else field.zero for t in range(n))


def zero_vector(field: Field, n: int) -> Vector:
    return (field.zero,) * n


# -- elimination --------------------------------------------------------------

class Echelon:
    """Incrementally maintained row-echelon basis.

    Rows are normalised so the pivot (first nonzero entry) is 1. Pivots are
    chosen as the first nonzero column; there is no magnitude pivoting.
    """

    __slots__ = ("field", "n", "pivots", "rows")

    def __init__(self, field: Field, n: int):
        self.field = field
        self.n = n
        self.pivots: list[int] = []
        self.rows: list[list] = []

    def copy(self) -> "Echelon":
        e = Echelon(self.field, self.n)
        e.pivots = list(self.pivots)
        e.rows = list(self.rows)  # rows are never mutated in place
        return e

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> list:
        """Return v minus its projection onto the current rows (a residual)."""
        w = list(v)
        p = self.field.p
        for pc, row in zip(self.pivots, self.rows):
            c = w[pc]
            if c:
                if p is None:
                    for t in range(pc, self.n):
                        if row[t]:
                            w[t] -= c * row[t]
                else:
                    for t in range(pc, self.n):
                        if row[t]:
                            w[t] = (w[t] - c * row[t]) % p
        return w

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Insert v; return True iff it was independent of the current rows."""
        w = self.reduce(v)
        for pc, x in enumerate(w):
            if x:
                break
        else:
            return False
        inv = self.field.inv(x)
        if self.field.p is None:
            w = [a * inv for a in w]
        else:
            w = [a * inv % self.field.p for a in w]
        pos = bisect.bisect(self.pivots, pc)
        self.pivots.insert(pos, pc)
        self.rows.insert(pos, w)
        return True

    def extend(self, vectors: Iterable[Sequence]) -> "Echelon":
        for v in vectors:
            self.add(v)
        return self


def rref(rows: Sequence[Sequence], field: Field) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form: (nonzero rows, pivot columns)."""
    if not rows:
        return [], []
    n = len(rows[0])
    e = Echelon(field, n).extend(rows)
    out = [list(r) for r in e.rows]
    p = field.p
    # back-substitute so every pivot column is a unit column
    for a in range(len(out) - 1, -1, -1):
        pc = e.pivots[a]
        for b in range(a):
            c = out[b][pc]
            if c:
                if p is None:
                    out[b] = [x - c * y for x, y in zip(out[b], out[a])]
                else:
                    out[b] = [(x - c * y) % p for x, y in zip(out[b], out[a])]
    return [tuple(r) for r in out], list(e.pivots)


def rank(rows: Sequence[Sequence], field: Field) -> int:
    if not rows:
        return 0
    return Echelon(field, len(rows[0])).extend(rows).rank


def nullspace(rows: Sequence[Sequence], field: Field, n: int) -> list[Vector]:
    """Basis of {x in K^n : rows @ x = 0}."""
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [field.zero] * n
        x[f] = field.one
        for r, pc in zip(red, pivots):
            if r[f]:
                x[pc] = -r[f] if field.p is None else (-r[f]) % field.p
        basis.append(tuple(x))
    return basis


def inverse(rows: Sequence[Sequence], field: Field) -> list[Vector]:
    """Inverse of a square matrix; raises ValueError when singular."""
    n = len(rows)
    aug = [tuple(r) + unit_vector(field, n, i + 1) for i, r in enumerate(rows)]
    red, pivots = rref(aug, field)
    if len(red) < n or pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [r[n:] for r in red[:n]]


# -- subspaces ----------------------------------------------------------------

@dataclass(frozen=True)
class Subspace:
    """A subspace of K^n stored by its canonical (RREF) basis."""

    field: Field
    ambient: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(field(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionMismatch(f"vector of length {len(v)} in K^{ambient}")
        red, _ = rref(vecs, field)
        return cls(field, ambient, tuple(red))

    @classmethod
    def whole(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, tuple(unit_vector(field, ambient, i) for i in range(1, ambient + 1)))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return member(v, self)

    def annihilator(self) -> list[Vector]:
        return nullspace(self.basis, self.field, self.ambient)

    def __le__(self, other: "Subspace") -> bool:
        return all(member(b, other) for b in self.basis)


def _check_compatible(a: Subspace, b: Subspace):
    if a.ambient != b.ambient or a.field != b.field:
        raise DimensionMismatch(f"{a.field}^{a.ambient} vs {b.field}^{b.ambient}")


def member(v: Sequence, s: Subspace) -> bool:
    if len(v) != s.ambient:
        raise DimensionMismatch(f"vector of length {len(v)} in K^{s.ambient}")
    e = Echelon(s.field, s.ambient)
    e.pivots = [next(t for t, x in enumerate(r) if x) for r in s.basis]
    e.rows = list(s.basis)
    return e.contains(v)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_compatible(a, b)
    return Subspace.span(a.field, a.ambient, a.basis + b.basis)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """a ∩ b, computed as the joint kernel of both annihilators."""
    _check_compatible(a, b)
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.field, a.ambient)
    eqs = a.annihilator() + b.annihilator()
    return Subspace.span(a.field, a.ambient, nullspace(eqs, a.field, a.ambient))


def solve_kernel(equations: Sequence[Sequence], field: Field, n: int) -> Subspace:
    """The subspace cut out by linear equations (rows)."""
    return Subspace.span(field, n, nullspace(equations, field, n))


def avoid_subspaces(w: Subspace, avoid: Sequence[Subspace]) -> Vector:
    """A vector of ``w`` lying in none of the ``avoid`` subspaces.

    Incremental: keep v outside the subspaces handled so far; when v falls in
    the next one, pick a basis vector u of w outside it and scan v + c*u for
    c = 1, 2, ..., k+1 (each earlier subspace rules out at most one c). Over a
    prime field too small for that scan, every vector of w is enumerated.
    """
    for a in avoid:
        _check_compatible(w, a)
    for a in avoid:
        if w <= a:
            raise CoverageImpossible("an avoided subspace contains the search space")
    field = w.field
    if not avoid:
        return w.basis[0] if w.basis else zero_vector(field, w.ambient)

    v = _incremental_avoid(w, avoid)
    if v is not None:
        return v
    if field.is_finite:
        for coeffs in itertools.product(field.elements(), repeat=w.dim):
            if not any(coeffs):
                continue
            cand = combine(field, coeffs, w.basis, w.ambient)
            if not any(member(cand, a) for a in avoid):
                return cand
    raise FieldTooSmall(f"{field} cannot avoid {len(avoid)} subspaces inside a {w.dim}-dimensional space")


def _incremental_avoid(w: Subspace, avoid: Sequence[Subspace]) -> Vector | None:
    field = w.field
    v = None
    for k, a in enumerate(avoid):
        if v is not None and not member(v, a):
            continue
        u = next(b for b in w.basis if not member(b, a))
        if v is None:
            v = u
            continue
        done = avoid[:k]
        for c in itertools.islice(field.nonzero_scalars(), k + 1):
            cand = add(field, v, scale(field, c, u))
            if not member(cand, a) and not any(member(cand, b) for b in done):
                v = cand
                break
        else:
            return None
    return v

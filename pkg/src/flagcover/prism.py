"""The prism graphs of a triple of flags.

Vertices are the 3d layers, placed in three vertical columns U, V, W. G is the
union of the three Bruhat matchings; G~ joins every compatible pair. The faces
of the prism are oriented UV, VW, WU (first-named flag on the left).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .bruhat import BruhatPerm, bruhat_perm
from .errors import FieldTooSmall, CoverageImpossible, NotComparable
from .flags import FlagTuple, dim_grid, intersection_dim, pair_dims
from .gensets import LayerRef, U, V, W, witness_search

FACES = ((U, V), (V, W), (W, U))

Edge = tuple[LayerRef, LayerRef]


def face_of(a: LayerRef, b: LayerRef) -> tuple[int, int, int]:
    """(face index, left level, right level) for an edge between adjacent columns."""
    for n, (x, y) in enumerate(FACES):
        if (a.flag, b.flag) == (x, y):
            return n, a.level, b.level
        if (a.flag, b.flag) == (y, x):
            return n, b.level, a.level
    raise ValueError(f"{a} and {b} are in the same column")


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[LayerRef, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def __len__(self):
        return len(self.vertices)

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    @property
    def is_triangle(self) -> bool:
        return self.length == 3

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [(vs[n], vs[(n + 1) % len(vs)]) for n in range(len(vs))]

    def levels(self, flag: int) -> list[int]:
        return sorted(r.level for r in self.vertices if r.flag == flag)

    def counts(self) -> tuple[int, int, int]:
        return tuple(len(self.levels(f)) for f in (U, V, W))

    def vertex(self, flag: int) -> LayerRef:
        """The unique vertex in a column (triangles only)."""
        (r,) = [r for r in self.vertices if r.flag == flag]
        return r

    def __str__(self):
        return "-".join(str(r) for r in self.vertices)


@dataclass(frozen=True)
class PrismGraph:
    """The graph G on the 3d layers of a triple, stored as its three face permutations.

    Faces are UV, VW and WU with the first-named flag on the left; crossing
    and height are read in that orientation.
    """

    d: int
    sigma_uv: BruhatPerm
    sigma_vw: BruhatPerm
    sigma_wu: BruhatPerm

    @classmethod
    def from_perms(cls, sigma_uv: Sequence[int], sigma_vw: Sequence[int], sigma_wu: Sequence[int]) -> "PrismGraph":
        return cls(
            len(sigma_uv),
            BruhatPerm(tuple(sigma_uv), "U", "V"),
            BruhatPerm(tuple(sigma_vw), "V", "W"),
            BruhatPerm(tuple(sigma_wu), "W", "U"),
        )

    def face_perm(self, face: int) -> BruhatPerm:
        return (self.sigma_uv, self.sigma_vw, self.sigma_wu)[face]

    @cached_property
    def _inverses(self):
        return tuple(p.inverse() for p in (self.sigma_uv, self.sigma_vw, self.sigma_wu))

    def partner(self, r: LayerRef, flag: int) -> LayerRef:
        """The G-neighbour of r in the given other column."""
        for n, (x, y) in enumerate(FACES):
            if (r.flag, flag) == (x, y):
                return LayerRef(y, self.face_perm(n)(r.level))
            if (r.flag, flag) == (y, x):
                return LayerRef(x, self._inverses[n](r.level))
        raise ValueError(f"{r} has no partner in its own column")

    @property
    def vertices(self) -> list[LayerRef]:
        return [LayerRef(f, i) for f in (U, V, W) for i in range(1, self.d + 1)]

    def g_edges(self) -> list[Edge]:
        out = []
        for n, (x, y) in enumerate(FACES):
            p = self.face_perm(n)
            out += [(LayerRef(x, i), LayerRef(y, p(i))) for i in range(1, self.d + 1)]
        return out

    def is_g_edge(self, a: LayerRef, b: LayerRef) -> bool:
        if a.flag == b.flag:
            return False
        return self.partner(a, b.flag) == b

    def gtilde_edges(self) -> list[Edge]:
        out = []
        for x, y in FACES:
            for i in range(1, self.d + 1):
                for j in range(1, self.d + 1):
                    a, b = LayerRef(x, i), LayerRef(y, j)
                    if gtilde_edge(self, a, b):
                        out.append((a, b))
        return out

    @cached_property
    def cycles(self) -> tuple[Cycle, ...]:
        """Cycles of G, each started at its lowest U vertex and walked U -> V -> W."""
        seen: set[LayerRef] = set()
        out = []
        for i in range(1, self.d + 1):
            start = LayerRef(U, i)
            if start in seen:
                continue
            walk = []
            r = start
            while True:
                walk.append(r)
                seen.add(r)
                r = self.partner(r, (r.flag + 1) % 3)
                if r == start:
                    break
            out.append(Cycle(tuple(walk)))
        return tuple(out)


def build_G(t: FlagTuple) -> PrismGraph:
    if t.m != 3:
        raise ValueError("the prism graph needs exactly three flags")
    u, v, w = t.flags
    return PrismGraph(
        t.d,
        bruhat_perm(u, v, "U", "V"),
        bruhat_perm(v, w, "V", "W"),
        bruhat_perm(w, u, "W", "U"),
    )


def gtilde_edge(g: PrismGraph, a: LayerRef, b: LayerRef) -> bool:
    """Edge (X_i, Y_j) of G~ iff i >= i' and j >= j', with X_i ~ Y_j' and X_i' ~ Y_j in G."""
    face, i, j = face_of(a, b)
    p = g.face_perm(face)
    j_partner = p(i)
    i_partner = g._inverses[face](j)
    return i >= i_partner and j >= j_partner


# -- compatibility -----------------------------------------------------------

def compatible_pair(t: FlagTuple, a: LayerRef, b: LayerRef) -> bool:
    if a.flag == b.flag:
        raise ValueError("a compatible pair needs two different flags")
    D = pair_dims(t[a.flag], t[b.flag])
    i, j = a.level, b.level
    return D[i, j] > D[i - 1, j] and D[i, j] > D[i, j - 1]


def _small_field(t: FlagTuple, n_avoid: int) -> bool:
    # A space over F_q is never the union of at most q proper subspaces.
    return t.field.is_finite and t.field.p < n_avoid


def compatible_triple(t: FlagTuple, a: LayerRef, b: LayerRef, c: LayerRef, exhaustive: bool = False) -> bool:
    """Is there one vector new for all three layers?

    The dimension test is conclusive when the field has at least 3 elements;
    otherwise (or with ``exhaustive``) a witness is searched for.
    """
    refs = sorted((a, b, c))
    if len({r.flag for r in refs}) != 3:
        raise ValueError("a compatible triple needs three different flags")
    sub = FlagTuple(tuple(t[r.flag] for r in refs))
    grid = dim_grid(sub)
    i, j, k = (r.level for r in refs)
    top = grid(i, j, k)
    if not (top > grid(i - 1, j, k) and top > grid(i, j - 1, k) and top > grid(i, j, k - 1)):
        return False
    if not exhaustive and not _small_field(t, 3):
        return True
    return _has_witness(t, refs)


def compatible_set(t: FlagTuple, layers: Sequence[LayerRef], exhaustive: bool = False) -> bool:
    """Compatibility of any set of layers from distinct flags."""
    refs = sorted(layers)
    if len({r.flag for r in refs}) != len(refs):
        raise ValueError("a compatible set has at most one layer per flag")
    if len(refs) == 1:
        return True
    if len(refs) == 2 and not exhaustive:
        return compatible_pair(t, *refs)
    if len(refs) == 3:
        return compatible_triple(t, *refs, exhaustive=exhaustive)
    levels = {r.flag: r.level for r in refs}
    top = intersection_dim(t, levels)
    for r in refs:
        lowered = dict(levels)
        lowered[r.flag] = r.level - 1
        if intersection_dim(t, lowered) >= top:
            return False
    if not exhaustive and not _small_field(t, len(refs)):
        return True
    return _has_witness(t, refs)


def _has_witness(t: FlagTuple, refs: Sequence[LayerRef]) -> bool:
    try:
        witness_search(t, refs)
    except (FieldTooSmall, CoverageImpossible):
        return False
    return True


# -- crossing and height -----------------------------------------------------

def edges_cross(e1: Edge, e2: Edge) -> bool:
    f1, i, j = face_of(*e1)
    f2, i2, j2 = face_of(*e2)
    if f1 != f2:
        return False
    return (i > i2 and j < j2) or (i < i2 and j > j2)


def edge_crosses_cycle(e: Edge, c: Cycle) -> bool:
    return any(edges_cross(e, f) for f in c.edges())


def cycles_cross(c1: Cycle, c2: Cycle) -> bool:
    if c1 == c2:
        return False
    return any(edge_crosses_cycle(e, c2) for e in c1.edges())


def _below(c1: Cycle, c2: Cycle) -> bool:
    return all(max(c1.levels(f)) < min(c2.levels(f)) for f in (U, V, W))


def height_order(cycles: Iterable[Cycle]) -> list[Cycle]:
    """Sort pairwise non-crossing cycles from bottom to top."""
    cs = list(cycles)
    for n, c1 in enumerate(cs):
        for c2 in cs[n + 1:]:
            if cycles_cross(c1, c2):
                raise NotComparable(f"cycles {c1} and {c2} cross")
    cs.sort(key=lambda c: min(c.levels(U)))
    for lo, hi in zip(cs, cs[1:]):
        if not _below(lo, hi):
            raise NotComparable(f"{lo} does not lie below {hi} in every column")
    return cs

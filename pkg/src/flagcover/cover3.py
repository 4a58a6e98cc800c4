"""Generating sets of size at most floor(5d/3) for three flags.

The cycles of G are sorted into three groups by how cheaply they can be
covered with compatible sets:

* A: even cycles, compatible triangles, and pairs of crossing odd cycles
  (at most half a set per vertex);
* B: leftover odd cycles of length >= 9 ((|S|+1)/2 sets);
* C: leftover triangles, which are incompatible (2 sets each).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import InternalInconsistency
from .flags import FlagTuple
from .gensets import (
    CompatibleSet,
    GeneratingSet,
    LayerRef,
    U,
    V,
    W,
    find_witness,
    verify_generating_set,
)
from .prism import (
    FACES,
    Cycle,
    PrismGraph,
    build_G,
    compatible_triple,
    cycles_cross,
    edge_crosses_cycle,
    gtilde_edge,
    height_order,
)


@dataclass(frozen=True)
class Unit:
    """One member of group A: ``kind`` is 'even', 'triangle' or 'crossing'."""

    kind: str
    cycles: tuple[Cycle, ...]

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def vertices(self) -> list[LayerRef]:
        return [r for c in self.cycles for r in c.vertices]


@dataclass
class CycleClassification:
    A: list[Unit] = dc_field(default_factory=list)
    B: list[Cycle] = dc_field(default_factory=list)
    C: list[Cycle] = dc_field(default_factory=list)

    @property
    def size_A(self) -> int:
        return sum(u.size for u in self.A)

    @property
    def size_B(self) -> int:
        return sum(len(c) for c in self.B)

    @property
    def size_C(self) -> int:
        return sum(len(c) for c in self.C)

    def sizes(self) -> tuple[int, int, int]:
        return self.size_A, self.size_B, self.size_C

    def set_bound(self) -> Fraction:
        """The covering cost bound |A|/2 + 5|B|/9 + 2|C|/3."""
        a, b, c = self.sizes()
        return Fraction(a, 2) + Fraction(5 * b, 9) + Fraction(2 * c, 3)


def classify(g: PrismGraph, t: FlagTuple) -> CycleClassification:
    out = CycleClassification()
    odd = []
    for c in g.cycles:
        if c.is_even:
            out.A.append(Unit("even", (c,)))
        elif c.is_triangle and compatible_triple(t, *c.vertices):
            out.A.append(Unit("triangle", (c,)))
        else:
            odd.append(c)

    # greedy pairing of crossing odd cycles, rescanning after each removal
    found = True
    while found:
        found = False
        for n, c1 in enumerate(odd):
            for c2 in odd[n + 1:]:
                if cycles_cross(c1, c2):
                    out.A.append(Unit("crossing", (c1, c2)))
                    odd.remove(c1)
                    odd.remove(c2)
                    found = True
                    break
            if found:
                break

    out.B = [c for c in odd if not c.is_triangle]
    out.C = height_order(c for c in odd if c.is_triangle)
    if any(len(c) < 9 for c in out.B):
        raise InternalInconsistency("a leftover odd cycle shorter than 9 is not a triangle")
    return out


def _witnessed(t: FlagTuple, layers) -> CompatibleSet:
    layers = tuple(sorted(layers))
    w = find_witness(t, layers)
    if w is None:
        raise InternalInconsistency(f"no witness for claimed compatible set {[str(r) for r in layers]}")
    return CompatibleSet(layers, w)


def _path_pairs(path: list[LayerRef]) -> list[tuple[LayerRef, LayerRef]]:
    return [(path[n], path[n + 1]) for n in range(0, len(path) - 1, 2)]


def _connector(g: PrismGraph, c1: Cycle, c2: Cycle) -> tuple[LayerRef, LayerRef]:
    """First G~ edge joining the two cycles, scanning faces UV, VW, WU."""
    in1, in2 = set(c1.vertices), set(c2.vertices)
    for x, y in FACES:
        for i in range(1, g.d + 1):
            for j in range(1, g.d + 1):
                a, b = LayerRef(x, i), LayerRef(y, j)
                if ((a in in1 and b in in2) or (a in in2 and b in in1)) and gtilde_edge(g, a, b):
                    return a, b
    raise InternalInconsistency(f"crossing cycles {c1} and {c2} have no G~ edge between them")


def _rest_of_cycle(c: Cycle, r: LayerRef) -> list[LayerRef]:
    n = c.vertices.index(r)
    return [c.vertices[(n + s) % len(c)] for s in range(1, len(c))]


def cover_unit(unit: Unit | Cycle, g: PrismGraph, t: FlagTuple, group: str = "A") -> list[CompatibleSet]:
    """Cover one A unit, B cycle (``group='B'``) or C triangle (``group='C'``)."""
    if group == "C":
        tri = unit
        u = tri.vertex(U)
        return [_witnessed(t, (u, tri.vertex(V))), _witnessed(t, (u, tri.vertex(W)))]
    if group == "B":
        vs = list(unit.vertices)
        return [_witnessed(t, p) for p in _path_pairs(vs[:-1])] + [_witnessed(t, (vs[-1],))]

    if unit.kind == "even":
        return [_witnessed(t, p) for p in _path_pairs(list(unit.cycles[0].vertices))]
    if unit.kind == "triangle":
        return [_witnessed(t, unit.cycles[0].vertices)]
    c1, c2 = unit.cycles
    a, b = _connector(g, c1, c2)
    if a in c2.vertices:
        a, b = b, a
    sets = [_witnessed(t, (a, b))]
    sets += [_witnessed(t, p) for p in _path_pairs(_rest_of_cycle(c1, a))]
    sets += [_witnessed(t, p) for p in _path_pairs(_rest_of_cycle(c2, b))]
    return sets


def synth3(t: FlagTuple, debug: bool = False) -> GeneratingSet:
    """A generating set for three flags with at most floor(5d/3) vectors."""
    g = build_G(t)
    cls = classify(g, t)
    sets: list[CompatibleSet] = []
    for unit in cls.A:
        sets += cover_unit(unit, g, t)
    for c in cls.B:
        sets += cover_unit(c, g, t, group="B")
    for c in cls.C:
        sets += cover_unit(c, g, t, group="C")
    gs = GeneratingSet(sets)

    d = t.d
    if not len(gs) <= cls.set_bound() <= Fraction(5 * d, 3):
        raise InternalInconsistency(
            f"{len(gs)} sets, accounting bound {cls.set_bound()}, limit 5d/3 = {Fraction(5 * d, 3)}"
        )
    if not verify_generating_set(t, gs).ok:
        raise InternalInconsistency("synthesised set fails verification")
    if debug:
        from .certify import certify

        certify(t, g, cls)
    return gs


def is_equality_candidate(g: PrismGraph, t: FlagTuple) -> tuple[bool, dict]:
    """Test the combinatorial necessary conditions for mu = 5d/3."""
    d = g.d
    diag: dict = {"d_multiple_of_3": d % 3 == 0}
    triangles = [c for c in g.cycles if c.is_triangle]
    others = [c for c in g.cycles if not c.is_triangle]
    diag["triangles"] = len(triangles)
    diag["odd_non_triangles"] = sum(1 for c in others if not c.is_even)
    diag["compatible_triangles"] = sum(1 for c in triangles if compatible_triple(t, *c.vertices))
    shape_ok = (
        diag["d_multiple_of_3"]
        and len(triangles) == d // 3
        and diag["odd_non_triangles"] == 0
        and diag["compatible_triangles"] == 0
    )
    diag["shape"] = shape_ok

    crossing = [
        (str(c1), str(c2))
        for n, c1 in enumerate(triangles)
        for c2 in triangles[n + 1:]
        if cycles_cross(c1, c2)
    ]
    diag["crossing_triangles"] = crossing

    bad_corners = []
    for c in others:
        es = c.edges()
        for n, e in enumerate(es):
            f = es[(n + 1) % len(es)]
            if not any(edge_crosses_cycle(e, tri) and edge_crosses_cycle(f, tri) for tri in triangles):
                bad_corners.append(str(e[1]))
    diag["uncrossed_corners"] = bad_corners

    ok = bool(shape_ok and not crossing and not bad_corners)
    return ok, diag

"""Lattice-path cost certificates for the inequality |A|/2 + |B|/3 >= d.

A lattice walk from (0,0,0) to (d,d,d) hops once on every layer. The cost of a
hop is the increase of dim(U_i ∩ V_j ∩ W_k) it causes, so costs are 0 or 1 and
sum to d. The canonical walk makes C triangles free and B cycles cost at most
a third of their length, which is what the certificate checks. Nothing here
reuses state from the synthesis code; the grid and the walk are rebuilt.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import CertificateError
from .flags import DimGrid, FlagTuple, dim_grid
from .gensets import LayerRef, U, V, W, find_witness
from .prism import PrismGraph, build_G, compatible_triple


@dataclass(frozen=True)
class Hop:
    vertex: LayerRef
    position: tuple[int, int, int]


@dataclass
class LatticePath:
    d: int
    hops: list[Hop]

    def order(self) -> dict[LayerRef, int]:
        return {h.vertex: n for n, h in enumerate(self.hops)}

    def check(self):
        pos = [0, 0, 0]
        seen = set()
        for h in self.hops:
            pos[h.vertex.flag] += 1
            if tuple(pos) != h.position or pos[h.vertex.flag] != h.vertex.level:
                raise CertificateError(f"hop on {h.vertex} at {h.position} is not a unit step")
            seen.add(h.vertex)
        if tuple(pos) != (self.d,) * 3 or len(seen) != 3 * self.d:
            raise CertificateError("walk does not end at (d,d,d) hopping once per vertex")


def path_from_sequence(d: int, flags_in_order) -> LatticePath:
    """Walk that hops on the next level of each listed flag in turn."""
    pos = [0, 0, 0]
    hops = []
    for f in flags_in_order:
        pos[f] += 1
        hops.append(Hop(LayerRef(f, pos[f]), tuple(pos)))
    path = LatticePath(d, hops)
    path.check()
    return path


def random_lattice_path(d: int, rng: random.Random) -> LatticePath:
    steps = [U] * d + [V] * d + [W] * d
    rng.shuffle(steps)
    return path_from_sequence(d, steps)


def build_lattice_path(classification, d: int) -> LatticePath:
    """Canonical walk: below each C triangle, finish U, then V, then W, then the triangle."""
    triangles = [tuple(c.vertex(f).level for f in (U, V, W)) for c in classification.C]
    for lo, hi in zip(triangles, triangles[1:]):
        if not all(a < b for a, b in zip(lo, hi)):
            raise ValueError("C triangles are not ordered by height")
    seq = []
    pos = [0, 0, 0]
    for target in triangles + [(d + 1,) * 3]:
        for f in (U, V, W):
            seq += [f] * (target[f] - 1 - pos[f])
            pos[f] = target[f] - 1
        if target[0] <= d:
            seq += [U, V, W]
            pos = list(target)
    return path_from_sequence(d, seq)


def hop_costs(path: LatticePath, grid: DimGrid) -> dict[LayerRef, int]:
    costs = {}
    for h in path.hops:
        prev = list(h.position)
        prev[h.vertex.flag] -= 1
        costs[h.vertex] = grid[h.position] - grid[tuple(prev)]
    return costs


@dataclass
class CostReport:
    d: int
    costs: dict[LayerRef, int]
    unit_costs: list[dict] = dc_field(default_factory=list)
    cost_A: int = 0
    cost_B: int = 0
    cost_C: int = 0
    sizes: tuple[int, int, int] = (0, 0, 0)
    failures: list[str] = dc_field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.costs.values())

    @property
    def lhs(self) -> Fraction:
        a, b, _ = self.sizes
        return Fraction(a, 2) + Fraction(b, 3)

    @property
    def passed(self) -> bool:
        return not self.failures

    def inequality_line(self) -> str:
        status = "PASS" if self.lhs >= self.d else "FAIL"
        return f"0.5*|A| + 0.333...*|B| >= d : {status} ({float(self.lhs):.4g} >= {self.d})"

    def to_json(self) -> dict:
        a, b, c = self.sizes
        return {
            "d": self.d,
            "sizes": {"A": a, "B": b, "C": c},
            "costs": {"A": self.cost_A, "B": self.cost_B, "C": self.cost_C, "total": self.total},
            "units": self.unit_costs,
            "inequality": {"lhs": str(self.lhs), "rhs": self.d, "holds": self.lhs >= self.d},
            "failures": self.failures,
            "pass": self.passed,
        }


def cost_report(path: LatticePath, grid: DimGrid, classification, strict: bool = True) -> CostReport:
    """Evaluate hop costs per unit and check the per-unit limits and the counting inequality."""
    costs = hop_costs(path, grid)
    rep = CostReport(d=grid.d, costs=costs, sizes=classification.sizes())

    def record(group, kind, vertices, limit):
        cost = sum(costs[r] for r in vertices)
        ok = cost <= limit
        rep.unit_costs.append({
            "group": group,
            "kind": kind,
            "length": len(vertices),
            "cost": cost,
            "limit": str(limit),
            "ok": ok,
        })
        if not ok:
            rep.failures.append(f"{group} {kind} of length {len(vertices)} costs {cost} > {limit}")
        return cost

    for unit in classification.A:
        rep.cost_A += record("A", unit.kind, unit.vertices, Fraction(unit.size, 2))
    for c in classification.B:
        rep.cost_B += record("B", "odd", c.vertices, Fraction(len(c), 3))
    for c in classification.C:
        rep.cost_C += record("C", "triangle", c.vertices, 0)

    if rep.total != grid.d:
        rep.failures.append(f"total cost {rep.total} != d = {grid.d}")
    if rep.cost_A + rep.cost_B + rep.cost_C != rep.total:
        rep.failures.append("group costs do not add up to the total")
    if rep.lhs < grid.d:
        rep.failures.append(f"|A|/2 + |B|/3 = {rep.lhs} < d = {grid.d}")
    if strict and rep.failures:
        raise CertificateError("; ".join(rep.failures))
    return rep


def certify(t: FlagTuple, g: PrismGraph | None = None, classification=None, strict: bool = True) -> CostReport:
    """Rebuild grid and canonical walk for a triple and return its cost report."""
    from .cover3 import classify

    g = g or build_G(t)
    classification = classification or classify(g, t)
    path = build_lattice_path(classification, t.d)
    return cost_report(path, dim_grid(t), classification, strict=strict)


def cost_one_independent(g: PrismGraph, costs: dict[LayerRef, int]) -> bool:
    """Cost-1 vertices never share a G edge."""
    return not any(costs[a] and costs[b] for a, b in g.g_edges())


# -- grid identities behind the cost limits -------------------------------------

def check_lemma_sleight(t: FlagTuple, position: tuple[int, int, int], edge: tuple[LayerRef, LayerRef]) -> bool:
    """For a G edge (x, y) with y above the position's y-coordinate, lowering x keeps the intersection.

    ``position`` is (i, j, k) with x's coordinate equal to x.level. Raises
    ValueError when the configuration does not meet these conditions.
    """
    x, y = edge
    g = build_G(t)
    if not g.is_g_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge of G")
    if position[x.flag] != x.level or not position[y.flag] < y.level:
        raise ValueError("position needs x at its level and y strictly below its level")
    grid = dim_grid(t)
    lowered = list(position)
    lowered[x.flag] -= 1
    return grid[tuple(position)] == grid[tuple(lowered)]


def check_lemma_magic(t: FlagTuple, triangle) -> bool:
    """Check the triangle identity for a G triangle (U_i, V_j, W_k).

    Every G triangle satisfies U_(i-1) ∩ V_j ∩ W_k = U_(i-1) ∩ V_(j-1) ∩ W_(k-1)
    and its two rotations. An incompatible one additionally has
    U_i ∩ V_j ∩ W_k = U_(i-1) ∩ V_(j-1) ∩ W_(k-1); a compatible one has a
    witness outside the all-lowered intersection.
    """
    refs = sorted(getattr(triangle, "vertices", triangle))
    i, j, k = (r.level for r in refs)
    grid = dim_grid(t)
    bottom = grid(i - 1, j - 1, k - 1)
    if not (grid(i - 1, j, k) == grid(i, j - 1, k) == grid(i, j, k - 1) == bottom):
        return False
    if compatible_triple(t, *refs):
        w = find_witness(t, refs)
        return w is not None and grid(i, j, k) == bottom + 1 and all(t[r.flag].is_new(w, r.level) for r in refs)
    return grid(i, j, k) == bottom

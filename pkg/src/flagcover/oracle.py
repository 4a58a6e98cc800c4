"""Exact mu for small tuples by minimum cover with compatible sets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import InstanceTooLarge, ReductionError
from .exactalg import Field
from .flags import Flag, FlagTuple
from .gensets import CompatibleSet, GeneratingSet, LayerRef, layers_of, witness_search
from .prism import compatible_set

MAX_LAYERS = 24


@dataclass
class CompatibleCatalog:
    universe: list[LayerRef]
    sets: list[tuple[LayerRef, ...]] = dc_field(default_factory=list)

    def mask(self, layers) -> int:
        index = {r: n for n, r in enumerate(self.universe)}
        out = 0
        for r in layers:
            out |= 1 << index[r]
        return out

    @property
    def masks(self) -> list[int]:
        return [self.mask(s) for s in self.sets]

    def maximal(self) -> list[tuple[LayerRef, ...]]:
        """Sets not strictly contained in another catalogued set."""
        masks = self.masks
        return [
            s for s, a in zip(self.sets, masks)
            if not any(a != b and a & b == a for b in masks)
        ]

    def __contains__(self, layers) -> bool:
        return tuple(sorted(layers)) in set(self.sets)


def enumerate_compatible(t: FlagTuple, exhaustive: bool = False) -> CompatibleCatalog:
    """Every compatible set of layers (at most one layer per flag).

    Compatibility is downward closed, so a k-set is only tested when all of
    its (k-1)-subsets are compatible.
    """
    cat = CompatibleCatalog(layers_of(t))
    current = [(r,) for r in cat.universe]
    cat.sets.extend(current)
    for size in range(2, t.m + 1):
        known = set(current)
        nxt = []
        for flags in itertools.combinations(range(t.m), size):
            for levels in itertools.product(range(1, t.d + 1), repeat=size):
                layers = tuple(LayerRef(f, lv) for f, lv in zip(flags, levels))
                if any(sub not in known for sub in itertools.combinations(layers, size - 1)):
                    continue
                if compatible_set(t, layers, exhaustive=exhaustive):
                    nxt.append(layers)
        if not nxt:
            break
        cat.sets.extend(nxt)
        current = nxt
    return cat


def min_cover(n: int, masks: list[int]) -> list[int]:
    """Indices of a minimum family of masks covering range(n), by branch and bound.

    Branches on the uncovered element with the fewest covering sets; the bound
    is ceil(uncovered / largest set size). Among minimum covers the
    lexicographically least index list is returned.
    """
    full = (1 << n) - 1
    if n == 0:
        return []
    covering = [[k for k, m in enumerate(masks) if m >> e & 1] for e in range(n)]
    if any(not c for c in covering):
        raise ValueError("some element is in no set")
    biggest = max(bin(m).count("1") for m in masks)
    best: list[list[int]] = [list(range(len(masks)))]
    seen: dict[int, int] = {}

    # greedy start gives a good incumbent
    covered, greedy = 0, []
    while covered != full:
        k = max(range(len(masks)), key=lambda k: (bin(masks[k] & ~covered).count("1"), -k))
        greedy.append(k)
        covered |= masks[k]
    best[0] = greedy

    def search(covered: int, chosen: list[int]):
        if covered == full:
            if len(chosen) < len(best[0]):
                best[0] = list(chosen)
            return
        left = n - bin(covered).count("1")
        if len(chosen) + -(-left // biggest) >= len(best[0]):
            return
        if seen.get(covered, 1 << 30) <= len(chosen):
            return
        seen[covered] = len(chosen)
        target = min(
            (e for e in range(n) if not covered >> e & 1),
            key=lambda e: (len(covering[e]), e),
        )
        options = sorted(covering[target], key=lambda k: (-bin(masks[k] & ~covered).count("1"), k))
        for k in options:
            chosen.append(k)
            search(covered | masks[k], chosen)
            chosen.pop()

    search(0, [])
    return _lex_least(n, masks, len(best[0]))


def _lex_least(n: int, masks: list[int], k: int) -> list[int]:
    """Lexicographically least sorted index tuple of k masks covering range(n).

    Ties among optimal covers are broken this way so the answer does not
    depend on the branching order above.
    """
    full = (1 << n) - 1
    sizes = [bin(m).count("1") for m in masks]
    # largest mask size among indices >= j
    suffix = [0] * (len(masks) + 1)
    for j in range(len(masks) - 1, -1, -1):
        suffix[j] = max(sizes[j], suffix[j + 1])
    # union of masks with index >= j
    reach = [0] * (len(masks) + 1)
    for j in range(len(masks) - 1, -1, -1):
        reach[j] = reach[j + 1] | masks[j]
    dead: set[tuple[int, int, int]] = set()

    def search(start: int, covered: int, left: int, chosen: list[int]) -> bool:
        if covered == full:
            return True
        if left == 0 or (start, covered, left) in dead:
            return False
        missing = n - bin(covered).count("1")
        for j in range(start, len(masks)):
            if covered | reach[j] != full or missing > left * suffix[j]:
                break
            if masks[j] & ~covered:
                chosen.append(j)
                if search(j + 1, covered | masks[j], left - 1, chosen):
                    return True
                chosen.pop()
        dead.add((start, covered, left))
        return False

    chosen: list[int] = []
    if not search(0, 0, k, chosen):
        raise RuntimeError("optimal cover size not reproducible")  # unreachable
    return chosen


@dataclass
class OracleResult:
    mu: int
    cover: GeneratingSet
    catalog_size: int


def mu_exact(t: FlagTuple, exhaustive: bool = False, max_layers: int = MAX_LAYERS) -> OracleResult:
    """Exact minimum size of a simultaneous generating set."""
    if t.m * t.d > max_layers:
        raise InstanceTooLarge(f"{t.m * t.d} layers exceed the limit of {max_layers}")
    cat = enumerate_compatible(t, exhaustive=exhaustive)
    candidates = cat.maximal()
    masks = [cat.mask(s) for s in candidates]
    chosen = min_cover(len(cat.universe), masks)
    sets = [CompatibleSet(candidates[k], witness_search(t, candidates[k])) for k in chosen]
    return OracleResult(len(chosen), GeneratingSet(sets), len(cat.sets))


def reduce_tuple(t: FlagTuple, field: Field) -> FlagTuple:
    """Reduce a tuple's entries into a prime field."""
    if not field.is_finite:
        raise ReductionError("reduction target must be a prime field")
    flags = []
    for f in t:
        try:
            cols = tuple(field.vector(Fraction(x) if t.field.p is None else int(x) for x in c) for c in f.columns)
        except ZeroDivisionError as exc:
            raise ReductionError(str(exc)) from exc
        try:
            flags.append(Flag(field, cols))
        except ValueError as exc:
            raise ReductionError(f"flag basis becomes singular mod {field.p}") from exc
    return FlagTuple(tuple(flags))


def mu_exact_over_field(t: FlagTuple, field: Field | None = None) -> OracleResult:
    """Exact mu over a prime field, deciding every compatibility by witness enumeration."""
    if field is not None and field != t.field:
        t = reduce_tuple(t, field)
    if not t.field.is_finite:
        raise ReductionError("mu_exact_over_field needs a prime field")
    return mu_exact(t, exhaustive=True)

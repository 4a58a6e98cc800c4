"""Layer references, compatible sets, generating sets and their verification."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Sequence

from .errors import CoverageImpossible, FieldTooSmall
from .exactalg import Vector, avoid_subspaces
from .flags import FLAG_NAMES, FlagTuple, intersection


class LayerRef(NamedTuple):
    """Layer ``level`` (1-based) of flag number ``flag`` (0-based: U=0, V=1, W=2)."""

    flag: int
    level: int

    def __str__(self):
        return f"{FLAG_NAMES[self.flag]}{self.level}"


U, V, W = 0, 1, 2


def layers_of(t: FlagTuple) -> list[LayerRef]:
    return [LayerRef(f, i) for f in range(t.m) for i in range(1, t.d + 1)]


def witness_search(t: FlagTuple, layers: Sequence[LayerRef]) -> Vector:
    """A vector new for every given layer (one layer per flag).

    Raises CoverageImpossible or FieldTooSmall when no such vector exists.
    """
    flags = [r.flag for r in layers]
    if len(set(flags)) != len(flags):
        raise ValueError(f"layers {[str(r) for r in layers]} repeat a flag")
    top = intersection(t, {r.flag: r.level for r in layers})
    lower = [t[r.flag].layer(r.level - 1) for r in layers]
    return avoid_subspaces(top, lower)


def find_witness(t: FlagTuple, layers: Sequence[LayerRef]) -> Vector | None:
    try:
        return witness_search(t, layers)
    except (CoverageImpossible, FieldTooSmall):
        return None


@dataclass(frozen=True)
class CompatibleSet:
    layers: tuple[LayerRef, ...]
    witness: Vector

    def check(self, t: FlagTuple) -> bool:
        return all(t[r.flag].is_new(self.witness, r.level) for r in self.layers)


@dataclass
class GeneratingSet:
    sets: list[CompatibleSet] = dc_field(default_factory=list)

    def __len__(self):
        return len(self.sets)

    @property
    def size(self) -> int:
        return len(self.sets)

    @property
    def vectors(self) -> list[Vector]:
        return [s.witness for s in self.sets]

    @property
    def covered(self) -> dict[LayerRef, CompatibleSet]:
        out: dict[LayerRef, CompatibleSet] = {}
        for s in self.sets:
            for r in s.layers:
                out.setdefault(r, s)
        return out

    def relabel(self, mapping: dict[int, int]) -> "GeneratingSet":
        """Rename flag indices, e.g. when a pair is embedded into a larger tuple."""
        return GeneratingSet([
            CompatibleSet(tuple(LayerRef(mapping[r.flag], r.level) for r in s.layers), s.witness)
            for s in self.sets
        ])


@dataclass
class VerifyReport:
    slots: int
    missing: list[LayerRef]
    bad_sets: list[int]

    @property
    def ok(self) -> bool:
        return not self.missing and not self.bad_sets

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status}: {self.slots - len(self.missing)}/{self.slots} layers hit, {len(self.bad_sets)} bad witnesses"


def verify_generating_set(t: FlagTuple, s: GeneratingSet | Sequence[Sequence]) -> VerifyReport:
    """Check that every layer of every flag has a new vector in ``s``.

    For a GeneratingSet each witness is also re-checked against the layers it
    claims to be new for.
    """
    if isinstance(s, GeneratingSet):
        vectors = s.vectors
        bad = [n for n, cs in enumerate(s.sets) if not cs.check(t)]
    else:
        vectors = [t.field.vector(v) for v in s]
        bad = []
    hit = set()
    for v in vectors:
        for f, flag in enumerate(t):
            lvl = flag.level(v)
            if lvl:
                hit.add(LayerRef(f, lvl))
    missing = [r for r in layers_of(t) if r not in hit]
    return VerifyReport(slots=t.m * t.d, missing=missing, bad_sets=bad)

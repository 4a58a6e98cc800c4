"""Any number of flags: the closed form for mu(m, d) and matching constructions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bruhat import two_flag_generators
from .cover3 import synth3
from .errors import InternalInconsistency, NotTransverse
from .flags import FlagTuple, is_transverse, pair_dims
from .gensets import CompatibleSet, GeneratingSet, LayerRef, U, V, W, find_witness, verify_generating_set


@dataclass(frozen=True)
class MuValue:
    m: int
    d: int
    value: int

    def __int__(self):
        return self.value


def mu_formula(m: int, d: int) -> MuValue:
    """Worst-case minimum size of a generating set for m flags in K^d."""
    if m < 1 or d < 1:
        raise ValueError("m and d must be positive")
    if m == 1 or d == 1:
        value = Fraction(d)
    elif m % 2 == 0:
        value = Fraction(m * d, 2)
    else:
        value = Fraction(m * d, 2) + (2 * d) // 3 - Fraction(d, 2)
    if value.denominator != 1:
        raise InternalInconsistency(f"mu({m}, {d}) = {value} is not an integer")
    return MuValue(m, d, int(value))


def _pair_set(t: FlagTuple, a: int, b: int) -> GeneratingSet:
    return two_flag_generators(t[a], t[b]).relabel({0: a, 1: b})


def synth_m(t: FlagTuple, debug: bool = False) -> GeneratingSet:
    """Pairs of flags for even m; one triple plus pairs for odd m >= 3."""
    m = t.m
    if t.d == 1:
        # any nonzero vector is new for every line
        layers = tuple(LayerRef(a, 1) for a in range(m))
        out = GeneratingSet([CompatibleSet(layers, t.field.vector([1]))])
    elif m == 1:
        gs = two_flag_generators(t[0], t[0])
        sets = [CompatibleSet((LayerRef(0, cs.layers[0].level),), cs.witness) for cs in gs.sets]
        out = GeneratingSet(sets)
    else:
        out = GeneratingSet()
        start = 0
        if m % 2 == 1:
            out.sets += synth3(FlagTuple(t.flags[:3]), debug=debug).sets
            start = 3
        for a in range(start, m, 2):
            out.sets += _pair_set(t, a, a + 1).sets
    bound = mu_formula(m, t.d).value
    if len(out) > bound:
        raise InternalInconsistency(f"{len(out)} vectors exceed mu({m}, {t.d}) = {bound}")
    if not verify_generating_set(t, out).ok:
        raise InternalInconsistency("m-flag generating set fails verification")
    return out


def _common_new(t: FlagTuple, layers) -> CompatibleSet:
    layers = tuple(sorted(layers))
    w = find_witness(t, layers)
    if w is None:
        raise NotTransverse(f"no vector is new for {[str(r) for r in layers]}")
    return CompatibleSet(layers, w)


def transverse_synth(t: FlagTuple, require_transverse: bool = True) -> GeneratingSet:
    """ceil(md/2) vectors for a transverse pair or triple, pairing layers i and d+1-i."""
    if t.m not in (2, 3):
        raise ValueError("transverse_synth handles two or three flags")
    if require_transverse and not is_transverse(t):
        raise NotTransverse("flags are not transverse")
    d = t.d
    if t.m == 2:
        faces = [(U, V)]
        rounds = range(1, d + 1)
    else:
        faces = [(U, V), (V, W), (W, U)]
        rounds = range(1, d // 2 + 1)
    sets = []
    for i in rounds:
        for x, y in faces:
            D = pair_dims(t[x], t[y])
            if D[i, d + 1 - i] != 1:
                raise NotTransverse(f"dim({t.name(x)}{i} ∩ {t.name(y)}{d + 1 - i}) = {D[i, d + 1 - i]} != 1")
            sets.append(_common_new(t, (LayerRef(x, i), LayerRef(y, d + 1 - i))))
    if t.m == 3 and d % 2 == 1:
        mid = (d + 1) // 2
        sets.append(_common_new(t, (LayerRef(U, mid), LayerRef(V, mid))))
        sets.append(_common_new(t, (LayerRef(W, mid),)))
    out = GeneratingSet(sets)
    if not verify_generating_set(t, out).ok:
        raise InternalInconsistency("transverse construction fails verification")
    return out

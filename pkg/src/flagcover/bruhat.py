"""Two flags: the relative position permutation and a common basis."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InternalInconsistency
from .exactalg import rank
from .flags import Flag, FlagTuple, pair_dims
from .gensets import CompatibleSet, GeneratingSet, LayerRef, witness_search


@dataclass(frozen=True)
class BruhatPerm:
    """sigma[i-1] is the level of the second flag paired with level i of the first."""

    sigma: tuple[int, ...]
    source: str = "U"
    target: str = "V"

    def __post_init__(self):
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)):
            raise InternalInconsistency(f"{self.sigma} is not a permutation")

    def __call__(self, i: int) -> int:
        return self.sigma[i - 1]

    def __len__(self):
        return len(self.sigma)

    def inverse(self) -> "BruhatPerm":
        inv = [0] * len(self.sigma)
        for i, j in enumerate(self.sigma, start=1):
            inv[j - 1] = i
        return BruhatPerm(tuple(inv), self.target, self.source)

    def as_list(self) -> list[int]:
        return list(self.sigma)


def bruhat_perm(u: Flag, v: Flag, source: str = "U", target: str = "V") -> BruhatPerm:
    """sigma(i) = least j with dim(U_i ∩ V_j) > dim(U_{i-1} ∩ V_j)."""
    if u.d != v.d or u.field != v.field:
        raise DimensionMismatch("flags must share dimension and field")
    D = pair_dims(u, v)
    sigma = []
    for i in range(1, u.d + 1):
        jumps = [j for j in range(1, u.d + 1) if D[i, j] > D[i - 1, j]]
        sigma.append(jumps[0])
    return BruhatPerm(tuple(sigma), source, target)


def two_flag_generators(u: Flag, v: Flag) -> GeneratingSet:
    """d vectors s_i, each new for U_i and for V_sigma(i)."""
    sigma = bruhat_perm(u, v)
    t = FlagTuple((u, v))
    sets = []
    for i in range(1, u.d + 1):
        layers = (LayerRef(0, i), LayerRef(1, sigma(i)))
        try:
            s = witness_search(t, layers)
        except ValueError as exc:
            raise InternalInconsistency(f"no common new vector for U{i}, V{sigma(i)}") from exc
        sets.append(CompatibleSet(layers, s))
    if rank([cs.witness for cs in sets], u.field) != u.d:
        raise InternalInconsistency("two-flag generators are not a basis")
    return GeneratingSet(sets)

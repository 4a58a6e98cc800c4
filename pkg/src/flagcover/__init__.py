"""Small simultaneous generating sets for tuples of complete flags, in exact arithmetic."""

from .bruhat import BruhatPerm, bruhat_perm, two_flag_generators
from .certify import (
    build_lattice_path,
    certify,
    check_lemma_magic,
    check_lemma_sleight,
    cost_one_independent,
    cost_report,
    hop_costs,
    random_lattice_path,
)
from .cover3 import classify, cover_unit, is_equality_candidate, synth3
from .exactalg import GF, QQ, Field, Subspace, avoid_subspaces, intersect, member, rank
from .flags import (
    Flag,
    FlagTuple,
    dim_grid,
    direct_sum,
    is_transverse,
    pair_dims,
    random_flag,
    random_tuple,
    standard_flag,
    transverse_tuple,
)
from .gensets import CompatibleSet, GeneratingSet, LayerRef, verify_generating_set
from .multiflag import mu_formula, synth_m, transverse_synth
from .oracle import enumerate_compatible, mu_exact, mu_exact_over_field
from .prism import (
    build_G,
    compatible_pair,
    compatible_triple,
    cycles_cross,
    edges_cross,
    gtilde_edge,
    height_order,
)

__version__ = "0.1.0"

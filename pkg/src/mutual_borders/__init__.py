"""Mutually abelian-bordered pairs of binary words: classification and exact counts."""
from .census import CensusRecord, brute_D, brute_census
from .counters import (
    D,
    m_disjoint,
    m_overlap,
    m_overlap_gamma,
    m_total,
    mbar_eq,
    mbar_neq,
    mbar_total,
    mixed_count,
)
from .lattice import (
    LatticePath,
    LatticePoint,
    OddComposition,
    OverlapGeometry,
    binomial,
    enumerate_odd_compositions,
    fan_pair_count,
    path_count,
    small_gamma_triple_count,
    triple_count_brute,
    triple_count_closed,
    word_has_abelian_border_k,
)
from .words import (
    BinaryWord,
    BorderProfile,
    PairClass,
    ParikhPair,
    abelian_equiv,
    all_words,
    border_profile,
    classify,
    complement,
    lsb_pair,
    parikh,
    reverse,
    shortest_abelian_border,
    shortest_internal_border,
)

__version__ = "0.1.0"

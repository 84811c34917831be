"""Exact engine for depth, mdepth and maximal-depth invariants of monomial quotients."""

from .ideals import (
    F2,
    FieldSpec,
    Monomial,
    MonomialIdeal,
    Polarization,
    PrimeSupport,
    QQ,
    RingDescriptor,
    associated_primes,
    colon,
    intersect,
    irreducible_decomposition,
    minimalize,
    parse_generators,
    polarize,
    primary_decomposition,
    quotient_by_variable,
    ring,
    tensor_join,
    unit_ideal,
    zero_ideal,
)
from .complexes import (
    SimplicialComplex,
    cone_vertices,
    cycle_edge_ideal,
    facet_subcomplex_min_dim,
    from_squarefree_ideal,
    link,
    minimal_primes,
    parse_edge_list,
    pure_skeleton,
    to_ideal,
)
from .linalg import HomologyVector, SparseMatrix, boundary_matrix, rank, reduced_homology
from .invariants import (
    HochsterTable,
    ModuleProfile,
    depth,
    direct_sum_profile,
    krull_dim,
    localization_profile,
    mdepth,
    profile,
    projdim,
)
from .filtration import (
    AttReport,
    DimensionFiltration,
    ProbeConfig,
    att_report,
    dimension_filtration,
    is_sequentially_cm,
    mdepth_chain,
    probe_open_question,
    psupp_monomial,
    quotient_depth_intervals,
)

__version__ = "0.1.0"

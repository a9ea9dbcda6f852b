"""Exact chromatic symmetric functions, e-positivity checks and the
generalized pyramid / generalized bull families."""

from .partition import (
    Partition,
    conjugate,
    dominance_leq,
    multiplicity_product,
    parse_partition,
    partitions_of,
)
from .symfunc import (
    Basis,
    SymPoly,
    count_01_matrices,
    e_to_m,
    m_to_e,
    m_to_mtilde,
    mtilde_to_m,
    multiply_e,
    sympoly_e_expand,
    to_basis,
)
from .graph import (
    Graph,
    LayerDecomposition,
    build_gb,
    build_gp,
    build_pattern,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    distance_layers,
    empty_graph,
    find_induced,
    find_isomorphism,
    is_at_free,
    is_chordal,
    is_unit_interval,
    max_stable_set_size,
    parse_graph,
    path_graph,
)
from .csf import (
    EposVerdict,
    ResourceError,
    StableCensus,
    coloring_count_oracle,
    csf_e,
    csf_m,
    csf_mtilde,
    e_positivity,
    stable_partition_census,
)

__version__ = "0.1.0"

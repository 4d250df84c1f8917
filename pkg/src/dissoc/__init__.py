"""Exact enumeration of maximal dissociation sets in small graphs, with
named extremal families, isomorphism-free generators, and verification
suites for the lower bounds those families attain."""

from .graphs import (
    MAX_ORDER,
    Classification,
    Graph,
    bit_list,
    classify,
    closed_neighborhood,
    cycle,
    cycle_vertices,
    degree,
    delete_vertices,
    disjoint_union,
    from_edges,
    graph6_decode,
    graph6_encode,
    is_caterpillar,
    iter_bits,
    leaves,
    open_neighborhood,
    path,
    support_vertices,
    vset,
)
from .mds import (
    Constraint,
    MdsProfile,
    Status,
    addable,
    count_mds_bruteforce,
    enumerate_mds,
    enumerate_mds_naive,
    is_dissociation,
    is_maximal_dissociation,
    mds_profile,
    phi,
    phi_refined,
)
from .families import (
    U_pq,
    U_rt,
    enumerate_U_rt_class,
    extremal_caterpillars,
    extremal_trees,
    extremal_unicyclic,
    parse_family,
    spider_T,
)
from .canon import (
    CanonicalCode,
    ahu_code,
    generate_caterpillars,
    generate_trees,
    generate_unicyclic,
    is_isomorphic_bruteforce,
    tree_code,
    unicyclic_code,
)

__version__ = "0.1.0"

"""Faces of order and chain polytopes of finite posets."""

from .faces import (
    ComparisonReport,
    EdgePair,
    TriangleTriple,
    c_edges,
    c_triangles,
    compare,
    delta_star_c,
    delta_star_o,
    e_star_c,
    e_star_o,
    excess_formula,
    o_edges,
    o_triangles,
    phi,
)
from .poset import (
    ElementSet,
    Poset,
    RankDecomposition,
    XWitness,
    build_poset,
    comparability_graph,
    contains_x_subposet,
    enumerate_antichains,
    enumerate_ideals,
    ideal_of_antichain,
    is_connected,
    is_maximal_ranked,
    max_of_ideal,
    maximal_chains,
    ordinal_sum_of_antichains,
    random_poset,
    rank_levels,
)

__version__ = "0.1.0"

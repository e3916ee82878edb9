"""Spectral and local clustering for graphs, digraphs, and hypergraphs."""

from ._densekit import (
    Digraph,
    Graph,
    Hypergraph,
    adjusted_rand_index,
    bipartiteness,
    cbm,
    cbm_plus,
    clique_cut,
    clique_reduction,
    conductance,
    cut_imbalance,
    double_cover,
    evo_cut_directed,
    f1_pair_score,
    find_bipartite_components,
    flow_ratio,
    gaussian_graph,
    hyper_bipartiteness,
    hyper_two_cluster,
    knn_graph,
    loc_bipart_dc,
    local_sbm3,
    matched_accuracy,
    meta_sbm,
    misclassified_ratio,
    rand_index,
    rayleigh_quotient,
    restricted_weight,
    sbm,
    semi_double_cover,
    smallest_eigs,
    spectral_cluster,
    sweep_set_cheeger,
    two_sided_sweep,
    two_sided_sweep_hyper,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""Flag complexes of binary strings under Hamming distance.

Enumerate clique skeletons of the distance-at-most-r graph on the first m
binary strings, compute reduced Betti numbers over prime fields and integer
homology via Smith normal form, and compare everything against closed-form
(or conjectured) sphere-wedge predictions.
"""

from .complexes import (
    DEFAULT_BUDGET,
    SimplexRank,
    SizeBudgetExceeded,
    Skeleton,
    delete_vertex,
    enumerate_skeleton,
    flag_skeleton_from_graph,
    induced_subcomplex,
    kneser_independence_complex,
    link_complex,
    simplex_diameter,
    simplex_rank,
    simplex_unrank,
    skeleton_from_facets,
    star_cluster,
    write_skeleton_text,
)
from .experiments import (
    CollapseOutcome,
    KneserReport,
    LinkWedgeReport,
    SplittingReport,
    SurveyCell,
    SurveyReport,
    greedy_collapse_probe,
    kneser_check,
    link_homotopy_check,
    splitting_check,
    star_cluster_contractibility_check,
    survey_grid,
)
from .formulas import (
    PredictionRecord,
    conjectured_four_sphere_count,
    conjectured_seven_sphere_count,
    hypercube_circle_count,
    hypercube_three_sphere_count,
    link_sphere_count,
    predicted_betti,
    three_sphere_count,
)
from .hamming import (
    SpaceSpec,
    bit_positions,
    flip_bits,
    hamming_distance,
    neighbor_masks,
    neighborhood,
)
from .homology import (
    BettiVector,
    SparseBoundaryMatrix,
    betti_numbers,
    betti_single_dim,
    boundary_matrix,
    connected_components,
)
from .oracle import (
    betti_numbers_dense,
    dense_rank_oracle,
    gf_rank,
    random_flag_skeleton,
)
from .snf import IntegerHomologySummary, integer_homology_snf, smith_normal_form

__version__ = "0.1.0"

__all__ = [
    "BettiVector",
    "CollapseOutcome",
    "DEFAULT_BUDGET",
    "IntegerHomologySummary",
    "KneserReport",
    "LinkWedgeReport",
    "PredictionRecord",
    "SimplexRank",
    "SizeBudgetExceeded",
    "Skeleton",
    "SpaceSpec",
    "SparseBoundaryMatrix",
    "SplittingReport",
    "SurveyCell",
    "SurveyReport",
    "betti_numbers",
    "betti_numbers_dense",
    "betti_single_dim",
    "bit_positions",
    "boundary_matrix",
    "conjectured_four_sphere_count",
    "conjectured_seven_sphere_count",
    "connected_components",
    "delete_vertex",
    "dense_rank_oracle",
    "enumerate_skeleton",
    "flag_skeleton_from_graph",
    "flip_bits",
    "gf_rank",
    "greedy_collapse_probe",
    "hamming_distance",
    "hypercube_circle_count",
    "hypercube_three_sphere_count",
    "induced_subcomplex",
    "integer_homology_snf",
    "kneser_check",
    "kneser_independence_complex",
    "link_complex",
    "link_homotopy_check",
    "link_sphere_count",
    "neighbor_masks",
    "neighborhood",
    "predicted_betti",
    "random_flag_skeleton",
    "simplex_diameter",
    "simplex_rank",
    "simplex_unrank",
    "skeleton_from_facets",
    "smith_normal_form",
    "splitting_check",
    "star_cluster",
    "star_cluster_contractibility_check",
    "survey_grid",
    "three_sphere_count",
    "write_skeleton_text",
]

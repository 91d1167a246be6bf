"""Combinatorial asphericity certificates for LOT/LOF presentation complexes."""

from .arborescence import (
    Branching,
    CutWitness,
    edmonds_condition,
    two_disjoint_branchings,
    verify_branching,
)
from .certify import (
    Certificate,
    angles_from_bipartition,
    certify_lof,
    certify_relative,
    lbf_check,
    strong_lbf_check,
)
from .link_complex import (
    AngleAssignment,
    Corner,
    CurvatureReport,
    LinkGraph,
    Multigraph,
    SignedVertex,
    build_link,
    curvature,
    induced_subgraph,
    is_forest,
    is_relative_forest,
    verify_coloring_test,
    verify_relative_coloring_test,
)
from .log_model import (
    Edge,
    Log,
    LogClass,
    ParseError,
    SubLog,
    block_reorient,
    classify,
    enumerate_sub_lots,
    make_log,
    non_label_vertices,
    parse_log,
    quotient_lof,
    reduce_log,
    reducedness_report,
    reorient,
    serialize_log,
)
from .selection import (
    SelectionGraph,
    beta_image,
    build_selection_graph,
    is_admissible,
    reorientation_from_partition,
)

__version__ = "0.1.0"

"""Rigidity, vertex-redundant rigidity and global rigidity of fixed-lattice
periodic bar-joint and body-bar frameworks, decided exactly from their
quotient gain graphs."""

from .body_bar import (
    BodyBarGainGraph,
    CountReport,
    build_body_bar_gain_graph,
    count_rank,
    decide_body_bar_global,
    is_bar_redundantly_rigid,
)
from .framework import (
    Framework,
    Lattice,
    PinSpec,
    are_congruent,
    are_equivalent,
    edge_measurements,
    generic_rank,
    identity_lattice,
    pinned_rigidity_matrix,
    random_generic_framework,
    rigidity_matrix,
)
from .gain_graph import (
    CoveringWindow,
    GainEdge,
    GainGraph,
    InvalidGainGraphError,
    cone_contract,
    covering_window,
    gain_graph,
    gain_rank,
    reverse_edge,
    switch,
    validate,
)
from .linalg import RationalMatrix, integer_rank, rank
from .motion import (
    FlexPath,
    PathCertificate,
    build_flex_path,
    sample_path,
    small_graph_global_check,
    verify_path,
)
from .rigidity import (
    GlobalVerdict,
    RigidityVerdict,
    decide_global_rigidity,
    is_rigid,
    is_vertex_redundantly_rigid,
)

__version__ = "0.1.0"

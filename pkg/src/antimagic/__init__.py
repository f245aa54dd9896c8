"""Antimagic edge labelings for barbells, bistar coronas and cycle coronas."""

from .families import (
    CoronaMap,
    FamilyError,
    FamilySpec,
    check_regular_connected,
    edge_corona,
    make_barbell,
    make_bistar,
    make_complete,
    make_cycle_zigzag,
    make_star,
    parse_h_spec,
)
from .graph import (
    EdgeLabeling,
    Graph,
    GraphError,
    LabelingError,
    PartialLabeling,
    WeightReport,
    is_antimagic_labeling,
    partial_vertex_weights,
    to_dot,
    vertex_weights,
)
from .labelers import (
    LabelingCertificate,
    VerificationError,
    label_barbell,
    label_bistar_corona,
    label_cycle,
    label_cycle_corona,
    label_cycle_zigzag,
    label_spec,
)
from .oracle import OracleResult, brute_force_antimagic, cross_check, enumerate_antimagic

__version__ = "0.1.0"

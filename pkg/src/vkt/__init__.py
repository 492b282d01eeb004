"""Exact-arithmetic toolkit for virtual knot invariants on signed Gauss codes."""

from .gauss import (
    GaussCode,
    GaussEntry,
    GaussError,
    ParseError,
    Parity,
    UnknownCrossingError,
    ValidationError,
    canonical_form,
    is_odd_virtual,
    odd_writhe,
    parity,
    parse_gauss,
    validate,
    writhe,
)
from .invariants import (
    LaurentPoly,
    affine_index_polynomial,
    chord_formula_polynomial,
    definitions_agree,
    odd_wriggle_polynomial,
    vassiliev,
    vassiliev_from_series,
    wriggle_polynomial,
)
from .labeling import (
    ArcLabels,
    algebraic_weight,
    cheng_labels,
    has_classical_labeling,
    is_pure_virtual,
    label_arcs,
    weight_table,
)
from .linkdiag import (
    TwoComponentLink,
    chord_intersections,
    chord_weight,
    lk_over,
    lk_under,
    smooth,
    swap_order,
    wriggle_number,
)
from .mutation import (
    BlockPair,
    enumerate_block_pairs,
    mutate_reflection,
    mutate_rotation,
    mutation_detection_report,
    validate_blocks,
)
from .transform import (
    MoveKind,
    RandomWalkConfig,
    connected_sum,
    crossing_change,
    family,
    mirror,
    r1_delete,
    r1_insert,
    r2_delete,
    r2_insert,
    r3_apply,
    r3_sites,
    random_move_walk,
    replay,
    reverse,
    simplify_greedy,
    twist_replace,
)

from . import fixtures

__version__ = "0.1.0"

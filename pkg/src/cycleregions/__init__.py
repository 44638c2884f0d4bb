"""Exact-arithmetic constructions, region counts, and verification
oracles for straight-line embeddings of cycle graphs."""

from .arrangement import (
    Arrangement,
    DegenerateInput,
    DisconnectedArrangement,
    SegmentClass,
    SplitterReport,
    VertexKind,
    build_arrangement,
    region_count_euler,
    region_count_traversal,
    splitter_analysis,
)
from .embedding import (
    ConstructionNotACycle,
    CycleEmbedding,
    DegeneracyReport,
    PerturbationFailed,
    construct,
    construct_even,
    construct_even_raw,
    construct_odd,
    format_embedding,
    load_embedding,
    parse_embedding,
    perturb,
    regular_polygon_points,
    save_embedding,
    validate_general_position,
)
from .formulas import (
    InvalidN,
    Parity,
    ParityCase,
    f_max,
    predicted_edges,
    predicted_vertices,
)
from .geometry import (
    Intersection,
    IntersectionKind,
    Orientation,
    Point,
    PointNotOnSegment,
    Segment,
    cross,
    orientation,
    point_on_segment,
    segment_intersection,
    sort_points_along,
)
from .render import RenderOptions, to_svg
from .search import (
    CyclicPermutation,
    NTooLarge,
    OracleResult,
    crossing_count_convex,
    oracle_max_regions_convex,
    random_search,
    splitter_bound_check,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "ConstructionNotACycle",
    "CycleEmbedding",
    "CyclicPermutation",
    "DegeneracyReport",
    "DegenerateInput",
    "DisconnectedArrangement",
    "Intersection",
    "IntersectionKind",
    "InvalidN",
    "NTooLarge",
    "OracleResult",
    "Orientation",
    "Parity",
    "ParityCase",
    "PerturbationFailed",
    "Point",
    "PointNotOnSegment",
    "RenderOptions",
    "Segment",
    "SegmentClass",
    "SplitterReport",
    "VertexKind",
    "build_arrangement",
    "construct",
    "construct_even",
    "construct_even_raw",
    "construct_odd",
    "cross",
    "crossing_count_convex",
    "f_max",
    "format_embedding",
    "load_embedding",
    "oracle_max_regions_convex",
    "orientation",
    "parse_embedding",
    "perturb",
    "point_on_segment",
    "predicted_edges",
    "predicted_vertices",
    "random_search",
    "region_count_euler",
    "region_count_traversal",
    "regular_polygon_points",
    "save_embedding",
    "segment_intersection",
    "sort_points_along",
    "splitter_analysis",
    "splitter_bound_check",
    "to_svg",
    "validate_general_position",
]

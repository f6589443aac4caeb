"""Largest contained quadrilateral and smallest enclosing parallelogram of a
convex polygon, computed in linear time by one rotating-calipers sweep, with
brute-force oracles and conjugate-pair optimality certificates."""

from .geometry import (
    ConvexPolygon,
    Degenerate,
    DegenerateSample,
    Direction,
    GeometryError,
    Line,
    NonFinite,
    NotConvex,
    ParallelLines,
    Point,
    Segment,
    SweepOverrun,
    TooFewVertices,
    canonicalize,
    chord_through,
    contains_point,
    det,
    extreme_vertex,
    line_intersection,
    make_convex_polygon,
    polygon_area,
    quad_area,
    triangle_area_signed,
    width,
)
from .calipers import (
    AntipodalPair,
    DiagonalInterval,
    SupportInterval,
    SweepEvent,
    VerticalExtremes,
    antipodal_vertex_pairs,
    diagonal_intervals,
    merged_sweep,
    opposite_edge_start,
    support_intervals,
    vertical_extremes,
)
from .extremal import (
    CertificateChecks,
    ConjugateCertificate,
    ExtremesReport,
    ParaResult,
    QuadResult,
    anchored_conjugate_pair,
    combined_extremes,
    largest_quadrilateral,
    slide_corner,
    smallest_parallelogram,
    star_area,
    verify_conjugate_pair,
)
from .oracle import (
    OraclePara,
    OracleQuad,
    brute_anchored_quad_area,
    brute_largest_quad,
    brute_smallest_para,
    is_antipodal_brute,
    longest_chord,
)
from .polygen import (
    GenSpec,
    SplitMix64,
    generate,
    lattice_ngon,
    parallel_edge_polygon,
    random_convex,
    regular_ngon,
)

__version__ = "0.1.0"

"""fabricmotifs: matrix seriation, noisy block detection, and fabric rendering.

A small pipeline for looking at undirected graphs two complementary ways:
as an adjacency matrix ordered to pull structure into contiguous blocks
(scored by Moran's I), and as a BioFabric-style diagram where detected
cliques, bicliques, and stars collapse into compact glyphs instead of edge
clutter.
"""

from .errors import (
    DegenerateMatrix,
    DimensionMismatch,
    EmptyGraphError,
    FabricError,
    InvalidPermutation,
    MalformedTour,
    OverlapDetected,
    ParseError,
    PatternOutOfBounds,
    TooLargeForExhaustive,
    TourLengthMismatch,
)
from .fabric import (
    BicliqueGlyph,
    CliqueGlyph,
    EdgeSegment,
    EdgeSequence,
    FabricLayout,
    PatternGroup,
    StaircaseGroup,
    StaircaseRun,
    VertexLine,
    layout,
    to_scene,
    unfold,
)
from .graphio import (
    Graph,
    load_edgelist,
    load_graph,
    load_graph_path,
    load_json,
    load_matrix_market,
    save_json,
    sniff_format,
    to_edgelist,
)
from .matrix import BinaryMatrix, VertexOrdering, adjacency, morans_i
from .patterns import (
    Pattern,
    PatternKind,
    PatternSet,
    PurityParams,
    detect,
    enumerate_candidates,
    select_cliques,
    select_rectangles,
)
from .render import StyleConfig, render_fabric_svg, render_matrix_svg
from .seriation import (
    MAX_EXHAUSTIVE_N,
    OrderingResult,
    exhaustive_order,
    export_tsplib,
    heuristic_order,
    import_tour,
    order,
)

__version__ = "0.1.0"

__all__ = [
    "BicliqueGlyph",
    "BinaryMatrix",
    "CliqueGlyph",
    "DegenerateMatrix",
    "DimensionMismatch",
    "EdgeSegment",
    "EdgeSequence",
    "EmptyGraphError",
    "FabricError",
    "FabricLayout",
    "Graph",
    "InvalidPermutation",
    "MAX_EXHAUSTIVE_N",
    "MalformedTour",
    "OrderingResult",
    "OverlapDetected",
    "ParseError",
    "Pattern",
    "PatternGroup",
    "PatternKind",
    "PatternOutOfBounds",
    "PatternSet",
    "PurityParams",
    "StaircaseGroup",
    "StaircaseRun",
    "StyleConfig",
    "TooLargeForExhaustive",
    "TourLengthMismatch",
    "VertexLine",
    "VertexOrdering",
    "adjacency",
    "detect",
    "enumerate_candidates",
    "exhaustive_order",
    "export_tsplib",
    "heuristic_order",
    "import_tour",
    "layout",
    "load_edgelist",
    "load_graph",
    "load_graph_path",
    "load_json",
    "load_matrix_market",
    "morans_i",
    "order",
    "render_fabric_svg",
    "render_matrix_svg",
    "save_json",
    "select_cliques",
    "select_rectangles",
    "sniff_format",
    "to_edgelist",
    "to_scene",
    "unfold",
]

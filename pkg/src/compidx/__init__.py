"""m-step competition graphs of digraphs and multipartite tournaments.

Computes competition indices and periods, sink sequences, walk types and
primitivity, generates the digraph families involved, and checks the
structural theorems about them on exhaustive or seeded corpora.
"""

from .competition import (
    CompetitionProfile,
    competition_graph,
    competition_profile,
    graph_sequence,
    m_step_competition_graph,
)
from .core import (
    BooleanMatrix,
    Digraph,
    SimpleGraph,
    bool_multiply,
    bool_power,
    build_digraph,
    cycle_gcd,
    primitivity,
    row_graph,
    strongly_connected_components,
)
from .errors import CompidxError
from .formats import format_digraph, parse_digraph, read_digraph, write_digraph
from .sinks import SinkSequence, TerminalKind, is_acyclic, sink_sequence, walk_length_spectrum
from .structure import (
    VertexType,
    find_holes4,
    find_triangles,
    frobenius,
    longest_cycle_length,
    score_sequence,
    vertex_type,
)

__version__ = "0.1.0"

__all__ = [
    "BooleanMatrix", "CompetitionProfile", "CompidxError", "Digraph", "SimpleGraph",
    "SinkSequence", "TerminalKind", "VertexType", "bool_multiply", "bool_power",
    "build_digraph", "competition_graph", "competition_profile", "cycle_gcd",
    "find_holes4", "find_triangles", "format_digraph", "frobenius", "graph_sequence",
    "is_acyclic", "longest_cycle_length", "m_step_competition_graph", "parse_digraph",
    "primitivity", "read_digraph", "row_graph", "score_sequence", "sink_sequence",
    "strongly_connected_components", "vertex_type", "walk_length_spectrum", "write_digraph",
]

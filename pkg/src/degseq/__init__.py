"""Degree-sequence toolkit: graphicality testing, exact random graph
generation, edge-swap randomization, and structural metrics."""

from .bench import BenchReport, BenchRow, bench
from .edgeswap import SwapStats, default_swap_budget, randomize, swap_step
from .errors import (
    DegseqError,
    DegreeOutOfRange,
    EmptyCandidates,
    EmptyInput,
    EquivalenceBreach,
    InternalStuck,
    MalformedToken,
    NoEdges,
    NotGraphical,
    SelfPair,
    TooFewEdges,
    TooLarge,
    Underflow,
    Ungraphable,
)
from .generator import (
    CandidateSet,
    GenRecord,
    candidate_set,
    generate,
    generate_stepwise,
    graphical_after_pair,
    sample_candidate,
)
from .graph import Graph, format_edges, graph_from_edge_text, parse_edges
from .graphicality import (
    EgScratch,
    GraphicalityReport,
    check_graphical,
    check_inequalities,
    compute_weights,
    corrected_durfee,
    prefix_sums,
)
from .metrics import (
    MetricsReport,
    centralities,
    clustering,
    components,
    compute_metrics,
    maximal_cliques,
    path_stats,
    triangles,
)
from .sequence import (
    DegreeSequence,
    ResidualState,
    SortedView,
    decrement_one,
    decrement_pair,
    min_positive_vertex,
    parse_sequence,
    serialize_sequence,
)
from .synth import synth_from_graph, synth_powerlaw, synth_regular, synth_sequence

__version__ = "0.1.0"

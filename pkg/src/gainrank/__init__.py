"""Rank, inertia and extremal structure of complex unit gain graphs."""

from .cycle_analysis import (
    AmbiguousBoundaryError,
    CycleRecord,
    CycleType,
    classify_cycle,
    cycle_gain,
    cycle_inertia_closed_form,
    path_rank,
)
from .gain_core import (
    AngleGain,
    ExactGain,
    GainGraph,
    GraphError,
    HermitianMatrix,
    adjacency_matrix,
    build_graph,
    components,
    delete_vertices,
    load_graph,
    loads_graph,
)
from .linalg import Inertia, graph_inertia, graph_rank, inertia, rank_approx, rank_exact
from .qi import QI
from .structure import (
    ContractionResult,
    GraphStats,
    contract_cycles,
    cyclomatic_number,
    find_cycles,
    independence_number,
    matching_number,
    pendant_classification,
)
from .theorems import (
    AnalysisReport,
    analyze,
    check_bounds,
    is_lower_optimal_by_rank,
    is_lower_optimal_by_structure,
    lemma_suite,
)

__version__ = "0.1.0"

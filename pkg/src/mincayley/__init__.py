"""Combinatorial search for minimal-Cayley-subgraph obstructions.

The pipeline enumerates faithful no-lonely-color edge colorings of a graph,
reduces them modulo automorphisms and color relabeling, orients each
surviving coloring color class by color class, and checks cycle patterns on
every candidate.  An empty survivor set proves the graph is not a subgraph
of any minimal Cayley graph; a nonempty one is inconclusive.

The group engine realizes generalized Petersen graphs G(n, k) with
gcd(n, k) = 1 as induced subgraphs of minimal Cayley graphs of semidirect
products C_n x| C_r.
"""

from .coloring import (
    ColoringVerdict,
    EdgeColoring,
    all_colorings,
    brute_force_colorings,
    cut_condition,
    enumerate_colorings,
    verify_coloring,
)
from .errors import (
    CycleCapExceeded,
    DisconnectedGraphError,
    GraphFormatError,
    GroupInvariantError,
    GroupSpecError,
    MinCayleyError,
    SearchBudgetExceeded,
    SizeBoundExceeded,
)
from .graphs import (
    Cycle,
    Digraph,
    Graph,
    Walk,
    automorphisms,
    connected_components,
    encode_graph6,
    enumerate_cycles,
    format_edge_list,
    parse_edge_list,
    parse_graph6,
    to_dot,
)
from .groups import (
    FiniteGroup,
    SemidirectGroup,
    cayley_digraph,
    cayley_graph,
    cyclic_group,
    enumerate_minimal_generating_sets,
    is_minimal_generating,
    klein_four_group,
    parse_group_spec,
    parse_group_table,
    semidirect,
    subgroup_closure,
)
from .orientation import (
    CandidateOrientation,
    candidate_count,
    color_components,
    enumerate_orientations,
    is_valid_local,
    reverse_color,
)
from .patterns import (
    PatternTrace,
    Verdict,
    check_cycles,
    follow_pattern,
    obstruction_pipeline,
    verdict_to_json,
)
from .petersen import (
    Embedding,
    PetersenEmbedding,
    SearchResult,
    generalized_petersen,
    induced_subgraph_search,
    petersen_embedding,
    petersen_plane_scan,
    scan_to_csv,
    verify_induced_embedding,
)
from .symmetry import CanonicalColoring, canonical_form, reduce_colorings

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"

"""Super-edge-connectivity and forbidden-subgraph toolkit.

Decides edge, vertex and restricted edge connectivity of small simple graphs,
whether every minimum edge cut isolates a vertex, and whether a graph avoids
given induced subgraphs; scans all small graphs to check forbidden-pair
characterizations of super-edge-connected graphs.
"""

from .connectivity import (
    ConnectivityReport,
    CutWitness,
    connectivity_report,
    edge_connectivity,
    is_super_edge_connected,
    max_flow_min_cut,
    oracle_cut_scan,
    restricted_edge_connectivity,
    vertex_connectivity,
)
from .enumeration import EnumSpec, canonical_code, enumerate_classes, enumerate_labeled
from .families import FamilySpec, is_exception, make, registry_verify
from .graph import (
    DegreeProfile,
    Graph,
    GraphError,
    build_graph,
    cartesian_product,
    components,
    degree_profile,
    distance,
    induced_subgraph,
    is_connected,
)
from .graph6 import decode_graph6, encode_graph6, stream_decode
from .harness import (
    ScanReport,
    TheoremSpec,
    Verdict,
    classify,
    cross_validate,
    precedence_gate,
    search_counterexample,
    verify_sufficiency,
)
from .patterns import (
    PairSpec,
    Pattern,
    contains_induced,
    induced_subgraph_of,
    is_free,
    oracle_contains_induced,
    pair_precedes,
    pattern_atlas,
)

__version__ = "0.1.0"

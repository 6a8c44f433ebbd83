"""booklab: clique counting in graphs that avoid books B(r,s).

A book B(r,s) is a pair of r-cliques sharing exactly s vertices.  The
package computes exact maxima of r-clique counts over book-free graphs at
small orders, builds the known extremal constructions, and hill-climbs by
Zykov-style vertex cloning at medium orders.
"""

from .canonical import CanonicalForm, canonical_form
from .constructions import (
    b42_construction,
    b42_count,
    book_extremal,
    k4_packing,
    k4_packing_count,
    partition_construction,
    partition_predicted_count,
    turan_clique_count,
)
from .errors import ResourceLimitError
from .formats import (
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
    parse_graph_text,
)
from .graphs import (
    Graph,
    VertexSet,
    clique_number,
    complete_graph,
    contains_subgraph,
    count_cliques,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_cliques,
    find_subgraph,
    from_edges,
    join,
    path_graph,
    turan_graph,
)
from .partitions import Partition, beta, enumerate_partitions, is_s_sum_free
from .patterns import (
    BookSpec,
    CliqueWitness,
    ForbiddenFamily,
    book_graph,
    book_violation,
    family_to_text,
    h1_graph,
    h2_graph,
    is_free,
    parse_family,
)
from .search import (
    SearchReport,
    brute_force_labeled,
    canonical_generation,
    cleanup_edges,
    clone_move,
    exact_ex,
    random_free_graph,
    symmetrize,
)

__version__ = "0.1.0"

__all__ = [
    "BookSpec",
    "CanonicalForm",
    "CliqueWitness",
    "ForbiddenFamily",
    "Graph",
    "Partition",
    "ResourceLimitError",
    "SearchReport",
    "VertexSet",
    "b42_construction",
    "b42_count",
    "beta",
    "book_extremal",
    "book_graph",
    "book_violation",
    "brute_force_labeled",
    "canonical_form",
    "canonical_generation",
    "cleanup_edges",
    "clique_number",
    "clone_move",
    "complete_graph",
    "contains_subgraph",
    "count_cliques",
    "cycle_graph",
    "disjoint_union",
    "edge_list_decode",
    "edge_list_encode",
    "empty_graph",
    "enumerate_cliques",
    "enumerate_partitions",
    "exact_ex",
    "family_to_text",
    "find_subgraph",
    "from_edges",
    "graph6_decode",
    "graph6_encode",
    "h1_graph",
    "h2_graph",
    "is_free",
    "is_s_sum_free",
    "join",
    "k4_packing",
    "k4_packing_count",
    "parse_family",
    "parse_graph_text",
    "partition_construction",
    "partition_predicted_count",
    "path_graph",
    "random_free_graph",
    "symmetrize",
    "turan_clique_count",
    "turan_graph",
]

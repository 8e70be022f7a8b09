"""Scale-2, scale-1 and truncated hypercube embeddings of network topologies."""

from .graph import (
    DisconnectedGraph,
    DistanceMatrix,
    Graph,
    GraphError,
    SizeLimitExceeded,
    all_pairs_distances,
    bfs_tree,
    bipartite_double,
    build_graph,
    cartesian_product,
    is_bipartite,
    isomorphic,
)

__version__ = "0.1.0"

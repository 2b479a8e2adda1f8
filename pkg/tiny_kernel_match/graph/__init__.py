from .base_graph import BaseGraphView
from .bipartite_graph import BipartiteGraph
from .errors import (
    GraphParseError,
    MalformedHeaderError,
    IndexOutOfBoundsError,
    TruncatedEntriesError,
    InvalidTokenError,
    NegativeIdError,
    GraphInvariantError,
    VertexRangeError,
)
from .loaders import (
    GraphFormatType,
    load_graph,
    load_matrix_market,
    load_edge_list,
    write_edge_list,
    write_matrix_market,
)
from .transforms import bipartite_from_directed, random_permute

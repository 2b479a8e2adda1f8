from enum import Enum

from .base_loader import BaseGraphLoader, PathLike
from .matrix_market_loader import MatrixMarketLoader
from .edge_list_loader import EdgeListLoader
from ..bipartite_graph import BipartiteGraph


class GraphFormatType(Enum):
    """Graph file formats.
    """

    MTX = "mtx"
    EDGELIST = "edgelist"


_LOADERS = {
    GraphFormatType.MTX: MatrixMarketLoader,
    GraphFormatType.EDGELIST: EdgeListLoader,
}


def get_loader(fmt: str) -> BaseGraphLoader:
    return _LOADERS[GraphFormatType(fmt)]()


def load_matrix_market(path: PathLike) -> BipartiteGraph:
    return MatrixMarketLoader().load(path)


def load_edge_list(path: PathLike) -> BipartiteGraph:
    return EdgeListLoader().load(path)


def load_graph(path: PathLike, fmt: str = GraphFormatType.EDGELIST.value) -> BipartiteGraph:
    return get_loader(fmt).load(path)


def write_edge_list(graph: BipartiteGraph, path: PathLike) -> None:
    EdgeListLoader().write(graph, path)


def write_matrix_market(graph: BipartiteGraph, path: PathLike) -> None:
    MatrixMarketLoader().write(graph, path)

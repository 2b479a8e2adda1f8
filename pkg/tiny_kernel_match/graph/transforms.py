from typing import Iterable, Tuple

import numpy as np

from .bipartite_graph import BipartiteGraph, _as_edge_array
from .errors import VertexRangeError
from ..utils.rng import split_generators


def bipartite_from_directed(edges: Iterable[Tuple[int, int]], n: int) -> BipartiteGraph:
    """ 有向图拆点: 每个顶点拆成出点 (左) 和入点 (右)

    Arc ``i -> j`` becomes edge ``(i, j)``; a self-loop ``i -> i`` is a valid
    edge between the two copies. Undirected inputs pass both directions.
    """
    arr = _as_edge_array(edges)
    if len(arr) and (arr.min() < 0 or arr.max() >= n):
        raise VertexRangeError(f"arc endpoint out of range [0, {n})")
    return BipartiteGraph.from_edges(n, n, arr)


def random_permute(graph: BipartiteGraph, seed: int) -> BipartiteGraph:
    """ 左右两侧分别做随机置换, 同一 seed 输出逐字节相同
    """
    left_rng, right_rng = split_generators(seed, 2)
    left_perm = left_rng.permutation(graph.n_left).astype(np.int64)
    right_perm = right_rng.permutation(graph.n_right).astype(np.int64)

    arr = graph.edge_array()
    if len(arr):
        arr = np.stack([left_perm[arr[:, 0]], right_perm[arr[:, 1]]], axis=1)
    return BipartiteGraph.from_edges(graph.n_left, graph.n_right, arr)

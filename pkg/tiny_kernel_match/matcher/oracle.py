from functools import lru_cache
from typing import List

from .errors import OracleLimitError
from ..graph.bipartite_graph import BipartiteGraph

EXHAUSTIVE_MAX_EDGES = 24
AUGMENTING_MAX_SIDE = 40


def _adjacency(graph: BipartiteGraph) -> List[List[int]]:
    return [graph.left_neighbors(u) for u in range(graph.n_left)]


def exhaustive_max(graph: BipartiteGraph) -> int:
    """ 穷举: 每个左顶点要么不匹配, 要么匹配一个未用过的右邻居
    """
    if graph.m > EXHAUSTIVE_MAX_EDGES:
        raise OracleLimitError(f"exhaustive search needs m <= {EXHAUSTIVE_MAX_EDGES}, got {graph.m}")
    adj = _adjacency(graph)

    @lru_cache(maxsize=None)
    def best(i: int, used: int) -> int:
        if i == len(adj):
            return 0
        out = best(i + 1, used)
        for v in adj[i]:
            if not used >> v & 1:
                out = max(out, 1 + best(i + 1, used | 1 << v))
        return out

    return best(0, 0)


def augmenting_max(graph: BipartiteGraph) -> int:
    """ One augmenting search per left vertex, no phases.
    """
    if max(graph.n_left, graph.n_right) > AUGMENTING_MAX_SIDE:
        raise OracleLimitError(f"augmenting search needs sides <= {AUGMENTING_MAX_SIDE}")
    adj = _adjacency(graph)
    mate = [-1] * graph.n_right

    def try_vertex(u: int, seen: List[bool]) -> bool:
        for v in adj[u]:
            if seen[v]:
                continue
            seen[v] = True
            if mate[v] == -1 or try_vertex(mate[v], seen):
                mate[v] = u
                return True
        return False

    return sum(1 for u in range(graph.n_left) if try_vertex(u, [False] * graph.n_right))


def brute_force_max(graph: BipartiteGraph) -> int:
    """ 独立的最大匹配基数: m <= 24 时穷举, 否则单点增广 (每侧最多 40 个顶点)
    """
    if graph.m <= EXHAUSTIVE_MAX_EDGES:
        return exhaustive_max(graph)
    if max(graph.n_left, graph.n_right) <= AUGMENTING_MAX_SIDE:
        return augmenting_max(graph)
    raise OracleLimitError(
        f"graph too large for the oracle: m={graph.m}, sides {graph.n_left}x{graph.n_right}"
    )

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Tuple

from .matching_tree import MatchingTree
from ..graph.bipartite_graph import BipartiteGraph
from ..matcher.matching import Matching
from ..store.merge_graph import MergeGraph


@dataclass
class KernelStats:
    """ 核化计数器
    """

    merge_ops: int = 0
    rounds: int = 1
    edges_touched: int = 0
    r1_matches: int = 0
    merged_count: int = 0
    kernel_n: int = 0
    kernel_m: int = 0
    dropped: int = 0
    per_round_merge_ops: List[int] = field(default_factory=list)

    def count_merge(self, round_no: int, merged: int) -> None:
        self.merge_ops += 1
        self.merged_count += merged
        while len(self.per_round_merge_ops) < round_no:
            self.per_round_merge_ops.append(0)
        self.per_round_merge_ops[round_no - 1] += 1

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class KernelTrace:
    """ Optional instrumentation.

    ``additions``: (vertex, its neighbours, boundary set before it joined)
    for every implicit mergeable vertex. ``merges``: (round, boundary side,
    boundary ids) for every merge operation.
    """

    additions: List[Tuple[int, List[int], List[int]]] = field(default_factory=list)
    merges: List[Tuple[int, str, Tuple[int, ...]]] = field(default_factory=list)


def to_sides(edge: Tuple[int, int], n_left: int) -> Tuple[int, int]:
    """ Unified (a, b) pair -> (left id, right id).
    """
    a, b = edge
    if a < n_left:
        return a, b - n_left
    return b, a - n_left


@dataclass
class KernelResult:
    kernel: MergeGraph
    tree: MatchingTree
    partial: Matching
    stats: KernelStats
    orig_of_super: Dict[int, List[int]]
    strategy: str = ""
    trace: KernelTrace = None

    def kernel_graph(self) -> BipartiteGraph:
        """ 导出核: 存活顶点之间的边, 使用原始 (侧内) 编号
        """
        g = self.kernel
        edges = []
        for u in range(g.n_left):
            if g.alive[u]:
                edges.extend((u, t - g.n_left) for t in g.neighbors(u))
        return BipartiteGraph.from_edges(g.n_left, g.n_right, edges)

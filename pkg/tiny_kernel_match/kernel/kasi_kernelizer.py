from .base_kernelizer import BaseKernelizer
from ..graph.bipartite_graph import BipartiteGraph


class KasiKernelizer(BaseKernelizer):
    """ 经典贪心 Karp-Sipser: 每次只合并一个度为 2 的顶点
    """

    name = "kasi-baseline"

    def __init__(self, graph: BipartiteGraph, slack: float = 0.0, trace: bool = False):
        super().__init__(graph, slack=slack, balanced=False, trace=trace)

    def grow_mergeable_set(self, start: int) -> None:
        self._start_search(start)

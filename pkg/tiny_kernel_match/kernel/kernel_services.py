from enum import Enum
from typing import Optional

from .base_kernelizer import BaseKernelizer
from .kasi_kernelizer import KasiKernelizer
from .mvm_kernelizer import MvmKernelizer
from .stats import KernelResult
from ..graph.bipartite_graph import BipartiteGraph


class KernelStrategyType(Enum):
    """Kernelization strategies.
    """

    MVM_BALANCED = "mvm-balanced"
    MVM_GREEDY = "mvm-greedy"
    # greedy search without the hit-count filter
    MVM_DIRECT = "mvm-direct"
    KASI_BASELINE = "kasi-baseline"
    NONE = "none"


class KernelServices:
    """ 根据策略名创建核化器
    """

    def __init__(self, strategy: str = KernelStrategyType.MVM_BALANCED.value, slack: float = 0.0, trace: bool = False):
        self.strategy = KernelStrategyType(strategy)
        self.slack = slack
        self.trace = trace

    def create(self, graph: BipartiteGraph) -> Optional[BaseKernelizer]:
        if self.strategy == KernelStrategyType.MVM_BALANCED:
            return MvmKernelizer(graph, self.slack, balanced=True, trace=self.trace)
        elif self.strategy == KernelStrategyType.MVM_GREEDY:
            return MvmKernelizer(graph, self.slack, balanced=False, trace=self.trace)
        elif self.strategy == KernelStrategyType.MVM_DIRECT:
            return MvmKernelizer(graph, self.slack, balanced=False, indirect=False, trace=self.trace)
        elif self.strategy == KernelStrategyType.KASI_BASELINE:
            return KasiKernelizer(graph, self.slack, trace=self.trace)
        return None

    def run(self, graph: BipartiteGraph) -> Optional[KernelResult]:
        kernelizer = self.create(graph)
        return kernelizer.run() if kernelizer is not None else None


def kernelize(graph: BipartiteGraph, strategy: str = "balanced", slack: float = 0.0, trace: bool = False) -> KernelResult:
    """ 多顶点合并核化, strategy 取 balanced / greedy (也接受完整策略名)
    """
    aliases = {"balanced": KernelStrategyType.MVM_BALANCED.value, "greedy": KernelStrategyType.MVM_GREEDY.value}
    name = aliases.get(strategy, strategy)
    if name == KernelStrategyType.NONE.value:
        raise ValueError("strategy 'none' does not kernelize")
    return KernelServices(name, slack, trace).run(graph)


def baseline_kasi(graph: BipartiteGraph, slack: float = 0.0, trace: bool = False) -> KernelResult:
    return KasiKernelizer(graph, slack, trace=trace).run()

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from .errors import GeneratorSpecError
from ..graph.bipartite_graph import BipartiteGraph
from ..graph.transforms import random_permute

CORE_SIZE = 3


@dataclass(frozen=True)
class WorstCaseSpec:
    """ 最坏情况实例族参数

    One instance has ``k = n_per_instance // 2`` chain vertices and
    ``3k + 6`` vertices in total; the generated graph holds ``copies``
    vertex-disjoint instances.
    """

    n_per_instance: int
    copies: int = 64
    seed: int = 0

    def validate(self) -> None:
        n = self.n_per_instance
        if n < 8 or n & (n - 1):
            raise GeneratorSpecError(f"n_per_instance must be a power of two >= 8, got {n}")
        if self.copies < 1:
            raise GeneratorSpecError(f"copies must be >= 1, got {self.copies}")

    @property
    def k(self) -> int:
        return self.n_per_instance // 2

    @property
    def instance_sides(self) -> Tuple[int, int]:
        k = self.k
        return 2 * k + 2, k + 1 + CORE_SIZE

    @property
    def instance_size(self) -> int:
        return sum(self.instance_sides)


def _instance_edges(k: int) -> List[Tuple[int, int]]:
    """ Left: chain u_1..u_k (ids 0..k-1), externals e_0..e_{k+1} (ids k..2k+1).
    Right: boundaries b_1..b_{k+1} (ids 0..k), core (ids k+1..k+3).
    """
    def u(i):
        return i - 1

    def e(j):
        return k + j

    def b(j):
        return j - 1

    edges = []
    for i in range(1, k + 1):
        edges.append((u(i), b(i)))
        edges.append((u(i), b(i + 1)))
        # extra edge: only u_1 and u_k start at degree 2
        if 2 <= i <= k - 1:
            edges.append((u(i), b(i + 2)))

    edges.append((e(0), b(1)))
    for j in range(1, k + 2):
        edges.append((e(j), b(j)))

    core = [k + 1 + t for t in range(CORE_SIZE)]
    for j in range(0, k + 2):
        edges.extend((e(j), c) for c in core)
    return edges


def gen_worst_case(spec: WorstCaseSpec) -> BipartiteGraph:
    """ 生成 copies 个互不相交的链式实例, 再做一次随机置换

    Merging one degree-2 vertex at a time walks the growing boundary
    super-vertex once per merge, so its cost is quadratic in the chain
    length; a multi-vertex search recovers the chain in one pass.
    """
    spec.validate()
    n_left, n_right = spec.instance_sides
    base = np.asarray(_instance_edges(spec.k), dtype=np.int64)

    shifts = np.arange(spec.copies, dtype=np.int64)[:, None] * np.asarray([n_left, n_right], dtype=np.int64)
    edges = (base[None, :, :] + shifts[:, None, :]).reshape(-1, 2)

    graph = BipartiteGraph.from_edges(n_left * spec.copies, n_right * spec.copies, edges)
    return random_permute(graph, spec.seed)

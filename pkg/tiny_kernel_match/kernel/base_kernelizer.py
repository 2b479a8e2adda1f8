from abc import ABC, abstractmethod
from typing import Optional

from .buckets import Buckets
from .component_forest import ComponentForest
from .matching_tree import MatchingTree, MergeRecord
from .stats import KernelResult, KernelStats, KernelTrace, to_sides
from .working_sets import WorkingSets
from ..graph.bipartite_graph import BipartiteGraph
from ..matcher.matching import Matching
from ..store.merge_graph import MergeGraph
from ..utils.logger import logger


class BaseKernelizer(ABC):
    """ Karp-Sipser 核化基类

    Drives the bucket loop: drain degree-1 vertices with Rule 1, then take
    one degree-2 vertex, grow its mergeable set and merge the boundary into
    one survivor. Subclasses decide how the mergeable set is grown.
    """

    name = "base"

    def __init__(
        self,
        graph: BipartiteGraph,
        slack: float = 0.0,
        balanced: bool = False,
        trace: bool = False,
    ):
        self.source = graph
        self.g = MergeGraph.build_from_csr(graph, slack)
        self.balanced = balanced
        self.buckets = Buckets(self.g.n)
        self.sets = WorkingSets(self.g.n)
        self.tree = MatchingTree()
        self.stats = KernelStats()
        self.trace: Optional[KernelTrace] = KernelTrace() if trace else None
        self._mark = [0] * self.g.n
        self._mark_epoch = 0

    # ----------------------------------------------------------------- driver

    def run(self) -> KernelResult:
        g, buckets = self.g, self.buckets

        for v in range(g.n):
            self._rebucket(v)

        while True:
            u = buckets.pop(1)
            while u is not None:
                self._rule_one(u)
                u = buckets.pop(1)

            start = self._next_mergeable()
            if start is not None:
                self.grow_mergeable_set(start)
                self.merge_set()
                continue

            if not self.balanced or not buckets.swap(self._is_degree_two):
                break
            logger.debug(f"[{self.name}] round {buckets.round} starts with {len(buckets.b2)} vertices")

        return self._finish()

    def _is_degree_two(self, v: int) -> bool:
        return self.g.alive[v] and self.g.degree[v] == 2

    def _rebucket(self, v: int, from_merge: bool = False) -> None:
        g, buckets = self.g, self.buckets
        if not g.alive[v]:
            buckets.discard(v)
            return
        d = g.degree[v]
        if d == 0:
            buckets.discard(v)
            g.remove_vertex(v)
            self.stats.dropped += 1
        elif d == 1:
            buckets.push(v, 1)
        elif d == 2:
            if self.balanced and (from_merge or g.rnd[v] == buckets.round):
                buckets.push(v, 3)
            else:
                buckets.push(v, 2)
        else:
            buckets.discard(v)

    def _next_mergeable(self) -> Optional[int]:
        g, buckets = self.g, self.buckets
        while True:
            v = buckets.pop(2)
            if v is None:
                return None
            if not g.alive[v]:
                continue
            if g.degree[v] != 2:
                self._rebucket(v)
                continue
            if self.balanced and g.rnd[v] == buckets.round:
                buckets.push(v, 3)
                continue
            return v

    # ----------------------------------------------------------------- rule 1

    def _rule_one(self, u: int) -> None:
        """ 度为 1 的顶点与其唯一邻居匹配, 两者一起删除
        """
        g = self.g
        if not g.alive[u]:
            return
        if g.degree[u] != 1:
            self._rebucket(u)
            return

        v, u_o, v_o = g.iterate_neighbors(u)[0]
        self.tree.record_match((u_o, v_o))
        self.stats.r1_matches += 1

        touched = g.remove_vertex(v)
        g.remove_vertex(u)
        for t in touched:
            if t != u:
                self._rebucket(t)

    # ------------------------------------------------------------ rule 2 (MVM)

    def _start_search(self, start: int) -> None:
        """ V̂ = {start}, Ṽ = Γ(start); records start's two incident edges.
        """
        sets = self.sets
        sets.reset()
        sets.add_mergeable(start)
        (b0, s0, d0), (b1, s1, d1) = self.g.iterate_neighbors(start)
        sets.add_boundary(b0)
        sets.add_boundary(b1)
        self.tree.record_merge(MergeRecord(start, (s0, d0), (s1, d1), anchor=b0, joined=b1))

    @abstractmethod
    def grow_mergeable_set(self, start: int) -> None:
        """ Fill ``self.sets`` starting from the degree-2 vertex ``start``.
        """
        pass

    def merge_set(self) -> None:
        """ 删除 V̂, 把 Ṽ 合并到度数最大的边界顶点上, 外部顶点改指向幸存者
        """
        g, sets, buckets = self.g, self.sets, self.buckets
        if sets.early_exit:
            sets.mergeable.pop()
        mergeables = list(sets.mergeable)
        boundary = list(sets.boundary)

        if self.trace is not None:
            self.trace.merges.append((buckets.round, g.side(boundary[0]), tuple(boundary)))

        survivor = max(boundary, key=lambda b: (g.degree[b], -b))
        for u in mergeables:
            g.remove_vertex(u)
            buckets.discard(u)

        self._mark_epoch += 1
        epoch, mark = self._mark_epoch, self._mark
        adjacent = [t for t, _, _ in g.iterate_neighbors(survivor)]
        for t in adjacent:
            mark[t] = epoch

        absorbed = [b for b in boundary if b != survivor]
        segments = [(b, g.segment_cells(b)) for b in absorbed]
        g.connect_tables(survivor, absorbed)
        for b in absorbed:
            buckets.discard(b)

        # degrees first: an insert may compact the external and recount it
        for _, cells in segments:
            for x, _, _ in cells:
                g.decrement_degree(x)
        # an external linked to several absorbed tables gets one new cell
        for _, cells in segments:
            for x, b_o, x_o in cells:
                if mark[x] != epoch:
                    g.insert_external(x, survivor, (x_o, b_o), is_new_neighbor=True)
                    mark[x] = epoch
                    adjacent.append(x)

        if self.balanced:
            g.rnd[survivor] = buckets.round
            for t in adjacent:
                g.rnd[t] = buckets.round

        self.stats.count_merge(buckets.round, len(mergeables))

        self._rebucket(survivor, from_merge=True)
        for x in dict.fromkeys(t for _, cells in segments for t, _, _ in cells):
            self._rebucket(x, from_merge=True)

    # ----------------------------------------------------------------- result

    def _finish(self) -> KernelResult:
        g, stats = self.g, self.stats
        stats.rounds = self.buckets.round
        stats.edges_touched = g.cell_reads
        stats.kernel_n = g.live_count()
        stats.kernel_m = g.live_edge_count()

        forest = ComponentForest(g.n)
        for rec in self.tree.merge_records:
            forest.union(rec.anchor, rec.joined)
        groups = forest.groups()
        orig_of_super = {v: groups[forest.find(v)] for v in g.live_vertices()}

        partial = Matching.from_pairs(
            self.source.n_left,
            self.source.n_right,
            [to_sides(e, g.n_left) for e in self.tree.r1_edges],
        )

        logger.info(
            f"[{self.name}] kernel n={stats.kernel_n} m={stats.kernel_m}, "
            f"rule-1 {stats.r1_matches}, merges {stats.merge_ops} ({stats.merged_count} vertices), "
            f"rounds {stats.rounds}, cell reads {stats.edges_touched}"
        )
        return KernelResult(
            kernel=g,
            tree=self.tree,
            partial=partial,
            stats=stats,
            orig_of_super=orig_of_super,
            strategy=self.name,
            trace=self.trace,
        )

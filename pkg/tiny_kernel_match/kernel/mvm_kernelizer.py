from .base_kernelizer import BaseKernelizer
from .matching_tree import MergeRecord
from ..graph.bipartite_graph import BipartiteGraph


class MvmKernelizer(BaseKernelizer):
    """ 多顶点合并

    One search collects every vertex that becomes degree 2 once the
    boundary collapses: a neighbour of a boundary vertex is only inspected
    after it has been reached from ``degree - 1`` boundary vertices, so the
    tables of vertices that cannot join are never read. With ``balanced``,
    vertices stamped in the current round are skipped and deferred.

    ``indirect=False`` drops the hit-count filter: every neighbour reached
    from the boundary has its table walked and ``|Γ(v) - Ṽ|`` counted
    directly. Same kernel, more cell reads.
    """

    def __init__(
        self,
        graph: BipartiteGraph,
        slack: float = 0.0,
        balanced: bool = True,
        indirect: bool = True,
        trace: bool = False,
    ):
        super().__init__(graph, slack=slack, balanced=balanced, trace=trace)
        self.indirect = indirect
        if not indirect:
            self.name = "mvm-direct"
        else:
            self.name = "mvm-balanced" if balanced else "mvm-greedy"

    def grow_mergeable_set(self, start: int) -> None:
        g, sets = self.g, self.sets
        round_no = self.buckets.round
        self._start_search(start)

        i = 0
        while i < len(sets.boundary):
            bv = sets.boundary[i]
            i += 1
            for vh, _, _ in g.iterate_neighbors(bv):
                if sets.in_mergeable(vh):
                    continue
                hits = sets.hit(vh)
                if self.balanced and g.rnd[vh] == round_no:
                    continue
                if self.indirect and hits < g.degree[vh] - 1:
                    continue

                cells = g.iterate_neighbors(vh)
                outside = [c for c in cells if not sets.in_boundary(c[0])]
                if len(outside) > 1:
                    continue

                if self.trace is not None:
                    self.trace.additions.append((vh, [c[0] for c in cells], list(sets.boundary)))
                sets.add_mergeable(vh)
                if not outside:
                    # |Ṽ| == |V̂|: vh will end up with degree 1
                    sets.early_exit = True
                    return

                edge_a = next((s, d) for t, s, d in cells if t == bv)
                joined, o_src, o_dst = outside[0]
                sets.add_boundary(joined)
                self.tree.record_merge(
                    MergeRecord(vh, edge_a, (o_src, o_dst), anchor=sets.boundary[0], joined=joined)
                )

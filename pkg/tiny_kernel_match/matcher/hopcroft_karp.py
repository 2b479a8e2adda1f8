from collections import deque
from typing import List

from .matching import UNMATCHED, Matching
from ..graph.base_graph import BaseGraphView

INF = -2


class HopcroftKarp:
    """ 非递归 Hopcroft-Karp

    Each phase layers the left side by BFS from the free left vertices,
    stopping at the first layer that reaches a free right vertex, and then
    augments along vertex-disjoint shortest paths with an explicit-stack
    DFS. A left vertex that leads nowhere gets ``INF`` for the rest of the
    phase.
    """

    def __init__(self, view: BaseGraphView):
        self.n_left = view.n_left
        self.n_right = view.n_right
        self.adj: List[List[int]] = [view.left_neighbors(u) for u in range(view.n_left)]
        self.mate_left = [UNMATCHED] * self.n_left
        self.mate_right = [UNMATCHED] * self.n_right
        self.dist = [INF] * self.n_left
        # layer of the last left vertex on a shortest augmenting path
        self.limit = INF
        self.phases = 0

    def _layer(self) -> bool:
        dist, adj, mate_right = self.dist, self.adj, self.mate_right
        queue = deque()
        for u in range(self.n_left):
            if self.mate_left[u] == UNMATCHED:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF

        limit = INF
        while queue:
            u = queue.popleft()
            if limit != INF and dist[u] > limit:
                break
            for v in adj[u]:
                w = mate_right[v]
                if w == UNMATCHED:
                    limit = dist[u]
                elif dist[w] == INF and limit == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        self.limit = limit
        return limit != INF

    def _augment_from(self, root: int, it: List[int]) -> bool:
        dist, adj, limit = self.dist, self.adj, self.limit
        mate_left, mate_right = self.mate_left, self.mate_right
        stack = [root]
        while stack:
            u = stack[-1]
            if it[u] == len(adj[u]):
                dist[u] = INF
                stack.pop()
                continue

            v = adj[u][it[u]]
            it[u] += 1
            w = mate_right[v]
            if w == UNMATCHED:
                if dist[u] != limit:
                    continue
                # every vertex on the stack takes the edge it last explored
                for x in stack:
                    y = adj[x][it[x] - 1]
                    mate_left[x] = y
                    mate_right[y] = x
                return True
            if dist[u] < limit and dist[w] == dist[u] + 1:
                stack.append(w)
        return False

    def run(self) -> Matching:
        while self._layer():
            self.phases += 1
            it = [0] * self.n_left
            for u in range(self.n_left):
                if self.mate_left[u] == UNMATCHED and self.dist[u] == 0:
                    self._augment_from(u, it)
        return Matching(list(self.mate_left), list(self.mate_right))


def maximum_matching(view: BaseGraphView) -> Matching:
    return HopcroftKarp(view).run()

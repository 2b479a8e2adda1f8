import math
from typing import Iterable, List, Optional, Tuple

from .errors import SideMismatchError, StoreInvariantError, VertexStateError
from .records import EdgeCell, VertexRecord
from ..graph.base_graph import BaseGraphView
from ..graph.bipartite_graph import BipartiteGraph

TOMBSTONE = -1
NO_LINK = -1

# (target, orig_src, orig_dst)
CellTuple = Tuple[int, int, int]


class MergeGraph:
    """ 可合并边表存储

    Every vertex (left ``i`` -> ``i``, right ``j`` -> ``n_left + j``) owns one
    table ``[ptr_start, table_end)`` of a shared cell array; ``[ptr_start,
    ptr_end)`` holds its cells and the rest are gaps. Merging links whole
    tables into a chain through ``link_next``; ``link_last`` names the chain's
    tail and ``link_cur`` the first chained table that may still have a gap.

    A cell is live when its target is not ``TOMBSTONE`` and the target vertex
    is alive; cells pointing at removed vertices read as tombstones until a
    compaction rewrites them. ``cell_reads`` counts every cell looked at by a
    walk plus one read per table checked for a gap.
    """

    def __init__(self, n_left: int, n_right: int):
        n = n_left + n_right
        self.n_left = n_left
        self.n_right = n_right
        self.n = n

        self.ptr_start: List[int] = [0] * n
        self.ptr_end: List[int] = [0] * n
        self.table_end: List[int] = [0] * n
        self.link_next: List[int] = [NO_LINK] * n
        self.link_cur: List[int] = list(range(n))
        self.link_last: List[int] = list(range(n))
        self.degree: List[int] = [0] * n
        self.alive: List[bool] = [True] * n
        self.rnd: List[int] = [0] * n

        self.target: List[int] = []
        self.orig_src: List[int] = []
        self.orig_dst: List[int] = []

        self.cell_reads = 0
        self._seen: List[int] = [0] * n
        self._epoch = 0

    # ------------------------------------------------------------------ build

    @classmethod
    def build_from_csr(cls, graph: BipartiteGraph, slack: float = 0.0) -> "MergeGraph":
        """ 由压缩邻接表构建; 每张表分配 ceil(deg * (1 + slack)) 个槽位
        """
        if slack < 0:
            raise ValueError(f"slack must be >= 0, got {slack}")

        g = cls(graph.n_left, graph.n_right)
        offset = graph.n_left
        sides = (
            (0, graph.n_left, graph.left_indptr.tolist(), graph.left_indices.tolist(), offset),
            (offset, graph.n_right, graph.right_indptr.tolist(), graph.right_indices.tolist(), 0),
        )

        pos = 0
        for base, size, indptr, indices, shift in sides:
            for x in range(size):
                v = base + x
                deg = indptr[x + 1] - indptr[x]
                cap = math.ceil(deg * (1.0 + slack))

                g.ptr_start[v] = pos
                g.ptr_end[v] = pos + deg
                g.table_end[v] = pos + cap
                g.degree[v] = deg

                for t in indices[indptr[x]:indptr[x + 1]]:
                    g.target.append(t + shift)
                    g.orig_src.append(v)
                    g.orig_dst.append(t + shift)
                gaps = cap - deg
                g.target.extend([TOMBSTONE] * gaps)
                g.orig_src.extend([TOMBSTONE] * gaps)
                g.orig_dst.extend([TOMBSTONE] * gaps)
                pos += cap

        return g

    # ---------------------------------------------------------------- queries

    def is_left(self, v: int) -> bool:
        return v < self.n_left

    def side(self, v: int) -> str:
        return "left" if v < self.n_left else "right"

    def to_local(self, v: int) -> int:
        return v if v < self.n_left else v - self.n_left

    def record(self, v: int) -> VertexRecord:
        return VertexRecord(
            vertex=v,
            ptr_start=self.ptr_start[v],
            ptr_end=self.ptr_end[v],
            table_end=self.table_end[v],
            link_next=self.link_next[v],
            link_cur=self.link_cur[v],
            link_last=self.link_last[v],
            degree=self.degree[v],
            alive=self.alive[v],
            rnd=self.rnd[v],
        )

    def cell(self, i: int) -> EdgeCell:
        return EdgeCell(self.target[i], self.orig_src[i], self.orig_dst[i])

    def live_vertices(self) -> List[int]:
        return [v for v in range(self.n) if self.alive[v]]

    def live_count(self, side: Optional[str] = None) -> int:
        lo, hi = {
            None: (0, self.n),
            "left": (0, self.n_left),
            "right": (self.n_left, self.n),
        }[side]
        return sum(1 for v in range(lo, hi) if self.alive[v])

    def live_edge_count(self) -> int:
        return sum(self.degree[v] for v in range(self.n_left) if self.alive[v])

    def chain(self, v: int) -> List[int]:
        """ Table owners along ``v``'s link chain, ``v`` first.
        """
        out = []
        b = v
        while b != NO_LINK:
            out.append(b)
            b = self.link_next[b]
        return out

    def _next_epoch(self) -> int:
        self._epoch += 1
        return self._epoch

    def _require_alive(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise VertexStateError(f"vertex {v} out of range [0, {self.n})")
        if not self.alive[v]:
            raise VertexStateError(f"vertex {v} is not alive")

    def _walk(self, first: int, stop: int) -> List[CellTuple]:
        """ Distinct live cells of the tables ``first .. stop`` (inclusive).
        """
        epoch = self._next_epoch()
        seen, alive, target = self._seen, self.alive, self.target
        out: List[CellTuple] = []
        reads = 0
        b = first
        while b != NO_LINK:
            lo, hi = self.ptr_start[b], self.ptr_end[b]
            reads += hi - lo
            for i in range(lo, hi):
                t = target[i]
                if t == TOMBSTONE or not alive[t] or seen[t] == epoch:
                    continue
                seen[t] = epoch
                out.append((t, self.orig_src[i], self.orig_dst[i]))
            if b == stop:
                break
            b = self.link_next[b]
        self.cell_reads += reads
        return out

    def iterate_neighbors(self, v: int) -> List[CellTuple]:
        """ 遍历 v 的链表, 返回每个存活邻居一次 (链顺序, 然后槽位顺序)
        """
        self._require_alive(v)
        return self._walk(v, NO_LINK)

    def neighbors(self, v: int) -> List[int]:
        return [t for t, _, _ in self.iterate_neighbors(v)]

    def segment_cells(self, b: int) -> List[CellTuple]:
        """ Distinct live cells of ``b``'s own segment ``b .. link_last[b]``.

        Works on absorbed tables too; ``b`` itself need not be alive.
        """
        return self._walk(b, self.link_last[b])

    def cell_orig(self, u: int, v: int) -> Tuple[int, int]:
        """ Original endpoints of the first live cell in ``u``'s chain targeting ``v``.
        """
        self._require_alive(u)
        self._require_alive(v)
        b = u
        while b != NO_LINK:
            for i in range(self.ptr_start[b], self.ptr_end[b]):
                self.cell_reads += 1
                if self.target[i] == v:
                    return self.orig_src[i], self.orig_dst[i]
            b = self.link_next[b]
        raise VertexStateError(f"no live cell from {u} to {v}")

    # -------------------------------------------------------------- mutations

    def remove_vertex(self, v: int) -> List[int]:
        """ 删除顶点 v, 每个存活邻居度数减一, 返回这些邻居

        Cells of the neighbours that target ``v`` are not rewritten; they
        read as tombstones from now on.
        """
        cells = self.iterate_neighbors(v)
        self.alive[v] = False
        self.degree[v] = 0
        touched = []
        for t, _, _ in cells:
            self.degree[t] -= 1
            touched.append(t)
        return touched

    def decrement_degree(self, v: int) -> None:
        self.degree[v] -= 1

    def connect_tables(self, kept: int, absorbed: Iterable[int]) -> None:
        """ 把 absorbed 中每个顶点的链表接到 kept 链尾

        Absorbed vertices die as standalone vertices; their cells stay
        reachable through ``kept``. ``kept``'s degree is recomputed over the
        whole chain and dead or duplicate cells at the tail of every junction
        table are trimmed off.
        """
        absorbed = list(dict.fromkeys(absorbed))
        if not absorbed:
            return

        self._require_alive(kept)
        if kept in absorbed:
            raise SideMismatchError(f"kept vertex {kept} is also absorbed")
        kept_left = self.is_left(kept)
        for b in absorbed:
            self._require_alive(b)
            if self.is_left(b) != kept_left:
                raise SideMismatchError(f"vertices {kept} and {b} are on different sides")

        old_tail = self.link_last[kept]
        old_cur = self.link_cur[kept]
        junctions = [old_tail]
        for b in absorbed:
            self.link_next[self.link_last[kept]] = b
            self.link_last[kept] = self.link_last[b]
            junctions.append(self.link_last[b])
            self.alive[b] = False
            self.degree[b] = 0

        self.degree[kept] = self._recount_and_trim(kept, set(junctions))

        if old_cur == NO_LINK:
            has_gap = self.ptr_end[old_tail] < self.table_end[old_tail]
            self.link_cur[kept] = old_tail if has_gap else absorbed[0]

    def _recount_and_trim(self, v: int, junctions: set) -> int:
        epoch = self._next_epoch()
        seen, alive, target = self._seen, self.alive, self.target
        count = 0
        b = v
        while b != NO_LINK:
            lo, hi = self.ptr_start[b], self.ptr_end[b]
            self.cell_reads += hi - lo
            # highest slot holding the first occurrence of a live target
            keep_to = lo
            for i in range(lo, hi):
                t = target[i]
                if t == TOMBSTONE or not alive[t] or seen[t] == epoch:
                    continue
                seen[t] = epoch
                count += 1
                keep_to = i + 1
            if b in junctions and keep_to < hi:
                for i in range(keep_to, hi):
                    target[i] = TOMBSTONE
                self.ptr_end[b] = keep_to
            b = self.link_next[b]
        return count

    def _find_gap(self, v: int) -> int:
        b = self.link_cur[v]
        while b != NO_LINK:
            self.cell_reads += 1
            if self.ptr_end[b] < self.table_end[b]:
                slot = self.ptr_end[b]
                self.ptr_end[b] += 1
                self.link_cur[v] = b
                return slot
            b = self.link_next[b]
        self.link_cur[v] = NO_LINK
        return -1

    def _grow_tail(self, v: int) -> int:
        """ Relocate ``v``'s tail table to the end of the cell array with doubled capacity.
        """
        tail = self.link_last[v]
        lo, hi = self.ptr_start[tail], self.ptr_end[tail]
        cap = max(2 * (self.table_end[tail] - lo), 2)
        base = len(self.target)

        self.target.extend([TOMBSTONE] * cap)
        self.orig_src.extend([TOMBSTONE] * cap)
        self.orig_dst.extend([TOMBSTONE] * cap)
        for k, i in enumerate(range(lo, hi)):
            self.target[base + k] = self.target[i]
            self.orig_src[base + k] = self.orig_src[i]
            self.orig_dst[base + k] = self.orig_dst[i]
            self.target[i] = TOMBSTONE
        self.cell_reads += hi - lo

        self.ptr_start[tail] = base
        self.ptr_end[tail] = base + (hi - lo) + 1
        self.table_end[tail] = base + cap
        self.link_cur[v] = tail
        return base + (hi - lo)

    def insert_external(
        self,
        v: int,
        new_target: int,
        orig: Tuple[int, int],
        is_new_neighbor: bool = True,
    ) -> None:
        """ 在 v 的链表中找空位写入指向 new_target 的单元

        The gap search starts at ``link_cur[v]``. When no chained table has a
        gap the chain is compacted and, if that frees nothing, the tail table
        is relocated with doubled capacity.

        The chain is not scanned for an existing cell to ``new_target``: the
        degree goes up by one unless the caller passes ``is_new_neighbor=False``.
        A duplicate inserted as new leaves ``degree[v]`` one too high until the
        next ``compact(v)``, which drops the duplicate and recounts.
        """
        self._require_alive(v)
        self._require_alive(new_target)
        if self.is_left(v) == self.is_left(new_target):
            raise SideMismatchError(f"vertices {v} and {new_target} are on the same side")

        slot = self._find_gap(v)
        if slot < 0:
            self.compact(v)
            slot = self._find_gap(v)
        if slot < 0:
            slot = self._grow_tail(v)

        self.target[slot] = new_target
        self.orig_src[slot], self.orig_dst[slot] = orig
        if is_new_neighbor:
            self.degree[v] += 1

    def compact(self, v: int) -> None:
        """ 压缩 v 链上所有表: 存活且不重复的单元前移, 其余变为空位
        """
        self._require_alive(v)
        epoch = self._next_epoch()
        seen, alive = self._seen, self.alive
        target, osrc, odst = self.target, self.orig_src, self.orig_dst
        count = 0
        b = v
        while b != NO_LINK:
            lo, hi = self.ptr_start[b], self.ptr_end[b]
            self.cell_reads += hi - lo
            w = lo
            for i in range(lo, hi):
                t = target[i]
                if t == TOMBSTONE or not alive[t] or seen[t] == epoch:
                    continue
                seen[t] = epoch
                if w != i:
                    target[w], osrc[w], odst[w] = t, osrc[i], odst[i]
                w += 1
            for i in range(w, hi):
                target[i] = TOMBSTONE
            count += w - lo
            self.ptr_end[b] = w
            b = self.link_next[b]
        self.degree[v] = count
        self.link_cur[v] = v

    # ------------------------------------------------------------------ debug

    def check_invariants(self) -> None:
        """ Full scan; does not touch ``cell_reads``.
        """
        saved = self.cell_reads
        try:
            self._check_invariants()
        finally:
            self.cell_reads = saved

    def _check_invariants(self) -> None:
        sums = [0, 0]
        nbrs = {}
        for v in range(self.n):
            if not self.alive[v]:
                continue
            visited = set()
            b = v
            tail = v
            while b != NO_LINK:
                if b in visited:
                    raise StoreInvariantError(f"chain of {v} revisits table {b}")
                visited.add(b)
                if not (self.ptr_start[b] <= self.ptr_end[b] <= self.table_end[b]):
                    raise StoreInvariantError(f"table {b} pointers out of order")
                tail = b
                b = self.link_next[b]
            if self.link_last[v] != tail:
                raise StoreInvariantError(f"link_last of {v} is {self.link_last[v]}, tail is {tail}")

            targets = self.neighbors(v)
            for t in targets:
                if self.is_left(t) == self.is_left(v):
                    raise StoreInvariantError(f"cell of {v} targets same-side vertex {t}")
            if len(targets) != self.degree[v]:
                raise StoreInvariantError(
                    f"degree of {v} is {self.degree[v]}, chain holds {len(targets)} live neighbours"
                )
            nbrs[v] = set(targets)
            sums[0 if self.is_left(v) else 1] += self.degree[v]

        for v, ts in nbrs.items():
            for t in ts:
                if v not in nbrs[t]:
                    raise StoreInvariantError(f"{v} sees {t} but not the other way round")
        if sums[0] != sums[1]:
            raise StoreInvariantError(f"left degree sum {sums[0]} != right degree sum {sums[1]}")

    def dump(self) -> str:
        """ One line per live vertex: ``v deg=d | owner[start:end/table_end] slot:target ...``.
        """
        lines = []
        for v in range(self.n):
            if not self.alive[v]:
                continue
            parts = [f"{v} deg={self.degree[v]}"]
            for b in self.chain(v):
                lo, hi, te = self.ptr_start[b], self.ptr_end[b], self.table_end[b]
                cells = " ".join(
                    f"{i}:{'x' if self.target[i] == TOMBSTONE else self.target[i]}" for i in range(lo, hi)
                )
                parts.append(f"{b}[{lo}:{hi}/{te}] {cells}".rstrip())
            lines.append(" | ".join(parts))
        return "\n".join(lines)

    def view(self) -> "MergeGraphView":
        return MergeGraphView(self)


class MergeGraphView(BaseGraphView):
    """ 只读视图: 活顶点的邻居, 死顶点没有邻居; 右侧 id 为侧内编号
    """

    def __init__(self, graph: MergeGraph):
        self.graph = graph
        self.n_left = graph.n_left
        self.n_right = graph.n_right

    def left_neighbors(self, u: int) -> List[int]:
        g = self.graph
        if not g.alive[u]:
            return []
        return [t - g.n_left for t, _, _ in g.iterate_neighbors(u)]


def build_from_csr(graph: BipartiteGraph, slack: float = 0.0) -> MergeGraph:
    return MergeGraph.build_from_csr(graph, slack)

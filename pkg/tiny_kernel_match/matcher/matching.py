from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

from ..graph.bipartite_graph import BipartiteGraph
from ..graph.errors import InvalidTokenError, MalformedHeaderError, NegativeIdError

UNMATCHED = -1


@dataclass
class Matching:
    """ 每个顶点的配对, 未匹配为 -1
    """

    mate_left: List[int]
    mate_right: List[int]

    @classmethod
    def empty(cls, n_left: int, n_right: int) -> "Matching":
        return cls([UNMATCHED] * n_left, [UNMATCHED] * n_right)

    @classmethod
    def from_pairs(cls, n_left: int, n_right: int, pairs: Iterable[Tuple[int, int]]) -> "Matching":
        """ Raises ValueError when a pair is out of range or reuses a vertex.
        """
        m = cls.empty(n_left, n_right)
        for u, v in pairs:
            m.add(u, v)
        return m

    @property
    def n_left(self) -> int:
        return len(self.mate_left)

    @property
    def n_right(self) -> int:
        return len(self.mate_right)

    @property
    def size(self) -> int:
        return sum(1 for v in self.mate_left if v != UNMATCHED)

    def add(self, u: int, v: int) -> None:
        if not (0 <= u < self.n_left and 0 <= v < self.n_right):
            raise ValueError(f"pair ({u}, {v}) out of range {self.n_left}x{self.n_right}")
        if self.mate_left[u] != UNMATCHED or self.mate_right[v] != UNMATCHED:
            raise ValueError(f"pair ({u}, {v}) reuses a matched vertex")
        self.mate_left[u] = v
        self.mate_right[v] = u

    def pairs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v in enumerate(self.mate_left) if v != UNMATCHED]


@dataclass
class VerifyReport:
    valid: bool
    size: int
    violations: List[str] = field(default_factory=list)


def verify_matching(graph: BipartiteGraph, matching: Matching) -> VerifyReport:
    """ 检查: 每对都是图中的边, 配对互相一致, 顶点不重复使用
    """
    violations: List[str] = []
    if matching.n_left != graph.n_left or matching.n_right != graph.n_right:
        violations.append(
            f"matching is over {matching.n_left}x{matching.n_right}, graph is {graph.n_left}x{graph.n_right}"
        )
        return VerifyReport(False, 0, violations)

    size = 0
    for u, v in enumerate(matching.mate_left):
        if v == UNMATCHED:
            continue
        if not (0 <= v < graph.n_right):
            violations.append(f"left {u} matched to out-of-range right {v}")
            continue
        size += 1
        if matching.mate_right[v] != u:
            violations.append(f"left {u} -> right {v}, but right {v} -> left {matching.mate_right[v]}")
        if not graph.has_edge(u, v):
            violations.append(f"({u}, {v}) is not an edge")

    for v, u in enumerate(matching.mate_right):
        if u == UNMATCHED:
            continue
        if not (0 <= u < graph.n_left) or matching.mate_left[u] != v:
            violations.append(f"right {v} -> left {u} has no matching left entry")

    return VerifyReport(not violations, size, violations)


def write_matching(matching: Matching, path: Union[str, Path]) -> None:
    """ ``p n_left n_right`` header, then one ``u v`` line per pair (0-based).
    """
    with open(path, "w", encoding="utf-8") as f:
        f.write(f"p {matching.n_left} {matching.n_right}\n")
        for u, v in matching.pairs():
            f.write(f"{u} {v}\n")


def load_matching(path: Union[str, Path], n_left: Optional[int] = None, n_right: Optional[int] = None) -> Matching:
    pairs: List[Tuple[int, int]] = []
    with open(path, "r", encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            header = tokens[0] == "p"
            if header:
                tokens = tokens[1:]
                if pairs:
                    raise MalformedHeaderError(path, line_no, "header must precede all pairs")
            if len(tokens) != 2:
                raise InvalidTokenError(path, line_no, f"expected 2 tokens, got {len(tokens)}")
            try:
                a, b = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise InvalidTokenError(path, line_no, f"non-numeric token in {line!r}") from None
            if a < 0 or b < 0:
                raise NegativeIdError(path, line_no, f"negative id in ({a}, {b})")
            if header:
                n_left = a if n_left is None else n_left
                n_right = b if n_right is None else n_right
            else:
                pairs.append((a, b))

    if n_left is None:
        n_left = max((u for u, _ in pairs), default=-1) + 1
    if n_right is None:
        n_right = max((v for _, v in pairs), default=-1) + 1
    return Matching.from_pairs(n_left, n_right, pairs)

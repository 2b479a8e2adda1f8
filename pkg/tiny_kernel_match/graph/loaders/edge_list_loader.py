from typing import List, Optional, Tuple

from .base_loader import BaseGraphLoader, PathLike
from ..bipartite_graph import BipartiteGraph
from ..errors import (
    IndexOutOfBoundsError,
    InvalidTokenError,
    MalformedHeaderError,
    NegativeIdError,
)

HEADER_TAG = "p"


class EdgeListLoader(BaseGraphLoader):
    """ 0-based 边表格式

    One ``u v`` pair per line (left id, right id). ``#`` lines are comments.
    An optional ``p <n_left> <n_right>`` line before the first edge fixes the
    side sizes; without it they are inferred as max id + 1.
    """

    def load(self, path: PathLike) -> BipartiteGraph:
        edges: List[Tuple[int, int]] = []
        sizes: Optional[Tuple[int, int]] = None

        with open(path, "r", encoding="utf-8") as f:
            for line_no, raw in enumerate(f, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                tokens = line.split()

                if tokens[0] == HEADER_TAG:
                    if sizes is not None or edges:
                        raise MalformedHeaderError(path, line_no, "header must precede all edges")
                    sizes = self._parse_pair(path, line_no, tokens[1:])
                    continue

                u, v = self._parse_pair(path, line_no, tokens)
                if sizes is not None and (u >= sizes[0] or v >= sizes[1]):
                    raise IndexOutOfBoundsError(
                        path, line_no, f"edge ({u}, {v}) outside {sizes[0]}x{sizes[1]}"
                    )
                edges.append((u, v))

        if sizes is None:
            sizes = (
                max((u for u, _ in edges), default=-1) + 1,
                max((v for _, v in edges), default=-1) + 1,
            )
        return BipartiteGraph.from_edges(sizes[0], sizes[1], edges)

    @staticmethod
    def _parse_pair(path: PathLike, line_no: int, tokens: List[str]) -> Tuple[int, int]:
        if len(tokens) != 2:
            raise InvalidTokenError(path, line_no, f"expected 2 tokens, got {len(tokens)}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise InvalidTokenError(path, line_no, f"non-numeric token in {' '.join(tokens)!r}") from None
        if a < 0 or b < 0:
            raise NegativeIdError(path, line_no, f"negative id in ({a}, {b})")
        return a, b

    def write(self, graph: BipartiteGraph, path: PathLike) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(f"{HEADER_TAG} {graph.n_left} {graph.n_right}\n")
            for u, v in graph.edges():
                f.write(f"{u} {v}\n")

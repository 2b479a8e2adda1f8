from typing import List, Tuple

from .base_loader import BaseGraphLoader, PathLike
from ..bipartite_graph import BipartiteGraph
from ..errors import (
    GraphParseError,
    IndexOutOfBoundsError,
    InvalidTokenError,
    MalformedHeaderError,
    TruncatedEntriesError,
)

BANNER = "%%matrixmarket"
FIELDS = {"pattern": 0, "real": 1, "integer": 1, "complex": 2}
SYMMETRIES = ("general", "symmetric", "skew-symmetric", "hermitian")


class MatrixMarketLoader(BaseGraphLoader):
    """ Matrix Market coordinate 格式 (1-based), 只使用非零模式

    Rows become left vertices, columns right vertices. Values are ignored;
    symmetric storage has its triangle mirrored.
    """

    def load(self, path: PathLike) -> BipartiteGraph:
        edges: List[Tuple[int, int]] = []
        rows = cols = nnz = -1
        field = symmetry = ""
        seen = 0
        line_no = 0

        with open(path, "r", encoding="utf-8") as f:
            for line_no, raw in enumerate(f, start=1):
                line = raw.strip()

                # 第一行: banner
                if line_no == 1:
                    field, symmetry = self._parse_banner(path, line)
                    continue
                if not line or line.startswith("%"):
                    continue

                tokens = line.split()
                # 尺寸行
                if rows < 0:
                    rows, cols, nnz = self._parse_size(path, line_no, tokens)
                    if symmetry != "general" and rows != cols:
                        raise MalformedHeaderError(path, line_no, f"{symmetry} matrix must be square")
                    continue

                if seen >= nnz:
                    raise GraphParseError(path, line_no, f"more than the declared {nnz} entries")
                if len(tokens) < 2 + FIELDS[field]:
                    raise InvalidTokenError(path, line_no, f"expected {2 + FIELDS[field]} tokens, got {len(tokens)}")
                try:
                    i, j = int(tokens[0]), int(tokens[1])
                except ValueError:
                    raise InvalidTokenError(path, line_no, f"non-integer index in {line!r}") from None
                if not (1 <= i <= rows and 1 <= j <= cols):
                    raise IndexOutOfBoundsError(path, line_no, f"entry ({i}, {j}) outside {rows}x{cols}")

                edges.append((i - 1, j - 1))
                if symmetry != "general" and i != j:
                    edges.append((j - 1, i - 1))
                seen += 1

        if line_no == 0:
            raise MalformedHeaderError(path, 1, "empty file")
        if rows < 0:
            raise TruncatedEntriesError(path, line_no + 1, "missing size line")
        if seen < nnz:
            raise TruncatedEntriesError(path, line_no + 1, f"expected {nnz} entries, found {seen}")

        return BipartiteGraph.from_edges(rows, cols, edges)

    @staticmethod
    def _parse_banner(path: PathLike, line: str) -> Tuple[str, str]:
        tokens = line.lower().split()
        if len(tokens) != 5 or tokens[0] != BANNER:
            raise MalformedHeaderError(path, 1, "missing %%MatrixMarket banner")
        _, obj, fmt, field, symmetry = tokens
        if obj != "matrix" or fmt != "coordinate":
            raise MalformedHeaderError(path, 1, f"unsupported layout '{obj} {fmt}'")
        if field not in FIELDS:
            raise MalformedHeaderError(path, 1, f"unsupported field '{field}'")
        if symmetry not in SYMMETRIES:
            raise MalformedHeaderError(path, 1, f"unsupported symmetry '{symmetry}'")
        return field, symmetry

    @staticmethod
    def _parse_size(path: PathLike, line_no: int, tokens: List[str]) -> Tuple[int, int, int]:
        if len(tokens) != 3:
            raise MalformedHeaderError(path, line_no, "size line must be 'rows cols nnz'")
        try:
            rows, cols, nnz = (int(t) for t in tokens)
        except ValueError:
            raise MalformedHeaderError(path, line_no, "non-integer size line") from None
        if min(rows, cols, nnz) < 0:
            raise MalformedHeaderError(path, line_no, "negative size")
        return rows, cols, nnz

    def write(self, graph: BipartiteGraph, path: PathLike) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write("%%MatrixMarket matrix coordinate pattern general\n")
            f.write(f"{graph.n_left} {graph.n_right} {graph.m}\n")
            for u, v in graph.edges():
                f.write(f"{u + 1} {v + 1}\n")

import hashlib
from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union

import numpy as np

from .base_graph import BaseGraphView
from .errors import GraphInvariantError, VertexRangeError

EdgeInput = Union[np.ndarray, Iterable[Tuple[int, int]]]


def _as_edge_array(edges: EdgeInput) -> np.ndarray:
    if not isinstance(edges, np.ndarray):
        edges = list(edges)
    arr = np.asarray(edges, dtype=np.int64)
    if arr.size == 0:
        return arr.reshape(0, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"edges must be pairs, got shape {arr.shape}")
    return arr


def _indptr(owners: np.ndarray, size: int) -> np.ndarray:
    indptr = np.zeros(size + 1, dtype=np.int64)
    if size:
        np.cumsum(np.bincount(owners, minlength=size), out=indptr[1:])
    return indptr


@dataclass(frozen=True, eq=False)
class BipartiteGraph(BaseGraphView):
    """ 不可变二部图, 左右两侧各存一份压缩邻接表

    Left vertices are ``0 .. n_left - 1``, right vertices ``0 .. n_right - 1``.
    Adjacency lists are sorted by target id and free of duplicates.
    """

    n_left: int
    n_right: int
    left_indptr: np.ndarray
    left_indices: np.ndarray
    right_indptr: np.ndarray
    right_indices: np.ndarray

    @classmethod
    def from_edges(cls, n_left: int, n_right: int, edges: EdgeInput) -> "BipartiteGraph":
        """ Build a graph from (left, right) pairs; repeated pairs collapse.
        """
        if n_left < 0 or n_right < 0:
            raise VertexRangeError(f"negative side size ({n_left}, {n_right})")

        arr = _as_edge_array(edges)
        if len(arr):
            u, v = arr[:, 0], arr[:, 1]
            if u.min() < 0 or u.max() >= n_left:
                raise VertexRangeError(f"left id out of range [0, {n_left})")
            if v.min() < 0 or v.max() >= n_right:
                raise VertexRangeError(f"right id out of range [0, {n_right})")
            keys = np.unique(u * n_right + v)
            u, v = keys // n_right, keys % n_right
        else:
            u = v = np.empty(0, dtype=np.int64)

        # keys are sorted by (u, v); the right view needs (v, u)
        order = np.lexsort((u, v))
        return cls(
            n_left=int(n_left),
            n_right=int(n_right),
            left_indptr=_indptr(u, n_left),
            left_indices=v.astype(np.int64),
            right_indptr=_indptr(v, n_right),
            right_indices=u[order].astype(np.int64),
        )

    @property
    def m(self) -> int:
        return int(len(self.left_indices))

    @property
    def n(self) -> int:
        return self.n_left + self.n_right

    def degree_left(self, u: int) -> int:
        return int(self.left_indptr[u + 1] - self.left_indptr[u])

    def degree_right(self, v: int) -> int:
        return int(self.right_indptr[v + 1] - self.right_indptr[v])

    def left_degrees(self) -> np.ndarray:
        return np.diff(self.left_indptr)

    def right_degrees(self) -> np.ndarray:
        return np.diff(self.right_indptr)

    def left_neighbors(self, u: int) -> List[int]:
        return self.left_indices[self.left_indptr[u]:self.left_indptr[u + 1]].tolist()

    def right_neighbors(self, v: int) -> List[int]:
        return self.right_indices[self.right_indptr[v]:self.right_indptr[v + 1]].tolist()

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n_left and 0 <= v < self.n_right):
            return False
        row = self.left_indices[self.left_indptr[u]:self.left_indptr[u + 1]]
        pos = int(np.searchsorted(row, v))
        return pos < len(row) and int(row[pos]) == v

    def edge_array(self) -> np.ndarray:
        """ (m, 2) array of (left, right) pairs in sorted order.
        """
        owners = np.repeat(np.arange(self.n_left, dtype=np.int64), self.left_degrees())
        return np.stack([owners, self.left_indices], axis=1) if self.m else np.empty((0, 2), np.int64)

    def edges(self) -> List[Tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edge_array()]

    def validate(self) -> None:
        """ Full scan of the representation invariants.
        """
        for name, indptr, indices, size, bound in (
            ("left", self.left_indptr, self.left_indices, self.n_left, self.n_right),
            ("right", self.right_indptr, self.right_indices, self.n_right, self.n_left),
        ):
            if len(indptr) != size + 1 or indptr[0] != 0 or indptr[-1] != len(indices):
                raise GraphInvariantError(f"{name} offsets do not cover the target array")
            if np.any(np.diff(indptr) < 0):
                raise GraphInvariantError(f"{name} offsets are not monotone")
            if len(indices) and (indices.min() < 0 or indices.max() >= bound):
                raise GraphInvariantError(f"{name} target out of range")
            for x in range(size):
                row = indices[indptr[x]:indptr[x + 1]]
                if len(row) > 1 and np.any(np.diff(row) <= 0):
                    raise GraphInvariantError(f"{name} list of {x} is unsorted or has duplicates")

        if len(self.left_indices) != len(self.right_indices):
            raise GraphInvariantError("left and right views disagree on m")

        mirror = BipartiteGraph.from_edges(self.n_left, self.n_right, self.edge_array())
        if not np.array_equal(mirror.right_indptr, self.right_indptr) or not np.array_equal(
            mirror.right_indices, self.right_indices
        ):
            raise GraphInvariantError("right view is not the mirror of the left view")

    def fingerprint(self) -> str:
        """ sha256 over sizes and adjacency arrays.
        """
        digest = hashlib.sha256()
        digest.update(np.asarray([self.n_left, self.n_right], dtype=np.int64).tobytes())
        for arr in (self.left_indptr, self.left_indices, self.right_indptr, self.right_indices):
            digest.update(np.ascontiguousarray(arr, dtype=np.int64).tobytes())
        return digest.hexdigest()

    def same_as(self, other: "BipartiteGraph") -> bool:
        return self.fingerprint() == other.fingerprint()

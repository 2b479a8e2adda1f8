from .errors import VertexStateError, SideMismatchError, StoreInvariantError
from .records import VertexRecord, EdgeCell
from .merge_graph import MergeGraph, MergeGraphView, build_from_csr, TOMBSTONE, NO_LINK

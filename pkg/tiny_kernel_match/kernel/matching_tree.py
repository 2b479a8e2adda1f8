from dataclasses import dataclass, field
from typing import List, Tuple

Edge = Tuple[int, int]


@dataclass(frozen=True)
class MergeRecord:
    """ 一个被合并的顶点 û

    ``edge_a`` leads from ``merged`` into the super-vertex containing
    ``anchor``; ``edge_b`` into the one named by ``joined``. Replaying
    ``union(anchor, joined)`` in record order rebuilds the original members
    of every super-vertex. Ids are unified vertex ids.
    """

    merged: int
    edge_a: Edge
    edge_b: Edge
    anchor: int
    joined: int


@dataclass
class MatchingTree:
    """ Rule 1 匹配边 + 后进先出的合并记录
    """

    r1_edges: List[Edge] = field(default_factory=list)
    merge_records: List[MergeRecord] = field(default_factory=list)

    def record_match(self, edge: Edge) -> None:
        self.r1_edges.append(edge)

    def record_merge(self, record: MergeRecord) -> None:
        self.merge_records.append(record)

    def __len__(self) -> int:
        return len(self.merge_records)

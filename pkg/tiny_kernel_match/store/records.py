from dataclasses import dataclass


@dataclass(frozen=True)
class VertexRecord:
    """ 顶点记录快照: 五个指针 + 度数 / 存活 / 轮次
    """

    vertex: int
    ptr_start: int
    ptr_end: int
    table_end: int
    link_next: int
    link_cur: int
    link_last: int
    degree: int
    alive: bool
    rnd: int


@dataclass(frozen=True)
class EdgeCell:
    """ 边单元快照, target 为 TOMBSTONE 时表示已删除
    """

    target: int
    orig_src: int
    orig_dst: int

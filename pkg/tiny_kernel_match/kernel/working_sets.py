from typing import List


class WorkingSets:
    """ 当前搜索的可合并集合 V̂ 与边界集合 Ṽ

    Membership and hit counters are epoch-stamped, so a new search costs
    O(1) to reset; a hit counter from an older epoch reads as zero.
    """

    def __init__(self, n: int):
        self.mergeable: List[int] = []
        self.boundary: List[int] = []
        self.early_exit = False
        self.search_epoch = 0
        self._in_mergeable = [0] * n
        self._in_boundary = [0] * n
        self._hits = [0] * n
        self._hit_epoch = [0] * n

    def reset(self) -> None:
        self.search_epoch += 1
        self.mergeable = []
        self.boundary = []
        self.early_exit = False

    def add_mergeable(self, v: int) -> None:
        self._in_mergeable[v] = self.search_epoch
        self.mergeable.append(v)

    def add_boundary(self, v: int) -> None:
        self._in_boundary[v] = self.search_epoch
        self.boundary.append(v)

    def in_mergeable(self, v: int) -> bool:
        return self._in_mergeable[v] == self.search_epoch

    def in_boundary(self, v: int) -> bool:
        return self._in_boundary[v] == self.search_epoch

    def hit(self, v: int) -> int:
        """ Increment and return ``v``'s access count in the current search.
        """
        if self._hit_epoch[v] != self.search_epoch:
            self._hit_epoch[v] = self.search_epoch
            self._hits[v] = 0
        self._hits[v] += 1
        return self._hits[v]

    def hits(self, v: int) -> int:
        return self._hits[v] if self._hit_epoch[v] == self.search_epoch else 0

from collections import deque
from typing import Callable, Deque, Optional

NONE = 0


class Buckets:
    """ 三个桶: b1 度为 1, b2 本轮可处理的度 2, b3 推迟到下一轮的度 2

    ``where[v]`` names the bucket ``v`` currently belongs to (0 for none).
    Queue entries whose bucket no longer matches ``where`` are stale and
    skipped on pop.
    """

    def __init__(self, n: int):
        self.b1: Deque[int] = deque()
        self.b2: Deque[int] = deque()
        self.b3: Deque[int] = deque()
        self.where = [NONE] * n
        self.round = 1

    def _queue(self, k: int) -> Deque[int]:
        return (self.b1, self.b2, self.b3)[k - 1]

    def push(self, v: int, k: int) -> None:
        if self.where[v] == k:
            return
        self.where[v] = k
        self._queue(k).append(v)

    def discard(self, v: int) -> None:
        self.where[v] = NONE

    def pop(self, k: int) -> Optional[int]:
        """ Next non-stale entry of bucket ``k``, or None.
        """
        q = self._queue(k)
        while q:
            v = q.popleft()
            if self.where[v] == k:
                self.where[v] = NONE
                return v
        return None

    def swap(self, is_valid: Callable[[int], bool]) -> bool:
        """ b3 becomes b2 and the round advances.

        Stale or no-longer-valid entries are dropped first; when nothing
        valid is left the round stays put and False is returned.
        """
        moved = deque(v for v in self.b3 if self.where[v] == 3 and is_valid(v))
        for v in self.b3:
            if self.where[v] == 3:
                self.where[v] = NONE
        self.b3 = deque()
        if not moved:
            return False

        for v in moved:
            self.where[v] = 2
        self.b2, self.round = moved, self.round + 1
        return True

    def empty(self) -> bool:
        return not (self.b1 or self.b2 or self.b3)

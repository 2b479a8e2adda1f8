from typing import List, Tuple


class ComponentForest:
    """ 可撤销并查集: 按大小合并, 不做路径压缩, 后进先出撤销

    Each node also carries the number of marked leaves in its subtree, so
    ``count(find(x))`` tells how many members of ``x``'s set are marked.
    """

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.marked = [0] * n
        self._history: List[Tuple[int, int]] = []

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self._history.append((-1, -1))
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.marked[ra] += self.marked[rb]
        self._history.append((ra, rb))
        return True

    def undo(self) -> None:
        """ Revert the most recent union.
        """
        ra, rb = self._history.pop()
        if ra < 0:
            return
        self.parent[rb] = rb
        self.size[ra] -= self.size[rb]
        self.marked[ra] -= self.marked[rb]

    def mark(self, x: int) -> None:
        while True:
            self.marked[x] += 1
            if self.parent[x] == x:
                return
            x = self.parent[x]

    def count(self, x: int) -> int:
        return self.marked[self.find(x)]

    def groups(self) -> dict:
        out: dict = {}
        for x in range(len(self.parent)):
            out.setdefault(self.find(x), []).append(x)
        return out

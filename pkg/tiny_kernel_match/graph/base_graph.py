from abc import ABC, abstractmethod
from typing import List


class BaseGraphView(ABC):
    """ 二部图只读视图基类

    Implementations expose ``n_left`` and ``n_right`` attributes; right ids
    returned by ``left_neighbors`` are side-local (0 .. n_right - 1).
    """

    n_left: int
    n_right: int

    @abstractmethod
    def left_neighbors(self, u: int) -> List[int]:
        """ Right-side neighbours of left vertex ``u`` in traversal order.
        """
        pass

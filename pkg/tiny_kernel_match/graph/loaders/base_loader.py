from abc import ABC, abstractmethod
from pathlib import Path
from typing import Union

from ..bipartite_graph import BipartiteGraph

PathLike = Union[str, Path]


class BaseGraphLoader(ABC):
    """ 图文件加载器基类
    """

    @abstractmethod
    def load(self, path: PathLike) -> BipartiteGraph:
        """ 读取文件并返回二部图
        """
        pass

    @abstractmethod
    def write(self, graph: BipartiteGraph, path: PathLike) -> None:
        """ 将二部图写回同一格式
        """
        pass

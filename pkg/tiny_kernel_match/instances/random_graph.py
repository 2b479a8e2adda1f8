import numpy as np

from .errors import GeneratorSpecError
from ..graph.bipartite_graph import BipartiteGraph
from ..utils.rng import make_generator


def gen_random_bipartite(n_left: int, n_right: int, m: int, seed: int) -> BipartiteGraph:
    """ m 条互不相同的均匀随机边
    """
    if n_left < 0 or n_right < 0:
        raise GeneratorSpecError(f"negative side size ({n_left}, {n_right})")
    total = n_left * n_right
    if not 0 <= m <= total:
        raise GeneratorSpecError(f"m={m} outside [0, {total}] for {n_left}x{n_right}")
    if m == 0:
        return BipartiteGraph.from_edges(n_left, n_right, [])

    keys = make_generator(seed).choice(total, size=m, replace=False)
    edges = np.stack([keys // n_right, keys % n_right], axis=1)
    return BipartiteGraph.from_edges(n_left, n_right, edges)

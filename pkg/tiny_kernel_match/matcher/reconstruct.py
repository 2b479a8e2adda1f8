from typing import TYPE_CHECKING, List, Tuple

from .errors import ReconstructionError
from .matching import Matching
from ..kernel.component_forest import ComponentForest

if TYPE_CHECKING:
    from ..kernel.stats import KernelResult


def reconstruct(kernel_matching: Matching, result: "KernelResult") -> Matching:
    """ 由核上的最大匹配恢复原图最大匹配

    Kernel pairs map to the original endpoints stored in their live cells,
    Rule 1 pairs are added as recorded, then merge records are unwound last
    in, first out. For each record the super-vertex split it created is
    undone; if the part that held ``anchor`` already has a matched member the
    merged vertex takes ``edge_b``, otherwise ``edge_a``.
    """
    g = result.kernel
    forest = ComponentForest(g.n)
    for rec in result.tree.merge_records:
        forest.union(rec.anchor, rec.joined)

    taken: List[Tuple[int, int]] = []

    def take(edge: Tuple[int, int]) -> None:
        forest.mark(edge[0])
        forest.mark(edge[1])
        taken.append(edge)

    for u, v in kernel_matching.pairs():
        take(g.cell_orig(u, g.n_left + v))
    for edge in result.tree.r1_edges:
        take(edge)

    for rec in reversed(result.tree.merge_records):
        forest.undo()
        a_busy = forest.count(rec.anchor) > 0
        b_busy = forest.count(rec.joined) > 0
        if a_busy and b_busy:
            raise ReconstructionError(
                f"both sides of the merge record for vertex {rec.merged} are already matched"
            )
        take(rec.edge_b if a_busy else rec.edge_a)

    pairs = []
    for a, b in taken:
        pairs.append((a, b - g.n_left) if a < g.n_left else (b, a - g.n_left))
    return Matching.from_pairs(g.n_left, g.n_right, pairs)

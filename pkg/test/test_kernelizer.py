import sys
sys.path.append(".")

import sys
import os
myPath = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, myPath + '/../')

import math
import unittest
from collections import defaultdict

from tiny_kernel_match.graph import BipartiteGraph
from tiny_kernel_match.instances import WorstCaseSpec, gen_random_bipartite, gen_worst_case
from tiny_kernel_match.kernel import (
    KasiKernelizer,
    KernelServices,
    KernelStrategyType,
    MvmKernelizer,
    baseline_kasi,
    kernelize,
)
from tiny_kernel_match.utils.rng import make_generator

STRATEGIES = [
    KernelStrategyType.MVM_BALANCED.value,
    KernelStrategyType.MVM_GREEDY.value,
    KernelStrategyType.KASI_BASELINE.value,
]
EDGE_TOUCH_C = 32


def cycle4():
    return BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])


def complete33():
    return BipartiteGraph.from_edges(3, 3, [(i, j) for i in range(3) for j in range(3)])


def chain_graph():
    """ u0 u1 u2 (left 0..2) chained through v0..v3 (right 0..3)

    Each v_j also sees an external x_j (left 3..6), and the externals are
    held at degree 4 by a core c0..c2 (right 4..6).
    """
    edges = []
    for i in range(3):
        edges += [(i, i), (i, i + 1)]
    for j in range(4):
        edges.append((3 + j, j))
        edges += [(3 + j, c) for c in (4, 5, 6)]
    return BipartiteGraph.from_edges(7, 7, edges)


def wide_boundary_graph():
    """ u0 ~ v0, v1; each boundary reaches four externals held at degree 4.
    """
    edges = [(0, 0), (0, 1)]
    for x in range(1, 9):
        edges.append((x, 0 if x <= 4 else 1))
        edges += [(x, c) for c in (2, 3, 4)]
    return BipartiteGraph.from_edges(9, 5, edges)


def merge_example():
    """ left a=0 d=1 e=2 f=3 g=4, right b=5 c=6
    """
    return BipartiteGraph.from_edges(5, 2, [(0, 0), (0, 1), (1, 0), (2, 0), (2, 1), (3, 1), (4, 1)])


def random_suite(count, seed):
    rng = make_generator(seed)
    for i in range(count):
        n_left = int(rng.integers(1, 41))
        n_right = int(rng.integers(1, 41))
        m = int(rng.integers(0, min(n_left * n_right, 2 * (n_left + n_right)) + 1))
        yield gen_random_bipartite(n_left, n_right, m, seed=seed * 100_000 + i)


def log2_ceil(n):
    return max(1, math.ceil(math.log2(max(n, 2))))


class TestSmallGraphs(unittest.TestCase):

    def test_single_edge(self):
        for strategy in STRATEGIES:
            result = KernelServices(strategy).run(BipartiteGraph.from_edges(1, 1, [(0, 0)]))
            self.assertEqual(result.stats.r1_matches, 1)
            self.assertEqual(result.stats.kernel_n, 0)
            self.assertEqual(result.tree.r1_edges, [(0, 1)])
            self.assertEqual(result.partial.pairs(), [(0, 0)])

    def test_star(self):
        result = kernelize(BipartiteGraph.from_edges(1, 3, [(0, 0), (0, 1), (0, 2)]))
        self.assertEqual(result.stats.r1_matches, 1)
        self.assertEqual(result.stats.dropped, 2)
        self.assertEqual(result.stats.kernel_n, 0)
        self.assertEqual(result.partial.size, 1)

    def test_cycle4(self):
        result = kernelize(cycle4(), "balanced", trace=True)
        stats = result.stats
        self.assertEqual((stats.merge_ops, stats.merged_count, stats.r1_matches), (1, 1, 1))
        self.assertEqual(stats.kernel_n, 0)
        self.assertEqual(stats.rounds, 1)
        self.assertEqual(stats.per_round_merge_ops, [1])
        self.assertEqual(len(result.tree), 1)
        self.assertEqual(len(result.tree.r1_edges), 1)

        # u1 joins with both neighbours already on the boundary, then leaves again
        self.assertEqual(result.trace.additions, [(1, [2, 3], [2, 3])])
        self.assertEqual(result.trace.merges, [(1, "right", (2, 3))])

    def test_cycle4_baseline(self):
        stats = baseline_kasi(cycle4()).stats
        self.assertEqual((stats.merge_ops, stats.merged_count, stats.r1_matches), (1, 1, 1))
        self.assertEqual(stats.kernel_n, 0)

    def test_complete33_is_its_own_kernel(self):
        for strategy in STRATEGIES:
            result = KernelServices(strategy).run(complete33())
            self.assertEqual((result.stats.kernel_n, result.stats.kernel_m), (6, 9))
            self.assertEqual(result.stats.merge_ops, 0)
            self.assertEqual(result.stats.edges_touched, 0)
            self.assertTrue(result.kernel_graph().same_as(complete33()))

    def test_empty_graph(self):
        result = kernelize(BipartiteGraph.from_edges(2, 3, []))
        self.assertEqual(result.stats.dropped, 5)
        self.assertEqual(result.stats.kernel_n, 0)

    def test_strategy_names(self):
        self.assertEqual(kernelize(cycle4(), "greedy").strategy, "mvm-greedy")
        self.assertEqual(kernelize(cycle4(), "mvm-balanced").strategy, "mvm-balanced")
        self.assertEqual(kernelize(cycle4(), "mvm-direct").strategy, "mvm-direct")
        self.assertEqual(baseline_kasi(cycle4()).strategy, "kasi-baseline")
        self.assertIsNone(KernelServices("none").run(cycle4()))
        self.assertRaises(ValueError, kernelize, cycle4(), "none")
        self.assertRaises(ValueError, KernelServices, "fastest")


class TestMergeableSearch(unittest.TestCase):

    def test_chain_found_in_one_search(self):
        k = MvmKernelizer(chain_graph())
        k.grow_mergeable_set(0)
        self.assertEqual(k.sets.mergeable, [0, 1, 2])
        self.assertEqual(k.sets.boundary, [7, 8, 9, 10])
        self.assertFalse(k.sets.early_exit)
        self.assertEqual(len(k.tree.merge_records), 3)

    def test_no_implicit_mergeables(self):
        k = MvmKernelizer(wide_boundary_graph())
        k.grow_mergeable_set(0)
        self.assertEqual(k.sets.mergeable, [0])
        self.assertEqual(k.sets.boundary, [9, 10])

    def test_baseline_takes_start_only(self):
        k = KasiKernelizer(chain_graph())
        k.grow_mergeable_set(0)
        self.assertEqual(k.sets.mergeable, [0])
        self.assertEqual(k.sets.boundary, [7, 8])

    def test_chain_kernel(self):
        results = {s: KernelServices(s).run(chain_graph()) for s in STRATEGIES}
        for result in results.values():
            self.assertEqual((result.stats.kernel_n, result.stats.kernel_m), (8, 16))
        self.assertEqual(results["mvm-balanced"].stats.merge_ops, 1)
        self.assertEqual(results["mvm-balanced"].stats.merged_count, 3)
        self.assertEqual(results["kasi-baseline"].stats.merge_ops, 3)

        balanced = results["mvm-balanced"]
        self.assertEqual(balanced.orig_of_super[8], [7, 8, 9, 10])
        self.assertEqual(balanced.kernel_graph().m, 16)

    def test_merge_retargets_externals(self):
        k = KasiKernelizer(merge_example())
        k.grow_mergeable_set(0)
        k.merge_set()
        g = k.g

        self.assertFalse(g.alive[0])
        self.assertFalse(g.alive[5])
        self.assertEqual(g.degree[6], 4)
        self.assertEqual(sorted(g.neighbors(6)), [1, 2, 3, 4])
        # d gained a cell to the survivor, e already had one
        self.assertEqual(g.neighbors(1), [6])
        self.assertEqual(g.cell_orig(1, 6), (1, 5))
        self.assertEqual(g.ptr_end[2] - g.ptr_start[2], 2)
        self.assertEqual(g.neighbors(2), [6])
        g.check_invariants()


class TestDirectEvaluation(unittest.TestCase):
    """ mvm-direct: 不用命中计数, 直接遍历每个邻居的边表
    """

    def compare(self, graph):
        greedy = KernelServices("mvm-greedy").run(graph)
        direct = KernelServices("mvm-direct", trace=True).run(graph)
        direct.kernel.check_invariants()
        self.assertEqual(
            (direct.stats.kernel_n, direct.stats.kernel_m),
            (greedy.stats.kernel_n, greedy.stats.kernel_m),
        )
        for v, nbrs, boundary in direct.trace.additions:
            self.assertLessEqual(len(set(nbrs) - set(boundary)), 1)
        return greedy.stats, direct.stats

    def test_chain_reads_more(self):
        greedy, direct = self.compare(chain_graph())
        self.assertEqual(direct.merged_count, greedy.merged_count)
        self.assertGreater(direct.edges_touched, greedy.edges_touched)

    def test_worst_case_reads_more(self):
        greedy, direct = self.compare(gen_worst_case(WorstCaseSpec(64, copies=2, seed=5)))
        self.assertGreater(direct.edges_touched, greedy.edges_touched)

    def test_random_kernels_match(self):
        for graph in random_suite(200, seed=3):
            self.compare(graph)


class TestKernelContract(unittest.TestCase):

    def test_random_suite(self):
        for index, graph in enumerate(random_suite(1000, seed=1)):
            shapes = set()
            ops = {}
            bound_rounds = log2_ceil(graph.n) + 1
            for strategy in STRATEGIES:
                result = KernelServices(strategy, trace=True).run(graph)
                g, stats = result.kernel, result.stats
                msg = f"graph {index} {strategy}"
                g.check_invariants()
                for v in g.live_vertices():
                    self.assertGreaterEqual(g.degree[v], 3, msg)
                shapes.add((stats.kernel_n, stats.kernel_m))
                ops[strategy] = stats.merge_ops

                self.assertLessEqual(stats.edges_touched, EDGE_TOUCH_C * max(graph.m, 1) * log2_ceil(graph.n), msg)
                self.assertLessEqual(stats.rounds, bound_rounds, msg)
                self.assertEqual(sum(stats.per_round_merge_ops), stats.merge_ops, msg)

                for v, nbrs, boundary in result.trace.additions:
                    self.assertLessEqual(len(set(nbrs) - set(boundary)), 1, msg)

                if strategy == "mvm-balanced":
                    seen = defaultdict(set)
                    for round_no, side, boundary in result.trace.merges:
                        key = (round_no, side)
                        self.assertFalse(seen[key] & set(boundary), msg)
                        seen[key] |= set(boundary)
            self.assertEqual(len(shapes), 1, f"graph {index}: {shapes}")
            self.assertLessEqual(ops["mvm-balanced"], ops["kasi-baseline"], f"graph {index}")
            self.assertLessEqual(ops["mvm-greedy"], ops["kasi-baseline"], f"graph {index}")

    def test_slack_does_not_change_kernel(self):
        for graph in random_suite(30, seed=2):
            tight = kernelize(graph, slack=0.0).stats
            loose = kernelize(graph, slack=1.0).stats
            self.assertEqual((tight.kernel_n, tight.kernel_m), (loose.kernel_n, loose.kernel_m))


if __name__ == '__main__':
    unittest.main()

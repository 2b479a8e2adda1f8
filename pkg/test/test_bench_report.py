import sys
sys.path.append(".")

import sys
import os
myPath = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, myPath + '/../')

import asyncio
import csv
import tempfile
import unittest

from typer.testing import CliRunner

from main_cli import app
from tiny_kernel_match.bench import (
    REPORT_FIELDS,
    InputSpec,
    PipelineConfig,
    emit_report,
    load_reports,
    run_batch,
    run_pipeline,
    without_times,
)
from tiny_kernel_match.graph import BipartiteGraph, write_edge_list
from tiny_kernel_match.matcher import load_matching


class BenchCase(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.c4 = self.path("c4.el")
        write_edge_list(BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]), self.c4)

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)


class TestPipeline(BenchCase):

    def test_cycle4(self):
        report = run_pipeline(PipelineConfig(input=InputSpec(path=self.c4), oracle=True))
        self.assertTrue(report.valid)
        self.assertEqual(report.strategy, "mvm-balanced")
        self.assertEqual((report.n_left, report.n_right, report.m), (2, 2, 4))
        self.assertEqual(report.matching_size, 2)
        self.assertEqual(report.oracle_size, 2)
        self.assertEqual((report.merge_ops, report.r1_matches, report.merged_count), (1, 1, 1))
        self.assertEqual(report.kernel_matching_size, 0)
        self.assertTrue(report.size_identity)

    def test_no_kernelization(self):
        report = run_pipeline(PipelineConfig(input=InputSpec(path=self.c4), strategy="none"))
        self.assertTrue(report.valid)
        self.assertEqual(report.matching_size, 2)
        self.assertEqual(report.merge_ops, 0)
        self.assertEqual((report.kernel_n, report.kernel_m), (4, 4))

    def test_generator_input_and_permute(self):
        spec = InputSpec(generator="random", params={"n_left": 15, "n_right": 12, "m": 30}, seed=2)
        report = run_pipeline(PipelineConfig(input=spec, permute=True, seed=5, repeat=2, oracle=True))
        self.assertTrue(report.valid)
        self.assertEqual(report.oracle_size, report.matching_size)
        self.assertEqual(report.repeat, 2)
        self.assertEqual(report.input, "random(m=30,n_left=15,n_right=12;seed=2)")

    def test_oracle_skipped_on_large_graph(self):
        spec = InputSpec(generator="random", params={"n_left": 60, "n_right": 60, "m": 200}, seed=0)
        report = run_pipeline(PipelineConfig(input=spec, oracle=True))
        self.assertTrue(report.valid)
        self.assertEqual(report.oracle_size, -1)

    def test_deterministic_apart_from_times(self):
        spec = InputSpec(generator="worst-case", params={"n": 16, "copies": 4}, seed=1)
        a = run_pipeline(PipelineConfig(input=spec, strategy="kasi-baseline"))
        b = run_pipeline(PipelineConfig(input=spec, strategy="kasi-baseline"))
        self.assertEqual(without_times(a), without_times(b))

    def test_missing_file(self):
        self.assertRaises(OSError, run_pipeline, PipelineConfig(input=InputSpec(path=self.path("nope.el"))))


class TestReports(BenchCase):

    def setUp(self):
        super().setUp()
        spec = InputSpec(generator="worst-case", params={"n": 8, "copies": 2}, seed=0)
        self.reports = [
            run_pipeline(PipelineConfig(input=spec, strategy=s))
            for s in ("mvm-balanced", "mvm-greedy", "kasi-baseline")
        ]

    def test_json_lines(self):
        target = self.path("r.jsonl")
        emit_report(self.reports, target, "json")
        self.assertEqual(load_reports(target, "json"), self.reports)

    def test_csv(self):
        target = self.path("r.csv")
        emit_report(self.reports, target, "csv")
        with open(target, newline="", encoding="utf-8") as f:
            rows = list(csv.reader(f))
        self.assertEqual(rows[0], REPORT_FIELDS)
        self.assertEqual(len(rows), 4)
        self.assertEqual(load_reports(target, "csv"), self.reports)

    def test_csv_append_keeps_one_header(self):
        target = self.path("a.csv")
        emit_report(self.reports[0], target, "csv")
        emit_report(self.reports[1:], target, "csv", append=True)
        self.assertEqual(len(load_reports(target, "csv")), 3)

    def test_unknown_format(self):
        self.assertRaises(ValueError, emit_report, self.reports, self.path("r.xml"), "xml")


class TestBatch(BenchCase):

    def test_sequential(self):
        configs = [
            PipelineConfig(input=InputSpec(generator="random", params={"n_left": 8, "n_right": 8, "m": 12}, seed=s))
            for s in range(5)
        ]
        reports = asyncio.run(run_batch(configs, jobs=1))
        target = self.path("batch.csv")
        emit_report(reports, target, "csv")
        self.assertEqual(len(load_reports(target, "csv")), 5)
        self.assertTrue(all(r.valid for r in reports))

    def test_parallel_failure_is_isolated(self):
        configs = [
            PipelineConfig(input=InputSpec(path=self.c4)),
            PipelineConfig(input=InputSpec(path=self.path("missing.el"))),
        ]
        reports = asyncio.run(run_batch(configs, jobs=2))
        self.assertTrue(reports[0].valid)
        self.assertIsNone(reports[1])


class TestCli(BenchCase):

    def setUp(self):
        super().setUp()
        self.runner = CliRunner()

    def test_match_then_verify(self):
        out = self.path("c4.match")
        result = self.runner.invoke(app, ["match", "--input", self.c4, "--out", out, "--report", "csv"])
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertEqual(load_matching(out).size, 2)
        self.assertEqual(len(load_reports(out + ".report.csv", "csv")), 1)

        result = self.runner.invoke(app, ["verify", "--input", self.c4, "--matching", out])
        self.assertEqual(result.exit_code, 0, result.output)

    def test_verify_rejects_non_edge(self):
        graph = self.path("p2.el")
        write_edge_list(BipartiteGraph.from_edges(2, 2, [(0, 0), (1, 1)]), graph)
        bad = self.path("bad.match")
        with open(bad, "w", encoding="utf-8") as f:
            f.write("p 2 2\n0 1\n")
        result = self.runner.invoke(app, ["verify", "--input", graph, "--matching", bad])
        self.assertEqual(result.exit_code, 2)

    def test_verify_rejects_conflicting_pairs(self):
        bad = self.path("conflict.match")
        with open(bad, "w", encoding="utf-8") as f:
            f.write("0 0\n1 0\n")
        result = self.runner.invoke(app, ["verify", "--input", self.c4, "--matching", bad])
        self.assertEqual(result.exit_code, 2)

    def test_parse_error_exit_code(self):
        broken = self.path("broken.el")
        with open(broken, "w", encoding="utf-8") as f:
            f.write("0 -1\n")
        result = self.runner.invoke(app, ["match", "--input", broken])
        self.assertEqual(result.exit_code, 1)

    def test_missing_input(self):
        result = self.runner.invoke(app, ["kernelize", "--input", self.path("nope.el")])
        self.assertEqual(result.exit_code, 1)

    def test_gen_then_kernelize(self):
        graph = self.path("wc.el")
        result = self.runner.invoke(app, ["gen", "--generator", "worst-case", "--n", "8", "--copies", "2", "--out", graph])
        self.assertEqual(result.exit_code, 0, result.output)

        kernel = self.path("kernel.el")
        result = self.runner.invoke(
            app, ["kernelize", "--input", graph, "--strategy", "kasi-baseline", "--out", kernel]
        )
        self.assertEqual(result.exit_code, 0, result.output)
        self.assertTrue(os.path.exists(kernel))

    def test_bench(self):
        target = self.path("bench.csv")
        result = self.runner.invoke(
            app,
            [
                "bench", "--generator", "worst-case", "--n", "8", "--n", "16", "--copies", "2",
                "--strategy", "mvm-balanced", "--strategy", "kasi-baseline",
                "--repeat", "1", "--report", "csv", "--out", target,
            ],
        )
        self.assertEqual(result.exit_code, 0, result.output)
        reports = load_reports(target, "csv")
        self.assertEqual(len(reports), 4)
        self.assertTrue(all(r.valid for r in reports))

    def test_bench_unknown_strategy(self):
        result = self.runner.invoke(app, ["bench", "--input", self.c4, "--strategy", "fastest"])
        self.assertEqual(result.exit_code, 1)


if __name__ == '__main__':
    unittest.main()

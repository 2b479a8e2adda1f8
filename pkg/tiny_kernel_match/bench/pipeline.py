import asyncio
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from time import perf_counter
from typing import Dict, List, Optional

from .report import RunReport
from ..graph.bipartite_graph import BipartiteGraph
from ..graph.loaders import GraphFormatType, load_graph
from ..graph.transforms import random_permute
from ..instances import WorstCaseSpec, gen_random_bipartite, gen_worst_case
from ..kernel.kernel_services import KernelServices, KernelStrategyType
from ..matcher import (
    Matching,
    OracleLimitError,
    brute_force_max,
    maximum_matching,
    reconstruct,
    verify_matching,
)
from ..utils.logger import logger


class GeneratorType(Enum):
    WORST_CASE = "worst-case"
    RANDOM = "random"


@dataclass
class InputSpec:
    """ 输入: 文件 (path + fmt) 或生成器 (generator + params + seed)
    """

    path: Optional[str] = None
    fmt: str = GraphFormatType.EDGELIST.value
    generator: Optional[str] = None
    params: Dict[str, int] = field(default_factory=dict)
    seed: int = 0

    def describe(self) -> str:
        if self.path is not None:
            return self.path
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.generator}({args};seed={self.seed})"

    def load(self) -> BipartiteGraph:
        if self.path is not None:
            return load_graph(self.path, self.fmt)

        kind = GeneratorType(self.generator)
        if kind == GeneratorType.WORST_CASE:
            return gen_worst_case(
                WorstCaseSpec(
                    n_per_instance=self.params["n"],
                    copies=self.params.get("copies", 64),
                    seed=self.seed,
                )
            )
        return gen_random_bipartite(
            self.params["n_left"], self.params["n_right"], self.params["m"], self.seed
        )


@dataclass
class PipelineConfig:
    input: InputSpec
    strategy: str = KernelStrategyType.MVM_BALANCED.value
    seed: int = 0
    permute: bool = False
    slack: float = 0.0
    repeat: int = 1
    oracle: bool = False


@dataclass
class PipelineOutcome:
    report: RunReport
    graph: BipartiteGraph
    matching: Matching


def execute(config: PipelineConfig) -> PipelineOutcome:
    """ load -> (permute) -> (kernelize) -> match -> (reconstruct) -> verify

    Every repeat redoes all phases on a fresh graph; times are averaged and
    the counters come from the last repeat.
    """
    strategy = KernelStrategyType(config.strategy)
    repeat = max(config.repeat, 1)
    totals = {"load": 0.0, "kernelize": 0.0, "match": 0.0, "reconstruct": 0.0}
    report = RunReport(
        input=config.input.describe(),
        strategy=strategy.value,
        seed=config.seed,
        permute=config.permute,
        slack=config.slack,
        repeat=repeat,
    )

    for _ in range(repeat):
        t0 = perf_counter()
        graph = config.input.load()
        if config.permute:
            graph = random_permute(graph, config.seed)
        t1 = perf_counter()
        totals["load"] += t1 - t0

        services = KernelServices(strategy.value, config.slack)
        result = services.run(graph)
        t2 = perf_counter()
        totals["kernelize"] += t2 - t1

        kernel_matching = maximum_matching(result.kernel.view() if result is not None else graph)
        t3 = perf_counter()
        totals["match"] += t3 - t2

        matching = reconstruct(kernel_matching, result) if result is not None else kernel_matching
        totals["reconstruct"] += perf_counter() - t3

    verdict = verify_matching(graph, matching)
    for violation in verdict.violations:
        logger.error(f"[{report.input}] {violation}")

    report.n_left, report.n_right, report.m = graph.n_left, graph.n_right, graph.m
    report.fingerprint = graph.fingerprint()
    report.t_load = totals["load"] / repeat
    report.t_kernelize = totals["kernelize"] / repeat
    report.t_match = totals["match"] / repeat
    report.t_reconstruct = totals["reconstruct"] / repeat
    report.kernel_matching_size = kernel_matching.size
    report.matching_size = matching.size

    if result is not None:
        stats = result.stats
        report.merge_ops = stats.merge_ops
        report.rounds = stats.rounds
        report.edges_touched = stats.edges_touched
        report.r1_matches = stats.r1_matches
        report.merged_count = stats.merged_count
        report.kernel_n = stats.kernel_n
        report.kernel_m = stats.kernel_m
        report.per_round_merge_ops = list(stats.per_round_merge_ops)
        report.size_identity = matching.size == kernel_matching.size + stats.r1_matches + stats.merged_count
        if not report.size_identity:
            logger.error(f"[{report.input}] size identity broken: {matching.size}")
    else:
        report.kernel_n = graph.n
        report.kernel_m = graph.m

    report.valid = verdict.valid and report.size_identity
    if config.oracle:
        try:
            report.oracle_size = brute_force_max(graph)
            if report.oracle_size != matching.size:
                logger.error(f"[{report.input}] oracle says {report.oracle_size}, got {matching.size}")
                report.valid = False
        except OracleLimitError as e:
            logger.warning(f"[{report.input}] oracle skipped: {e}")

    logger.info(
        f"[{report.input}] {report.strategy}: size {report.matching_size}, valid {report.valid}, "
        f"load {report.t_load:.4f}s kernelize {report.t_kernelize:.4f}s "
        f"match {report.t_match:.4f}s reconstruct {report.t_reconstruct:.4f}s"
    )
    return PipelineOutcome(report, graph, matching)


def run_pipeline(config: PipelineConfig) -> RunReport:
    return execute(config).report


async def run_batch(configs: List[PipelineConfig], jobs: int = 1) -> List[Optional[RunReport]]:
    """ 并发运行多个独立输入, 每个任务在子进程里构建自己的图
    """
    if jobs <= 1:
        return [run_pipeline(config) for config in configs]

    semaphore = asyncio.Semaphore(jobs)
    loop = asyncio.get_running_loop()

    with ProcessPoolExecutor(max_workers=jobs) as pool:

        async def run_with_semaphore(config):
            async with semaphore:
                return await loop.run_in_executor(pool, run_pipeline, config)

        results = await asyncio.gather(
            *[run_with_semaphore(config) for config in configs], return_exceptions=True
        )

    reports: List[Optional[RunReport]] = []
    for i, result in enumerate(results):
        if isinstance(result, Exception):
            logger.error(f"Error running {configs[i].input.describe()}: {str(result)}")
            reports.append(None)
            continue
        reports.append(result)
    return reports

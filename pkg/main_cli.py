# -*- coding: utf-8 -*-
import os
import asyncio
import typer
from functools import wraps
from typing import List, Optional
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.progress import Progress, SpinnerColumn, TextColumn
from dotenv import load_dotenv

from tiny_kernel_match.graph import GraphParseError, write_edge_list, random_permute
from tiny_kernel_match.kernel import KernelServices, KernelStrategyType
from tiny_kernel_match.matcher import load_matching, verify_matching, write_matching
from tiny_kernel_match.instances import GeneratorSpecError
from tiny_kernel_match.bench import (
    GeneratorType,
    InputSpec,
    PipelineConfig,
    ReportFormatType,
    emit_report,
    execute,
    run_batch,
)

load_dotenv(
    dotenv_path=".env",
    override=True
)

app = typer.Typer(help="Karp-Sipser kernelization with multi-vertex merging.")
console = Console()

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2


def coro(f):
    """Decorator to run async functions in a sync context.
    """
    @wraps(f)
    def wrapper(*args, **kwargs):
        return asyncio.run(f(*args, **kwargs))
    return wrapper


def guarded(f):
    """ I/O, 解析和参数错误统一转成退出码 1
    """
    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (OSError, GraphParseError, GeneratorSpecError, ValueError, KeyError) as e:
            console.print(f"[bold red]错误:[/bold red] {e}")
            raise typer.Exit(code=EXIT_ERROR)
    return wrapper


def _env_strategy(strategy: Optional[str]) -> str:
    return strategy or os.getenv("KERNEL_STRATEGY", KernelStrategyType.MVM_BALANCED.value)


def _env_slack(slack: Optional[float]) -> float:
    return slack if slack is not None else float(os.getenv("KERNEL_SLACK", "0.0"))


def _input_spec(
    input: Optional[str],
    fmt: str,
    generator: Optional[str],
    n: int,
    copies: int,
    n_left: int,
    n_right: int,
    m: int,
    seed: int,
) -> InputSpec:
    if input is not None:
        return InputSpec(path=input, fmt=fmt)
    if generator is None:
        raise ValueError("either --input or --generator is required")
    if GeneratorType(generator) == GeneratorType.WORST_CASE:
        return InputSpec(generator=generator, params={"n": n, "copies": copies}, seed=seed)
    return InputSpec(generator=generator, params={"n_left": n_left, "n_right": n_right, "m": m}, seed=seed)


def _stats_table(title: str, rows: List[tuple]) -> Table:
    table = Table(title=title)
    table.add_column("field", style="cyan")
    table.add_column("value", justify="right")
    for key, value in rows:
        table.add_row(key, str(value))
    return table


@app.command()
@guarded
def kernelize(
    input: Optional[str] = typer.Option(None, "--input", help="图文件路径."),
    fmt: str = typer.Option("edgelist", "--format", help="mtx 或 edgelist."),
    generator: Optional[str] = typer.Option(None, help="worst-case 或 random."),
    n: int = typer.Option(256, help="worst-case: 每个实例的 n."),
    copies: int = typer.Option(64, help="worst-case: 实例个数."),
    n_left: int = typer.Option(20, help="random: 左侧顶点数."),
    n_right: int = typer.Option(20, help="random: 右侧顶点数."),
    m: int = typer.Option(40, help="random: 边数."),
    strategy: Optional[str] = typer.Option(None, help="mvm-balanced, mvm-greedy, mvm-direct 或 kasi-baseline."),
    seed: int = typer.Option(0, help="随机种子."),
    permute: bool = typer.Option(False, "--permute", help="先对输入做随机置换."),
    slack: Optional[float] = typer.Option(None, help="边表预留空位比例."),
    out: Optional[str] = typer.Option(None, "--out", help="把核写成边表文件."),
):
    """Kernelize a graph and print the counters."""
    spec = _input_spec(input, fmt, generator, n, copies, n_left, n_right, m, seed)
    graph = spec.load()
    if permute:
        graph = random_permute(graph, seed)

    name = _env_strategy(strategy)
    result = KernelServices(name, _env_slack(slack)).run(graph)
    if result is None:
        raise ValueError("strategy 'none' does not kernelize")

    stats = result.stats
    console.print(_stats_table(f"{spec.describe()} [{name}]", list(stats.to_dict().items())))
    if out is not None:
        write_edge_list(result.kernel_graph(), out)
        console.print(f"[green]核已写入[/green] {out}")


@app.command()
@guarded
def match(
    input: Optional[str] = typer.Option(None, "--input", help="图文件路径."),
    fmt: str = typer.Option("edgelist", "--format", help="mtx 或 edgelist."),
    generator: Optional[str] = typer.Option(None, help="worst-case 或 random."),
    n: int = typer.Option(256, help="worst-case: 每个实例的 n."),
    copies: int = typer.Option(64, help="worst-case: 实例个数."),
    n_left: int = typer.Option(20, help="random: 左侧顶点数."),
    n_right: int = typer.Option(20, help="random: 右侧顶点数."),
    m: int = typer.Option(40, help="random: 边数."),
    strategy: Optional[str] = typer.Option(None, help="mvm-balanced, mvm-greedy, mvm-direct, kasi-baseline 或 none."),
    seed: int = typer.Option(0, help="随机种子."),
    permute: bool = typer.Option(False, "--permute", help="先对输入做随机置换."),
    slack: Optional[float] = typer.Option(None, help="边表预留空位比例."),
    oracle: bool = typer.Option(False, "--oracle", help="用暴力算法交叉检查 (仅小图)."),
    out: Optional[str] = typer.Option(None, "--out", help="把匹配写入文件."),
    report: Optional[str] = typer.Option(None, "--report", help="json 或 csv, 报告写到 <out>.report.<格式>."),
):
    """Kernelize, match the kernel and rebuild a maximum matching."""
    spec = _input_spec(input, fmt, generator, n, copies, n_left, n_right, m, seed)
    config = PipelineConfig(
        input=spec,
        strategy=_env_strategy(strategy),
        seed=seed,
        permute=permute,
        slack=_env_slack(slack),
        repeat=1,
        oracle=oracle,
    )
    outcome = execute(config)
    run = outcome.report

    console.print(
        Panel.fit(
            f"matching size [bold]{run.matching_size}[/bold]  "
            f"(kernel {run.kernel_matching_size} + rule-1 {run.r1_matches} + merged {run.merged_count})\n"
            f"verdict: {'[green]valid[/green]' if run.valid else '[red]invalid[/red]'}",
            title=run.input,
        )
    )
    if out is not None:
        write_matching(outcome.matching, out)
    if report is not None:
        target = f"{out or 'match'}.report.{report}"
        emit_report(run, target, report)
        console.print(f"[green]报告已写入[/green] {target}")

    raise typer.Exit(code=EXIT_OK if run.valid else EXIT_INVALID)


@app.command()
@guarded
def gen(
    generator: str = typer.Option(GeneratorType.WORST_CASE.value, help="worst-case 或 random."),
    n: int = typer.Option(256, help="worst-case: 每个实例的 n (2 的幂, >= 8)."),
    copies: int = typer.Option(64, help="worst-case: 实例个数."),
    n_left: int = typer.Option(20, help="random: 左侧顶点数."),
    n_right: int = typer.Option(20, help="random: 右侧顶点数."),
    m: int = typer.Option(40, help="random: 边数."),
    seed: int = typer.Option(0, help="随机种子."),
    out: str = typer.Option(..., "--out", help="输出边表文件."),
):
    """Generate an instance and write it as an edge list."""
    spec = _input_spec(None, "edgelist", generator, n, copies, n_left, n_right, m, seed)
    graph = spec.load()
    write_edge_list(graph, out)
    console.print(f"[green]{spec.describe()}[/green]: n_left={graph.n_left} n_right={graph.n_right} m={graph.m} -> {out}")


@app.command()
@guarded
def verify(
    input: str = typer.Option(..., "--input", help="图文件路径."),
    fmt: str = typer.Option("edgelist", "--format", help="mtx 或 edgelist."),
    matching: str = typer.Option(..., "--matching", help="匹配文件路径."),
):
    """Check a matching file against a graph."""
    graph = InputSpec(path=input, fmt=fmt).load()
    try:
        candidate = load_matching(matching, graph.n_left, graph.n_right)
    except ValueError as e:
        if isinstance(e, GraphParseError):
            raise
        console.print(f"[red]invalid[/red]: {e}")
        raise typer.Exit(code=EXIT_INVALID)

    verdict = verify_matching(graph, candidate)
    for violation in verdict.violations:
        console.print(f"  • {violation}")
    console.print(f"size {verdict.size}: {'[green]valid[/green]' if verdict.valid else '[red]invalid[/red]'}")
    raise typer.Exit(code=EXIT_OK if verdict.valid else EXIT_INVALID)


@app.command()
@coro
async def bench(
    input: Optional[List[str]] = typer.Option(None, "--input", help="图文件路径, 可重复."),
    fmt: str = typer.Option("edgelist", "--format", help="mtx 或 edgelist."),
    generator: Optional[str] = typer.Option(None, help="worst-case 或 random."),
    n: Optional[List[int]] = typer.Option(None, "--n", help="worst-case: 每个实例的 n, 可重复."),
    copies: int = typer.Option(64, help="worst-case: 实例个数."),
    n_left: int = typer.Option(20, help="random: 左侧顶点数."),
    n_right: int = typer.Option(20, help="random: 右侧顶点数."),
    m: int = typer.Option(40, help="random: 边数."),
    strategy: Optional[List[str]] = typer.Option(None, "--strategy", help="可重复."),
    seed: int = typer.Option(0, help="随机种子."),
    permute: bool = typer.Option(False, "--permute", help="先对输入做随机置换."),
    slack: Optional[float] = typer.Option(None, help="边表预留空位比例."),
    repeat: Optional[int] = typer.Option(None, help="每个配置重复次数, 报告取平均."),
    oracle: bool = typer.Option(False, "--oracle", help="用暴力算法交叉检查 (仅小图)."),
    jobs: int = typer.Option(1, help="并行任务数."),
    report: str = typer.Option(ReportFormatType.JSON.value, "--report", help="json 或 csv."),
    out: str = typer.Option("bench_report.jsonl", "--out", help="报告文件."),
):
    """Run the pipeline over inputs x strategies and write a report."""
    try:
        specs = []
        if input:
            specs = [InputSpec(path=p, fmt=fmt) for p in input]
        elif generator is not None:
            for size in n or [256]:
                specs.append(_input_spec(None, fmt, generator, size, copies, n_left, n_right, m, seed))
        else:
            raise ValueError("either --input or --generator is required")

        strategies = strategy or [_env_strategy(None)]
        for name in strategies:
            KernelStrategyType(name)
        repeat = repeat if repeat is not None else int(os.getenv("BENCH_REPEAT", "5"))
        configs = [
            PipelineConfig(
                input=spec,
                strategy=name,
                seed=seed,
                permute=permute,
                slack=_env_slack(slack),
                repeat=repeat,
                oracle=oracle,
            )
            for spec in specs
            for name in strategies
        ]

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=console,
        ) as progress:
            task = progress.add_task(f"[yellow]运行 {len(configs)} 个配置...[/yellow]", total=None)
            results = await run_batch(configs, jobs)
            progress.remove_task(task)

        reports = [r for r in results if r is not None]
        emit_report(reports, out, report)
    except (OSError, GraphParseError, GeneratorSpecError, ValueError, KeyError) as e:
        console.print(f"[bold red]错误:[/bold red] {e}")
        raise typer.Exit(code=EXIT_ERROR)

    table = Table(title="bench")
    for col in ("input", "strategy", "size", "valid", "merge_ops", "rounds", "edges_touched", "kernelize s"):
        table.add_column(col)
    for r in reports:
        table.add_row(
            r.input, r.strategy, str(r.matching_size), str(r.valid), str(r.merge_ops),
            str(r.rounds), str(r.edges_touched), f"{r.t_kernelize:.4f}",
        )
    console.print(table)
    console.print(f"[green]报告已写入[/green] {out}")

    if len(reports) != len(configs):
        raise typer.Exit(code=EXIT_ERROR)
    raise typer.Exit(code=EXIT_OK if all(r.valid for r in reports) else EXIT_INVALID)


if __name__ == "__main__":
    app()

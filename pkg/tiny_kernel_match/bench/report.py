import csv
import json
from dataclasses import asdict, dataclass, field, fields
from enum import Enum
from pathlib import Path
from typing import Iterable, List, Union


class ReportFormatType(Enum):
    JSON = "json"
    CSV = "csv"


@dataclass
class RunReport:
    """ 一次流水线运行的结果

    Phase times are wall-clock means over the repeats, in seconds; every
    other field is deterministic for a fixed input, strategy and seed.
    """

    input: str
    strategy: str
    seed: int = 0
    permute: bool = False
    slack: float = 0.0
    repeat: int = 1
    n_left: int = 0
    n_right: int = 0
    m: int = 0
    fingerprint: str = ""
    t_load: float = 0.0
    t_kernelize: float = 0.0
    t_match: float = 0.0
    t_reconstruct: float = 0.0
    merge_ops: int = 0
    rounds: int = 0
    edges_touched: int = 0
    r1_matches: int = 0
    merged_count: int = 0
    kernel_n: int = 0
    kernel_m: int = 0
    per_round_merge_ops: List[int] = field(default_factory=list)
    kernel_matching_size: int = 0
    matching_size: int = 0
    size_identity: bool = True
    oracle_size: int = -1
    valid: bool = False


REPORT_FIELDS = [f.name for f in fields(RunReport)]
TIME_FIELDS = ("t_load", "t_kernelize", "t_match", "t_reconstruct")
_TYPES = {f.name: f.type for f in fields(RunReport)}


def without_times(report: RunReport) -> dict:
    data = asdict(report)
    for name in TIME_FIELDS:
        data.pop(name)
    return data


def _to_row(report: RunReport) -> dict:
    row = asdict(report)
    row["per_round_merge_ops"] = ";".join(str(x) for x in report.per_round_merge_ops)
    return row


def _from_row(row: dict) -> RunReport:
    values = {}
    for name in REPORT_FIELDS:
        raw, kind = row[name], _TYPES[name]
        if name == "per_round_merge_ops":
            values[name] = [int(x) for x in raw.split(";")] if raw else []
        elif kind is bool:
            values[name] = raw == "True"
        elif kind is int:
            values[name] = int(raw)
        elif kind is float:
            values[name] = float(raw)
        else:
            values[name] = raw
    return RunReport(**values)


def emit_report(
    reports: Union[RunReport, Iterable[RunReport]],
    path: Union[str, Path],
    fmt: str = ReportFormatType.JSON.value,
    append: bool = False,
) -> None:
    """ JSON: one object per line. CSV: fixed ``REPORT_FIELDS`` header, one row per run.
    """
    if isinstance(reports, RunReport):
        reports = [reports]
    reports = list(reports)
    fmt = ReportFormatType(fmt)
    path = Path(path)
    write_header = not (append and path.exists() and path.stat().st_size > 0)

    with open(path, "a" if append else "w", encoding="utf-8", newline="") as f:
        if fmt == ReportFormatType.JSON:
            for report in reports:
                f.write(json.dumps(asdict(report), ensure_ascii=False) + "\n")
        else:
            writer = csv.DictWriter(f, fieldnames=REPORT_FIELDS)
            if write_header:
                writer.writeheader()
            for report in reports:
                writer.writerow(_to_row(report))


def load_reports(path: Union[str, Path], fmt: str = ReportFormatType.JSON.value) -> List[RunReport]:
    fmt = ReportFormatType(fmt)
    with open(path, "r", encoding="utf-8", newline="") as f:
        if fmt == ReportFormatType.JSON:
            return [RunReport(**json.loads(line)) for line in f if line.strip()]
        return [_from_row(row) for row in csv.DictReader(f)]

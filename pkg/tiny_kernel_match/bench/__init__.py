from .report import RunReport, ReportFormatType, REPORT_FIELDS, TIME_FIELDS, emit_report, load_reports, without_times
from .pipeline import GeneratorType, InputSpec, PipelineConfig, PipelineOutcome, execute, run_pipeline, run_batch

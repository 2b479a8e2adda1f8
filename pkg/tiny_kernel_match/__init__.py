from .graph import BipartiteGraph, load_graph, random_permute, bipartite_from_directed
from .store import MergeGraph
from .matcher import Matching, maximum_matching, reconstruct, verify_matching, brute_force_max
from .kernel import kernelize, baseline_kasi, KernelResult, KernelStats
from .instances import WorstCaseSpec, gen_worst_case, gen_random_bipartite
from .bench import PipelineConfig, InputSpec, RunReport, run_pipeline, emit_report

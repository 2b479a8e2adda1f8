from .buckets import Buckets
from .working_sets import WorkingSets
from .matching_tree import MatchingTree, MergeRecord
from .component_forest import ComponentForest
from .stats import KernelStats, KernelResult, KernelTrace
from .base_kernelizer import BaseKernelizer
from .mvm_kernelizer import MvmKernelizer
from .kasi_kernelizer import KasiKernelizer
from .kernel_services import KernelStrategyType, KernelServices, kernelize, baseline_kasi

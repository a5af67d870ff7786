"""FPTAS for Subset Sum Ratio built on pluggable Partition solvers."""

from .binning import BinGrid, split_large_small, enumerate_large_subsets, collision_solution
from .constrained import PartialSums, SolveStats, add_small_elements, constrained_ssr
from .core import (
    CandidateSolution,
    DuplicatePair,
    Epsilon,
    Instance,
    RatioValue,
    SubsetSel,
    compare_ratio,
    derived_epsilon_prime,
    ratio_of,
    validate_instance,
    within_factor,
)
from .driver import ssr
from .oracle import brute_force_partition, brute_force_ssr
from .partition import (
    PartitionResult,
    PartitionStrategy,
    StrategyKind,
    Tier,
    approx_partition_trim,
    dp_partition_exact,
    mim_partition_exact,
    solve_partition,
)

__version__ = "0.1.0"

"""Full solver: run the constrained scheme on every prefix, keep the best."""

from __future__ import annotations

from .binning import BinGrid, split_large_small
from .constrained import PartialSums, SolveStats, constrained_ssr
from .core import CandidateSolution, Epsilon, Instance
from .errors import InstanceTooSmall, InternalInvariantViolation
from .partition import PartitionStrategy


def ssr(
    inst: Instance,
    eps: Epsilon,
    strategy: PartitionStrategy | None = None,
    stats: SolveStats | None = None,
) -> CandidateSolution:
    """(1 + eps)-approximate Subset Sum Ratio.

    Prefixes are visited from the full instance down to a single element.
    The first candidate with ratio exactly 1 ends the scan; otherwise ties
    go to the earlier prefix.
    """
    if inst.n < 2:
        raise InstanceTooSmall("need at least two elements")
    strategy = strategy or PartitionStrategy()
    t = PartialSums.of(inst)
    if stats is not None:
        stats.large_count = len(split_large_small(inst, eps).large)
        stats.bin_count = BinGrid.for_instance(inst, eps).bin_count

    best: CandidateSolution | None = None
    for i in range(inst.n, 0, -1):
        cand = constrained_ssr(inst.prefix(i), eps, t, strategy, stats)
        if cand is None:
            continue
        if best is None or cand.ratio < best.ratio:
            best = cand
        if best.ratio.num == best.ratio.den:
            break
    if best is None:
        raise InternalInvariantViolation("no candidate for an instance with two elements")
    return best

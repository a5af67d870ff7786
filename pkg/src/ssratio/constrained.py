"""Approximate the best solution whose union contains the current maximum."""

from __future__ import annotations

import enum
from bisect import bisect_left
from dataclasses import dataclass

from .binning import BinGrid, Collision, collision_solution, enumerate_large_subsets, split_large_small
from .core import CandidateSolution, Epsilon, Instance, SubsetSel, derived_epsilon_prime, partial_sums, ratio_of
from .errors import InternalInvariantViolation, ZeroSum
from .partition import PartitionStrategy, solve_partition


@dataclass(frozen=True)
class PartialSums:
    """``t[k]`` is the sum of the ``k`` smallest instance elements."""

    t: tuple[int, ...]

    @classmethod
    def of(cls, inst: Instance) -> PartialSums:
        return cls(tuple(partial_sums(inst.elements)))

    def __getitem__(self, k):
        return self.t[k]

    def __len__(self):
        return len(self.t)


class CompletionKind(enum.Enum):
    PREFIX = "prefix"
    ALL_SMALL = "all_small"


@dataclass(frozen=True)
class Completion:
    """Result of topping up the lighter side with the ``k`` smallest elements."""

    kind: CompletionKind
    k: int
    lighter_sum: int
    heavier_sum: int


@dataclass
class SolveStats:
    """Counters filled in by the solvers when a stats object is passed."""

    partition_calls: int = 0
    completions: int = 0
    collision_exit: bool = False
    large_count: int = 0
    bin_count: int = 0
    prefixes: int = 0


def add_small_elements(lp_sum: int, bar_sum: int, small_count: int, t: PartialSums) -> Completion | None:
    """Greedy small-element completion of a Partition split.

    Returns the minimal ``k`` with ``lp_sum + t[k] >= bar_sum`` when all the
    small elements together are enough, otherwise the all-small candidate.
    ``None`` means there are no small elements and the split is unbalanced.
    """
    gap = bar_sum - lp_sum
    if gap < 0:
        raise ValueError("lp_sum must not exceed bar_sum")
    total_small = t[small_count]
    if total_small >= gap:
        k = bisect_left(t.t, gap, 0, small_count + 1)
        return Completion(CompletionKind.PREFIX, k, lp_sum + t[k], bar_sum)
    if small_count == 0:
        return None
    if lp_sum + total_small == 0:
        raise ZeroSum("empty lighter side and no small elements")
    return Completion(CompletionKind.ALL_SMALL, small_count, lp_sum + total_small, bar_sum)


def constrained_ssr(
    prefix: Instance,
    eps: Epsilon,
    t: PartialSums,
    strategy: PartitionStrategy | None = None,
    stats: SolveStats | None = None,
) -> CandidateSolution | None:
    """Best candidate for the sub-problem whose solution uses ``prefix.a_n``.

    The ratio is within ``1 + eps`` of the best such solution, though the
    returned sets may themselves avoid ``a_n``. Returns ``None`` when no
    candidate with two positive sides exists (a single-element prefix).
    """
    strategy = strategy or PartitionStrategy()
    if len(t) < prefix.n + 1:
        raise ValueError("partial sums do not cover the prefix")
    eps_prime = derived_epsilon_prime(eps)
    split = split_large_small(prefix, eps)
    m = split.small_count
    grid = BinGrid.for_instance(prefix, eps)
    if stats is not None:
        stats.prefixes += 1

    outcome = enumerate_large_subsets(prefix, split.large, grid)
    if isinstance(outcome, Collision):
        if stats is not None:
            stats.collision_exit = True
        return collision_solution(prefix, outcome.first, outcome.second)

    top_bit = 1 << (prefix.n - 1)
    small_limit = eps.p * prefix.a_n
    best: CandidateSolution | None = None

    def offer(cand: CandidateSolution):
        nonlocal best
        if best is None or cand.ratio < best.ratio:
            best = cand

    for sub in outcome.entries:
        if not sub.mask & top_bit:
            continue
        part = solve_partition(prefix, sub, strategy, eps_prime)
        if stats is not None:
            stats.partition_calls += 1
        lp, bar = part.x_p, part.complement
        if lp.sum > 0:
            offer(CandidateSolution(lp, bar, ratio_of(lp.sum, bar.sum)))

        comp = add_small_elements(lp.sum, bar.sum, m, t)
        if comp is None:
            continue
        if comp.kind is CompletionKind.PREFIX:
            over = comp.lighter_sum - comp.heavier_sum
            if over < 0 or over * eps.q >= small_limit:
                raise InternalInvariantViolation(
                    f"completion overshoot {over} outside [0, eps*a_n) for a_n={prefix.a_n}"
                )
            if stats is not None:
                stats.completions += 1
        grown = SubsetSel(lp.mask | ((1 << comp.k) - 1), comp.lighter_sum)
        offer(CandidateSolution(grown, bar, ratio_of(grown.sum, bar.sum)))
        if best.ratio.num == best.ratio.den:
            break
    return best

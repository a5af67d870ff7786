"""Partition solvers behind one strategy contract.

Every solver takes a subset ``X`` of an instance and returns the lighter side
``x_p`` (sum at most half of ``X``) plus its complement. Exact solvers break
ties between optimal subsets by the smallest integer mask.
"""

from __future__ import annotations

import enum
import os
from bisect import bisect_right
from dataclasses import dataclass

from .core import Epsilon, Instance, SubsetSel
from .errors import CapacityGuard, InternalInvariantViolation, SizeGuard

DEFAULT_MIM_CAP = 40
DEFAULT_DP_CAP = 10**7
MIM_CAP_ENV = "SSR_MIM_CAP"


class Tier(enum.Enum):
    EXACT = "exact"
    APPROX = "approx"


class StrategyKind(enum.Enum):
    MEET_IN_MIDDLE = "mim"
    DYNAMIC_PROGRAMMING = "dp"
    TRIM_APPROX = "trim"


@dataclass(frozen=True)
class PartitionResult:
    x_p: SubsetSel
    complement: SubsetSel
    tier: Tier
    eps_prime: Epsilon | None = None

    def check(self, inst: Instance, X: SubsetSel) -> None:
        self.x_p.check(inst)
        self.complement.check(inst)
        if self.x_p.mask & self.complement.mask or self.x_p.mask | self.complement.mask != X.mask:
            raise InternalInvariantViolation("partition sides do not split X")
        if 2 * self.x_p.sum > X.sum:
            raise InternalInvariantViolation("lighter side exceeds half of X")


@dataclass(frozen=True)
class PartitionStrategy:
    """Which Partition algorithm to run, plus its resource caps."""

    kind: StrategyKind = StrategyKind.MEET_IN_MIDDLE
    mim_cap: int = DEFAULT_MIM_CAP
    dp_cap: int = DEFAULT_DP_CAP

    @classmethod
    def from_name(cls, name: str, **caps) -> PartitionStrategy:
        return cls(StrategyKind(name), **caps)

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def guarantee(self) -> Tier:
        return Tier.APPROX if self.kind is StrategyKind.TRIM_APPROX else Tier.EXACT


def mim_cap_from_env(default: int = DEFAULT_MIM_CAP) -> int:
    raw = os.environ.get(MIM_CAP_ENV)
    return int(raw) if raw else default


def _items(inst: Instance, X: SubsetSel) -> list[tuple[int, int]]:
    if not X.mask:
        raise ValueError("partition input must be nonempty")
    return [(1 << i, inst.elements[i]) for i in X.indices()]


def _result(X: SubsetSel, lighter_mask: int, lighter_sum: int, tier, eps=None) -> PartitionResult:
    return PartitionResult(
        SubsetSel(lighter_mask, lighter_sum),
        SubsetSel(X.mask ^ lighter_mask, X.sum - lighter_sum),
        tier,
        eps,
    )


def _subset_sums(items: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """All (sum, mask) pairs over ``items``."""
    out = [(0, 0)]
    for bit, v in items:
        out += [(s + v, m | bit) for s, m in out]
    return out


def mim_partition_exact(inst: Instance, X: SubsetSel, cap: int = DEFAULT_MIM_CAP) -> PartitionResult:
    """Exact Partition by meet in the middle over the two halves of ``X``."""
    items = _items(inst, X)
    if len(items) > cap:
        raise SizeGuard(f"meet in the middle on {len(items)} elements exceeds cap {cap}")
    target = X.sum // 2
    half = len(items) // 2
    left = _subset_sums(items[:half])
    right = sorted(_subset_sums(items[half:]))
    # dedupe right sums, keeping the smallest mask for each
    r_sums: list[int] = []
    r_masks: list[int] = []
    for s, m in right:
        if not r_sums or r_sums[-1] != s:
            r_sums.append(s)
            r_masks.append(m)

    best_sum, best_mask = -1, 0
    for s, m in left:
        rem = target - s
        if rem < 0:
            continue
        j = bisect_right(r_sums, rem) - 1
        total = s + r_sums[j]
        mask = m | r_masks[j]
        if total > best_sum or (total == best_sum and mask < best_mask):
            best_sum, best_mask = total, mask
    return _result(X, best_mask, best_sum, Tier.EXACT)


def dp_partition_exact(inst: Instance, X: SubsetSel, cap: int = DEFAULT_DP_CAP) -> PartitionResult:
    """Exact Partition by the pseudopolynomial reachability table.

    Row ``k`` of the table is a bitset of the sums reachable with the first
    ``k`` elements of ``X``; the witness is rebuilt from the top element down,
    excluding an element whenever the remaining sum is reachable without it,
    which yields the smallest mask.
    """
    items = _items(inst, X)
    if X.sum > cap:
        raise CapacityGuard(f"DP table of size {X.sum} exceeds cap {cap}")
    target = X.sum // 2
    window = (1 << (target + 1)) - 1
    rows = [1]
    for _, v in items:
        rows.append((rows[-1] | (rows[-1] << v)) & window)
    best = rows[-1].bit_length() - 1

    mask, rem = 0, best
    for k in range(len(items), 0, -1):
        if not (rows[k - 1] >> rem) & 1:
            bit, v = items[k - 1]
            mask |= bit
            rem -= v
    if rem != 0:
        raise InternalInvariantViolation("DP witness reconstruction failed")
    return _result(X, mask, best, Tier.EXACT)


def approx_partition_trim(inst: Instance, X: SubsetSel, eps_prime: Epsilon) -> PartitionResult:
    """(1 - eps')-approximate Partition via list trimming.

    Classic subset-sum FPTAS against ``floor(sum(X)/2)``: after merging each
    element, drop entries within a factor (1 + eps'/(2|X|)) of the last kept
    one. The compounded loss over |X| rounds stays below 1/(1 - eps').
    """
    items = _items(inst, X)
    target = X.sum // 2
    # delta = p / (2 q |X|); keep y iff y > last * (1 + delta)
    dnum = eps_prime.p
    dden = 2 * eps_prime.q * len(items)

    entries = [(0, 0)]
    for bit, v in items:
        shifted = [(s + v, m | bit) for s, m in entries if s + v <= target]
        merged = sorted(entries + shifted)
        entries = []
        last = -1
        for s, m in merged:
            if s == last:
                continue
            if not entries or s * dden > last * (dden + dnum):
                entries.append((s, m))
                last = s
    s, m = entries[-1]
    return _result(X, m, s, Tier.APPROX, eps_prime)


def solve_partition(
    inst: Instance,
    X: SubsetSel,
    strategy: PartitionStrategy,
    eps_prime: Epsilon | None = None,
) -> PartitionResult:
    kind = strategy.kind
    if kind is StrategyKind.MEET_IN_MIDDLE:
        return mim_partition_exact(inst, X, strategy.mim_cap)
    if kind is StrategyKind.DYNAMIC_PROGRAMMING:
        return dp_partition_exact(inst, X, strategy.dp_cap)
    if eps_prime is None:
        raise ValueError("the trim strategy needs eps_prime")
    return approx_partition_trim(inst, X, eps_prime)

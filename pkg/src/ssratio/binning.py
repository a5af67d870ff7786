"""Large/small split, the bin grid, and collision detection over large subsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .core import CandidateSolution, Epsilon, Instance, SubsetSel, ratio_of
from .errors import InternalInvariantViolation


@dataclass(frozen=True)
class SplitResult:
    large: SubsetSel
    small: SubsetSel

    @property
    def small_count(self) -> int:
        return len(self.small)


def split_large_small(inst: Instance, eps: Epsilon) -> SplitResult:
    """Elements below ``eps * a_n`` are small; the rest are large.

    Since the instance is sorted the small elements form a prefix.
    """
    threshold = eps.p * inst.a_n
    m = 0
    while m < inst.n and inst.elements[m] * eps.q < threshold:
        m += 1
    small_mask = (1 << m) - 1
    return SplitResult(
        large=inst.select(inst.full_mask ^ small_mask),
        small=inst.select(small_mask),
    )


@dataclass(frozen=True)
class BinGrid:
    """Half-open cells of width ``eps**2 * a_n`` covering ``[0, n * a_n]``.

    Cell ``k`` is ``[k*l, (k+1)*l)``, so the index of a sum is
    ``floor(s * q**2 / (p**2 * a_n))``.
    """

    a_n: int
    p: int
    q: int
    n: int

    @classmethod
    def for_instance(cls, inst: Instance, eps: Epsilon) -> BinGrid:
        return cls(inst.a_n, eps.p, eps.q, inst.n)

    @property
    def width_num(self) -> int:
        return self.p * self.p * self.a_n

    @property
    def width_den(self) -> int:
        return self.q * self.q

    @property
    def bin_count(self) -> int:
        return -(-self.n * self.q * self.q // (self.p * self.p))

    def index(self, s: int) -> int:
        return s * self.width_den // self.width_num


@dataclass(frozen=True)
class Collision:
    first: SubsetSel
    second: SubsetSel


@dataclass(frozen=True)
class AllDistinct:
    entries: list[SubsetSel]


EnumerationOutcome = Union[Collision, AllDistinct]


def enumerate_large_subsets(inst: Instance, large: SubsetSel, grid: BinGrid) -> EnumerationOutcome:
    """Walk the subsets of ``large`` in ascending local-mask order.

    Stops at the first subset whose bin is already occupied. By pigeonhole
    that happens within ``bin_count + 2`` subsets, so the walk never
    materialises more than that even when ``large`` is big.
    """
    idx = large.indices()
    bits = [1 << i for i in idx]
    vals = [inst.elements[i] for i in idx]
    lows = {1 << j: j for j in range(len(idx))}

    sums = [0]
    masks = [0]
    seen = {grid.index(0): 0}
    for k in range(1, 1 << len(idx)):
        low = k & -k
        j = lows[low]
        s = sums[k ^ low] + vals[j]
        m = masks[k ^ low] | bits[j]
        sums.append(s)
        masks.append(m)
        b = grid.index(s)
        prev = seen.get(b)
        if prev is not None:
            return Collision(SubsetSel(masks[prev], sums[prev]), SubsetSel(m, s))
        seen[b] = k
    return AllDistinct([SubsetSel(m, s) for m, s in zip(masks, sums)])


def collision_solution(inst: Instance, first: SubsetSel, second: SubsetSel) -> CandidateSolution:
    """Turn two same-bin large subsets into a disjoint pair.

    Removing the common part keeps the sum difference below one bin width
    while the lighter remainder stays at least ``eps * a_n``.
    """
    if first.sum > second.sum:
        first, second = second, first
    if first.mask == second.mask:
        raise ValueError("collision needs two different subsets")
    common = first.mask & second.mask
    lighter = inst.select(first.mask ^ common)
    heavier = inst.select(second.mask ^ common)
    if not lighter.mask:
        raise InternalInvariantViolation("nested subsets share a bin; grid or enumeration is wrong")
    return CandidateSolution(lighter, heavier, ratio_of(lighter.sum, heavier.sum))

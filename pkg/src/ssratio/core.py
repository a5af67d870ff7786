"""Exact-arithmetic domain types.

Everything that enters a decision (ratios, error margins, thresholds) is an
integer or a pair of integers. Floats appear only in ``__float__`` and the
decimal renderings used for display.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    EmptyInput,
    InternalInvariantViolation,
    InvalidEpsilon,
    NonPositiveElement,
    ZeroSum,
)


@dataclass(frozen=True)
class Instance:
    """A sorted set of distinct positive integers."""

    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        if not els:
            raise EmptyInput("instance must contain at least one element")
        for x in els:
            if x <= 0:
                raise NonPositiveElement(f"element {x} is not positive")
        for a, b in zip(els, els[1:]):
            if a >= b:
                raise ValueError("instance elements must be strictly ascending")

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def a_n(self) -> int:
        return self.elements[-1]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def prefix(self, i: int) -> Instance:
        """The ``i`` smallest elements; indices are shared with ``self``."""
        return Instance(self.elements[:i])

    def select(self, mask: int) -> SubsetSel:
        return SubsetSel(mask, sum(self.elements[i] for i in mask_indices(mask)))

    def values(self, sel: SubsetSel) -> list[int]:
        return [self.elements[i] for i in sel.indices()]

    def __len__(self):
        return self.n


@dataclass(frozen=True)
class DuplicatePair:
    """Two equal input values; as singletons they form a ratio-1 solution.

    Indices refer to the sorted raw input.
    """

    value: int
    first_index: int
    second_index: int


def validate_instance(raw: Iterable[int]) -> Instance | DuplicatePair:
    """Sort ``raw`` into an :class:`Instance`.

    Returns a :class:`DuplicatePair` instead when a value repeats, because two
    equal singletons already solve the problem optimally.
    """
    values = sorted(int(x) for x in raw)
    if not values:
        raise EmptyInput("no input values")
    for x in values:
        if x <= 0:
            raise NonPositiveElement(f"element {x} is not positive")
    for i in range(len(values) - 1):
        if values[i] == values[i + 1]:
            return DuplicatePair(values[i], i, i + 1)
    return Instance(tuple(values))


def mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class SubsetSel:
    """A subset of instance indices, as a bitmask, with its element sum."""

    mask: int
    sum: int

    def indices(self) -> list[int]:
        return mask_indices(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    def check(self, inst: Instance) -> None:
        if self.mask >> inst.n:
            raise InternalInvariantViolation("mask selects indices outside the instance")
        if inst.select(self.mask).sum != self.sum:
            raise InternalInvariantViolation("stored sum disagrees with the mask")


@dataclass(frozen=True)
class Epsilon:
    """Error margin ``p/q`` in the open interval (0, 1), kept in lowest terms."""

    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if q <= 0 or p <= 0 or p >= q:
            raise InvalidEpsilon(f"epsilon {p}/{q} must satisfy 0 < p < q")
        g = math.gcd(p, q)
        object.__setattr__(self, "p", p // g)
        object.__setattr__(self, "q", q // g)

    @classmethod
    def parse(cls, text: str) -> Epsilon:
        """Accept ``"p/q"`` or an exact decimal literal such as ``"0.25"``."""
        text = text.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return cls(int(num), int(den))
            frac = Fraction(Decimal(text))
        except (ValueError, ArithmeticError) as exc:
            raise InvalidEpsilon(f"cannot parse epsilon {text!r}") from exc
        return cls(frac.numerator, frac.denominator)

    @classmethod
    def from_fraction(cls, f: Fraction) -> Epsilon:
        return cls(f.numerator, f.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"

    def __float__(self):
        return self.p / self.q


def derived_epsilon_prime(eps: Epsilon) -> Epsilon:
    """Largest Partition-level margin with (1+e')/(1-e') <= 1+eps.

    That is e' = eps / (2 + eps) = p / (2q + p).
    """
    return Epsilon(eps.p, 2 * eps.q + eps.p)


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class RatioValue:
    """A nonnegative rational ``num/den`` compared by cross-multiplication.

    The stored pair is not reduced, so ``RatioValue(6, 6)`` keeps the two sums
    that produced it; equality and ordering are by value.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0 or self.num < 0:
            raise ValueError(f"invalid ratio {self.num}/{self.den}")

    def __eq__(self, other):
        if not isinstance(other, RatioValue):
            return NotImplemented
        return compare_ratio(self, other) == 0

    def __lt__(self, other):
        if not isinstance(other, RatioValue):
            return NotImplemented
        return compare_ratio(self, other) < 0

    def __hash__(self):
        return hash(self.as_fraction())

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

    def reduced(self) -> RatioValue:
        g = math.gcd(self.num, self.den)
        return RatioValue(self.num // g, self.den // g)

    def decimal(self, digits: int = 12) -> str:
        """Display rendering rounded to ``digits`` decimal places."""
        with localcontext() as ctx:
            ctx.prec = digits + len(str(self.num // self.den)) + 2
            value = Decimal(self.num) / Decimal(self.den)
            return str(value.quantize(Decimal(1).scaleb(-digits)))

    def __float__(self):
        return self.num / self.den

    def __str__(self):
        r = self.reduced()
        return f"{r.num}/{r.den}"


def ratio_of(sum1: int, sum2: int) -> RatioValue:
    """max(sum1, sum2) / min(sum1, sum2)."""
    if sum1 <= 0 or sum2 <= 0:
        raise ZeroSum(f"ratio undefined for sums {sum1}, {sum2}")
    return RatioValue(max(sum1, sum2), min(sum1, sum2))


def compare_ratio(a: RatioValue, b: RatioValue) -> int:
    """-1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    lhs = a.num * b.den
    rhs = b.num * a.den
    return (lhs > rhs) - (lhs < rhs)


def within_factor(r: RatioValue, r_opt: RatioValue, eps: Epsilon) -> bool:
    """True iff r <= (1 + eps) * r_opt, decided in integers."""
    return r.num * r_opt.den * eps.q <= (eps.q + eps.p) * r_opt.num * r.den


@dataclass(frozen=True)
class CandidateSolution:
    """Two disjoint nonempty subsets and the ratio of their sums."""

    set1: SubsetSel
    set2: SubsetSel
    ratio: RatioValue

    @classmethod
    def of(cls, set1: SubsetSel, set2: SubsetSel) -> CandidateSolution:
        if set1.mask & set2.mask:
            raise InternalInvariantViolation("candidate sets overlap")
        return cls(set1, set2, ratio_of(set1.sum, set2.sum))

    def check(self, inst: Instance) -> None:
        """Recompute everything from the masks; raise on any inconsistency."""
        self.set1.check(inst)
        self.set2.check(inst)
        if self.set1.mask & self.set2.mask:
            raise InternalInvariantViolation("candidate sets overlap")
        if not self.set1.mask or not self.set2.mask:
            raise InternalInvariantViolation("candidate has an empty side")
        if ratio_of(self.set1.sum, self.set2.sum) != self.ratio:
            raise InternalInvariantViolation("stored ratio disagrees with the sums")


def partial_sums(values: Sequence[int]) -> list[int]:
    out = [0]
    for v in values:
        out.append(out[-1] + v)
    return out

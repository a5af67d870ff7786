"""Exhaustive exact solvers used as ground truth.

``brute_force_ssr`` walks all 3**n assignments of elements to
{set1, set2, neither}. The walk is vectorised in blocks of 3**12 with numpy;
float ratios only shortlist candidates, and the final choice is made in exact
integer arithmetic.
"""

from __future__ import annotations

import itertools

import numpy as np

from .core import CandidateSolution, Instance, RatioValue, SubsetSel, compare_ratio, ratio_of
from .errors import Infeasible, TooLarge

MAX_SSR_N = 20
MAX_PARTITION_N = 20
_BLOCK = 12
_INT64_SAFE = 2**62


def _assignment_tables(values, dtype):
    """Sums of set1 and set2 for every assignment, base-3 digit j <-> values[j]."""
    s1 = np.zeros(1, dtype=dtype)
    s2 = np.zeros(1, dtype=dtype)
    for v in values:
        s1 = np.concatenate([s1, s1 + v, s1])
        s2 = np.concatenate([s2, s2, s2 + v])
    return s1, s2


def _decode(code: int, n: int) -> tuple[int, int]:
    m1 = m2 = 0
    for j in range(n):
        code, d = divmod(code, 3)
        if d == 1:
            m1 |= 1 << j
        elif d == 2:
            m2 |= 1 << j
    return m1, m2


def brute_force_ssr(inst: Instance, require_max: bool = False) -> tuple[RatioValue, CandidateSolution]:
    """Exact optimum ratio and a witness.

    With ``require_max`` only solutions whose union contains ``a_n`` count.
    The witness lists the lighter side first (smaller mask on equal sums),
    and among equally good assignments the lowest base-3 code wins.
    """
    n = inst.n
    if n < 2:
        raise Infeasible("need at least two elements")
    if n > MAX_SSR_N:
        raise TooLarge(f"brute force limited to n <= {MAX_SSR_N}, got {n}")
    vals = list(inst.elements)
    dtype = np.int64 if sum(vals) < _INT64_SAFE else object

    inner = min(n, _BLOCK)
    outer = n - inner
    s1_in, s2_in = _assignment_tables(vals[:inner], dtype)
    stride = 3**inner
    codes_in = np.arange(stride, dtype=np.int64)
    last_inner_used = codes_in >= 3 ** (inner - 1)

    best_ratio: RatioValue | None = None
    best_code = -1
    for outer_code, digits in enumerate(itertools.product(range(3), repeat=outer)):
        digits = digits[::-1]  # product varies the last position fastest
        if require_max and outer and digits[-1] == 0:
            continue
        off1 = sum(v for v, d in zip(vals[inner:], digits) if d == 1)
        off2 = sum(v for v, d in zip(vals[inner:], digits) if d == 2)
        s1 = s1_in + off1
        s2 = s2_in + off2
        lo = np.minimum(s1, s2)
        hi = np.maximum(s1, s2)
        ok = lo > 0
        if require_max and not outer:
            ok &= last_inner_used
        cand = np.flatnonzero(ok)
        if cand.size == 0:
            continue
        approx = hi[cand].astype(np.float64) / lo[cand].astype(np.float64)
        fmin = approx.min()
        short = cand[approx <= fmin * (1 + 1e-9)]
        for c in short.tolist():
            r = RatioValue(int(hi[c]), int(lo[c]))
            code = c + stride * outer_code
            if best_ratio is None or compare_ratio(r, best_ratio) < 0:
                best_ratio, best_code = r, code
            elif compare_ratio(r, best_ratio) == 0 and code < best_code:
                best_code = code
    if best_ratio is None:
        raise Infeasible("no feasible pair of subsets")

    m1, m2 = _decode(best_code, n)
    a, b = inst.select(m1), inst.select(m2)
    if (b.sum, b.mask) < (a.sum, a.mask):
        a, b = b, a
    witness = CandidateSolution(a, b, ratio_of(a.sum, b.sum))
    return witness.ratio, witness


def brute_force_partition(inst: Instance, X: SubsetSel) -> int:
    """Largest subset sum of ``X`` not exceeding half of ``sum(X)``."""
    idx = X.indices()
    if len(idx) > MAX_PARTITION_N:
        raise TooLarge(f"brute force limited to {MAX_PARTITION_N} elements, got {len(idx)}")
    sums = [0]
    for i in idx:
        v = inst.elements[i]
        sums += [s + v for s in sums]
    total = sum(inst.elements[i] for i in idx)
    return max(s for s in sums if 2 * s <= total)

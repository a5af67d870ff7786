"""The three Partition back-ends on the same subset.

Exact solvers agree on the optimum (and on the witness, thanks to the
smallest-mask tie rule); the trimming scheme lands within (1 - eps') of it.
"""

import random
import time

from ssratio import Epsilon, Instance, approx_partition_trim, dp_partition_exact, mim_partition_exact

rng = random.Random(0)
inst = Instance(tuple(sorted(rng.sample(range(1, 10**5), 22))))
X = inst.select(inst.full_mask)
print(f"{inst.n} elements, total {X.sum}, half {X.sum / 2}")

for name, solve in [
    ("meet in the middle", lambda: mim_partition_exact(inst, X)),
    ("dp bitset", lambda: dp_partition_exact(inst, X)),
    ("trim eps'=1/21", lambda: approx_partition_trim(inst, X, Epsilon(1, 21))),
    ("trim eps'=1/3", lambda: approx_partition_trim(inst, X, Epsilon(1, 3))),
]:
    t0 = time.perf_counter()
    res = solve()
    ms = (time.perf_counter() - t0) * 1000
    print(f"{name:>20}: lighter side {res.x_p.sum:>8}  ({res.tier.value}, {ms:.1f} ms)")

"""Observed approximation quality against the exact optimum, per epsilon.

The slack column is (r / r_opt - 1) / eps; the guarantee says it never
exceeds 1.
"""

import random

import numpy as np

from ssratio import Epsilon, Instance, PartitionStrategy, brute_force_ssr, ssr

rng = random.Random(42)
instances = [Instance(tuple(sorted(rng.sample(range(1, 10**6), rng.randint(4, 11))))) for _ in range(40)]
optima = [brute_force_ssr(inst)[0] for inst in instances]

print(f"{'eps':>6} {'strategy':>8} {'mean slack':>11} {'max slack':>10}")
for eps in [Epsilon(1, 10), Epsilon(1, 4), Epsilon(1, 2), Epsilon(9, 10)]:
    for name in ("mim", "trim"):
        strategy = PartitionStrategy.from_name(name)
        slack = np.array([
            float((ssr(inst, eps, strategy).ratio.as_fraction() / r.as_fraction() - 1) / eps.as_fraction())
            for inst, r in zip(instances, optima)
        ])
        print(f"{str(eps):>6} {name:>8} {slack.mean():>11.4f} {slack.max():>10.4f}")

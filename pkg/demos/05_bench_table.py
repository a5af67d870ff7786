"""A small timing table through the same code path as ``ssratio bench``."""

from ssratio import Epsilon
from ssratio.cli import bench_runs, bench_summary, run_bench

runs = bench_runs(sizes=[20, 50, 100], epsilons=[Epsilon(1, 4), Epsilon(1, 10)], strategies=["mim", "trim"],
                  trials=2, seed=0, max_value=10**6, mim_cap=40)
rows = run_bench(runs)
for row in bench_summary(rows):
    print(row)

"""Command line: ``solve``, ``oracle``, ``gen`` and ``bench``.

Exit codes: 0 success, 2 malformed input, 3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .constrained import SolveStats
from .core import DuplicatePair, Epsilon, Instance, RatioValue, derived_epsilon_prime, validate_instance
from .driver import ssr
from .errors import GuardError, InputError, SizeGuard, SSRError
from .oracle import brute_force_ssr
from .partition import PartitionStrategy, StrategyKind, mim_cap_from_env

EXIT_INPUT = 2
EXIT_GUARD = 3

BENCH_COLUMNS = [
    "n", "epsilon", "strategy", "trial", "seed", "elapsed_ms", "ratio_num", "ratio_den",
    "large_count", "bin_count", "partition_calls", "collision_exit", "status",
]


def read_instance_text(text: str) -> list[int]:
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values.append(int(line))
        except ValueError:
            raise InputError(f"line {lineno}: {line!r} is not an integer") from None
    return values


def read_instance_file(path: str) -> list[int]:
    if path == "-":
        return read_instance_text(sys.stdin.read())
    try:
        return read_instance_text(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def write_instance(values, out) -> None:
    out.write("".join(f"{v}\n" for v in sorted(values)))


def generate_values(n: int, max_value: int, seed: int) -> list[int]:
    """``n`` distinct integers drawn uniformly from [1, max_value], sorted."""
    if n < 2:
        raise InputError("n must be at least 2")
    if max_value < n:
        raise InputError(f"max_value {max_value} < n {n}: cannot draw distinct values")
    return sorted(random.Random(seed).sample(range(1, max_value + 1), n))


def _ratio_fields(r: RatioValue) -> dict:
    rr = r.reduced()
    return {"ratio": {"num": rr.num, "den": rr.den}, "ratio_approx": r.decimal()}


def solve_report(values: list[int], eps: Epsilon, strategy: PartitionStrategy, trim_fallback=False) -> dict:
    t0 = time.perf_counter()
    checked = validate_instance(values)
    used = strategy
    if isinstance(checked, DuplicatePair):
        r = RatioValue(checked.value, checked.value)
        idx1, idx2 = [checked.first_index], [checked.second_index]
        vals1 = vals2 = [checked.value]
        n = len(values)
    else:
        inst = checked
        try:
            sol = ssr(inst, eps, strategy)
        except SizeGuard:
            if not trim_fallback:
                raise
            used = PartitionStrategy(StrategyKind.TRIM_APPROX, strategy.mim_cap, strategy.dp_cap)
            sol = ssr(inst, eps, used)
        r = sol.ratio
        idx1, idx2 = sol.set1.indices(), sol.set2.indices()
        vals1, vals2 = inst.values(sol.set1), inst.values(sol.set2)
        n = inst.n
    elapsed = (time.perf_counter() - t0) * 1000
    return {
        "n": n,
        "epsilon": str(eps),
        "epsilon_prime": str(derived_epsilon_prime(eps)),
        "strategy": used.name,
        **_ratio_fields(r),
        "set1_indices": idx1,
        "set2_indices": idx2,
        "set1_values": vals1,
        "set2_values": vals2,
        "elapsed_ms": round(elapsed, 3),
    }


def oracle_report(values: list[int], require_max: bool) -> dict:
    t0 = time.perf_counter()
    checked = validate_instance(values)
    if isinstance(checked, DuplicatePair):
        # equal singletons are optimal; with require_max they must use a_n
        vals = sorted(values)
        if not require_max or checked.value == vals[-1]:
            r = RatioValue(checked.value, checked.value)
            idx1, idx2 = [checked.first_index], [checked.second_index]
            vals1 = vals2 = [checked.value]
        else:
            raise InputError("require-max on a multiset is not supported")
        n = len(values)
    else:
        inst = checked
        r, sol = brute_force_ssr(inst, require_max=require_max)
        idx1, idx2 = sol.set1.indices(), sol.set2.indices()
        vals1, vals2 = inst.values(sol.set1), inst.values(sol.set2)
        n = inst.n
    return {
        "n": n,
        "require_max": require_max,
        **_ratio_fields(r),
        "set1_indices": idx1,
        "set2_indices": idx2,
        "set1_values": vals1,
        "set2_values": vals2,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3),
    }


def format_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "ratio":
            value = f"{value['num']}/{value['den']}"
        elif isinstance(value, list):
            value = " ".join(map(str, value))
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(report) + "\n")
    else:
        sys.stdout.write(format_text(report))


@dataclass(frozen=True)
class BenchRun:
    n: int
    epsilon: str
    strategy: str
    trial: int
    seed: int
    max_value: int
    mim_cap: int


def run_seed(base_seed: int, n: int, trial: int) -> int:
    """Instance seed for one (n, trial) cell; independent of epsilon and strategy."""
    return (base_seed * 1_000_003 + n) * 1_000_003 + trial


def bench_one(run: BenchRun) -> dict:
    row = dict.fromkeys(BENCH_COLUMNS, "")
    row.update(n=run.n, epsilon=run.epsilon, strategy=run.strategy, trial=run.trial, seed=run.seed)
    eps = Epsilon.parse(run.epsilon)
    inst = Instance(tuple(generate_values(run.n, run.max_value, run.seed)))
    strategy = PartitionStrategy.from_name(run.strategy, mim_cap=run.mim_cap)
    stats = SolveStats()
    t0 = time.perf_counter()
    try:
        sol = ssr(inst, eps, strategy, stats)
    except GuardError as exc:
        row["status"] = f"guard:{type(exc).__name__}"
    except SSRError as exc:
        row["status"] = f"error:{type(exc).__name__}"
    else:
        r = sol.ratio.reduced()
        row.update(ratio_num=r.num, ratio_den=r.den, status="ok")
    row.update(
        elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
        large_count=stats.large_count,
        bin_count=stats.bin_count,
        partition_calls=stats.partition_calls,
        collision_exit=int(stats.collision_exit),
    )
    return row


def bench_runs(sizes, epsilons, strategies, trials, seed, max_value, mim_cap) -> list[BenchRun]:
    runs = []
    for n in sizes:
        for e in epsilons:
            for s in strategies:
                for trial in range(trials):
                    runs.append(BenchRun(n, str(e), s, trial, run_seed(seed, n, trial), max_value, mim_cap))
    return runs


def bench_summary(rows: list[dict]) -> list[dict]:
    groups: dict[tuple, list[dict]] = {}
    for row in rows:
        groups.setdefault((row["n"], row["epsilon"], row["strategy"]), []).append(row)
    out = []
    for (n, e, s), grp in groups.items():
        ok = [r for r in grp if r["status"] == "ok"]
        worst = max((RatioValue(r["ratio_num"], r["ratio_den"]) for r in ok), default=None)
        out.append({
            "n": n, "epsilon": e, "strategy": s, "runs": len(grp), "ok": len(ok),
            "mean_elapsed_ms": round(sum(r["elapsed_ms"] for r in grp) / len(grp), 3),
            "worst_ratio": str(worst) if worst is not None else "",
            "collision_exits": sum(r["collision_exit"] for r in grp),
        })
    return out


def run_bench(runs: list[BenchRun], parallel: int = 1) -> list[dict]:
    if parallel > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            return list(pool.map(bench_one, runs))
    return [bench_one(r) for r in runs]


def _csv_text(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ssratio", description="Subset Sum Ratio approximation")
    sub = parser.add_subparsers(dest="command", required=True)
    strategies = [k.value for k in StrategyKind]

    p = sub.add_parser("solve", help="approximate an instance file")
    p.add_argument("input", help="one positive integer per line, '-' for stdin")
    p.add_argument("--epsilon", "-e", required=True, help="error margin as p/q (or an exact decimal)")
    p.add_argument("--strategy", "-s", choices=strategies, default="mim")
    p.add_argument("--format", "-f", choices=["text", "json"], default="text")
    p.add_argument("--mim-cap", type=int, default=None, help="meet-in-the-middle size cap (default: $SSR_MIM_CAP or 40)")
    p.add_argument("--trim-fallback", action="store_true", help="retry with trim if the mim cap trips")

    p = sub.add_parser("oracle", help="exact optimum by exhaustion (n <= 20)")
    p.add_argument("input")
    p.add_argument("--require-max", action="store_true", help="only solutions using the largest element")
    p.add_argument("--format", "-f", choices=["text", "json"], default="text")

    p = sub.add_parser("gen", aliases=["generate"], help="write a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-value", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o", default="-")

    p = sub.add_parser("bench", help="timing and ratio table over random instances")
    p.add_argument("--sizes", type=_int_list, required=True, help="comma separated, e.g. 20,40,80")
    p.add_argument("--epsilons", type=_str_list, default=["1/4"])
    p.add_argument("--strategies", type=_str_list, default=["trim"])
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-value", type=int, default=10**6)
    p.add_argument("--mim-cap", type=int, default=None)
    p.add_argument("--output", "-o", default="-")
    p.add_argument("--format", "-f", choices=["csv", "json"], default="csv")
    p.add_argument("--parallel", type=int, default=1, help="worker processes")
    return parser


def _cmd_solve(args) -> None:
    eps = Epsilon.parse(args.epsilon)
    cap = args.mim_cap if args.mim_cap is not None else mim_cap_from_env()
    strategy = PartitionStrategy.from_name(args.strategy, mim_cap=cap)
    values = read_instance_file(args.input)
    _emit(solve_report(values, eps, strategy, args.trim_fallback), args.format)


def _cmd_oracle(args) -> None:
    _emit(oracle_report(read_instance_file(args.input), args.require_max), args.format)


def _cmd_gen(args) -> None:
    values = generate_values(args.n, args.max_value, args.seed)
    if args.output == "-":
        write_instance(values, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            write_instance(values, fh)


def _cmd_bench(args) -> None:
    for s in args.strategies:
        if s not in {k.value for k in StrategyKind}:
            raise InputError(f"unknown strategy {s!r}")
    epsilons = [Epsilon.parse(e) for e in args.epsilons]
    for n in args.sizes:
        if n < 2 or n > args.max_value:
            raise InputError(f"size {n} incompatible with max value {args.max_value}")
    cap = args.mim_cap if args.mim_cap is not None else mim_cap_from_env()
    runs = bench_runs(args.sizes, epsilons, args.strategies, args.trials, args.seed, args.max_value, cap)
    rows = run_bench(runs, args.parallel)
    summary = bench_summary(rows)

    if args.format == "json":
        body = json.dumps({"rows": rows, "summary": summary}, indent=1) + "\n"
        summary_text = None
    else:
        body = _csv_text(rows, BENCH_COLUMNS)
        summary_text = _csv_text(summary, list(summary[0]) if summary else [])
    if args.output == "-":
        sys.stdout.write(body)
        if summary_text:
            sys.stderr.write(summary_text)
    else:
        Path(args.output).write_text(body, encoding="utf-8")
        if summary_text:
            sys.stdout.write(summary_text)


COMMANDS = {
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "gen": _cmd_gen,
    "generate": _cmd_gen,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GuardError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SSRError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

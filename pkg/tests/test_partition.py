import random
from itertools import combinations

import pytest

from ssratio import (
    Epsilon,
    Instance,
    PartitionStrategy,
    Tier,
    approx_partition_trim,
    brute_force_partition,
    dp_partition_exact,
    mim_partition_exact,
    solve_partition,
)
from ssratio.errors import CapacityGuard, SizeGuard
from ssratio.partition import mim_cap_from_env

EXACT = [mim_partition_exact, dp_partition_exact]


def whole(values):
    inst = Instance(tuple(values))
    return inst, inst.select(inst.full_mask)


def min_mask_optimum(inst, X):
    """Smallest mask among subsets of X reaching the Partition optimum."""
    idx = X.indices()
    best = None
    for r in range(len(idx) + 1):
        for combo in combinations(idx, r):
            s = sum(inst.elements[i] for i in combo)
            if 2 * s > X.sum:
                continue
            mask = sum(1 << i for i in combo)
            key = (-s, mask)
            if best is None or key < best:
                best = key
    return -best[0], best[1]


@pytest.mark.parametrize("solver", EXACT)
@pytest.mark.parametrize(
    "values, opt, lighter",
    [((1, 4, 9, 16), 14, 0b0111), ((7,), 0, 0), ((2, 4, 6), 6, 0b011), ((3, 5, 8), 8, 0b011)],
)
def test_exact_examples(solver, values, opt, lighter):
    inst, X = whole(values)
    assert brute_force_partition(inst, X) == opt
    res = solver(inst, X)
    assert res.tier is Tier.EXACT
    assert res.x_p.sum == opt
    assert res.x_p.mask == lighter
    res.check(inst, X)


def test_dp_singleton():
    inst, X = whole((1,))
    assert dp_partition_exact(inst, X).x_p.sum == 0


def test_trim_examples():
    inst, X = whole((1, 4, 9, 16))
    res = approx_partition_trim(inst, X, Epsilon(1, 5))
    assert res.tier is Tier.APPROX and res.eps_prime == Epsilon(1, 5)
    assert 12 <= res.x_p.sum <= 14
    inst, X = whole((7,))
    assert approx_partition_trim(inst, X, Epsilon(1, 3)).x_p.sum == 0
    inst, X = whole((2, 4, 6))
    assert approx_partition_trim(inst, X, Epsilon(1, 21)).x_p.sum == 6


def test_partition_of_proper_subset():
    inst = Instance((1, 2, 3, 10, 20))
    X = inst.select(0b11010)  # {2, 10, 20}
    for solver in EXACT:
        res = solver(inst, X)
        assert res.x_p.sum == 12 and res.x_p.mask == 0b01010
        assert res.complement.mask == 0b10000


def test_empty_input_rejected():
    inst = Instance((1, 2))
    with pytest.raises(ValueError):
        mim_partition_exact(inst, inst.select(0))


def test_guards():
    inst, X = whole(range(1, 12))
    with pytest.raises(SizeGuard):
        mim_partition_exact(inst, X, cap=10)
    with pytest.raises(CapacityGuard):
        dp_partition_exact(inst, X, cap=65)
    assert dp_partition_exact(inst, X, cap=66).x_p.sum == 33


def test_mim_cap_env(monkeypatch):
    monkeypatch.setenv("SSR_MIM_CAP", "7")
    assert mim_cap_from_env() == 7
    monkeypatch.delenv("SSR_MIM_CAP")
    assert mim_cap_from_env() == 40


def test_solve_partition_dispatch():
    inst, X = whole((1, 4, 9, 16))
    for name in ("mim", "dp"):
        res = solve_partition(inst, X, PartitionStrategy.from_name(name))
        assert res.tier is Tier.EXACT and res.x_p.sum == 14
    res = solve_partition(inst, X, PartitionStrategy.from_name("trim"), Epsilon(1, 5))
    assert res.tier is Tier.APPROX and 12 <= res.x_p.sum <= 14
    inst, X = whole((7,))
    for name in ("mim", "dp", "trim"):
        assert solve_partition(inst, X, PartitionStrategy.from_name(name), Epsilon(1, 2)).x_p.sum == 0
    with pytest.raises(ValueError):
        solve_partition(inst, X, PartitionStrategy.from_name("trim"))
    assert PartitionStrategy.from_name("trim").guarantee is Tier.APPROX


def random_subsets(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, 18)
        inst = Instance(tuple(sorted(rng.sample(range(1, 10**4 + 1), n))))
        picked = rng.sample(range(n), rng.randint(1, min(n, 16)))
        yield inst, inst.select(sum(1 << i for i in picked))


def test_exact_solvers_agree_with_enumeration_including_ties():
    for inst, X in random_subsets(150, 1):
        opt, mask = min_mask_optimum(inst, X)
        for solver in EXACT:
            res = solver(inst, X)
            res.check(inst, X)
            assert (res.x_p.sum, res.x_p.mask) == (opt, mask)
            if X.sum % 2:
                assert 2 * res.x_p.sum < X.sum < 2 * res.complement.sum


@pytest.mark.parametrize("eps_prime", [Epsilon(1, 3), Epsilon(1, 5), Epsilon(1, 21)])
def test_trim_soundness(eps_prime):
    ep = eps_prime.as_fraction()
    for inst, X in random_subsets(150, 2):
        opt = brute_force_partition(inst, X)
        res = approx_partition_trim(inst, X, eps_prime)
        res.check(inst, X)
        assert (1 - ep) * opt <= res.x_p.sum <= opt


def test_trim_on_wide_range_values():
    # values spanning many magnitudes stress the multiplicative trimming
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(2, 14)
        vals = sorted({int(10 ** rng.uniform(0, 9)) for _ in range(n)})
        inst, X = whole(vals)
        opt = brute_force_partition(inst, X)
        for eps_prime in (Epsilon(1, 3), Epsilon(1, 21)):
            got = approx_partition_trim(inst, X, eps_prime).x_p.sum
            assert (1 - eps_prime.as_fraction()) * opt <= got <= opt

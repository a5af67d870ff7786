import random

import pytest

from ssratio import Instance

ACCEPTANCE_LINES: list[str] = []


def record_acceptance(criterion: str, passed: bool, detail: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_instance(rng: random.Random, n: int, max_value: int) -> Instance:
    return Instance(tuple(sorted(rng.sample(range(1, max_value + 1), n))))


def mixed_instance(rng: random.Random, n: int) -> Instance:
    """Alternate between uniform, log-uniform, dense and few-large-many-small draws."""
    kind = rng.randrange(4)
    while True:
        if kind == 0:
            vals = {rng.randint(1, 10**6) for _ in range(n)}
        elif kind == 1:
            vals = {int(10 ** rng.uniform(0, 6)) for _ in range(n)}
        elif kind == 2:
            vals = {rng.randint(1, 50) for _ in range(n)}
        else:
            big = min(3, n)
            vals = {rng.randint(1, 1000) for _ in range(n - big)}
            vals |= {rng.randint(10**5, 10**6) for _ in range(big)}
        if len(vals) == n:
            return Instance(tuple(sorted(vals)))


@pytest.fixture
def rng():
    return random.Random(20240607)

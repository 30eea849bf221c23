import random

import pytest

from quinemc.cube import ProblemSpec

EXAMPLE = ProblemSpec(4, (4, 5, 6, 9, 11, 12, 13, 14), (0, 1, 3, 7))
EXAMPLE_SPEC = "vars=4; minterms=0,1,3,4,5,6,7,9,11,12,13,14; dontcares=0,1,3,7"
CYCLIC = ProblemSpec(3, (1, 2, 3, 4, 5, 6))


def random_problem(rng: random.Random, n: int) -> ProblemSpec:
    """Each minterm independently onset, don't-care or offset."""
    onset, dc = [], []
    for m in range(2**n):
        k = rng.randrange(3)
        if k == 1:
            onset.append(m)
        elif k == 2:
            dc.append(m)
    return ProblemSpec(n, tuple(onset), tuple(dc))


def all_problems(n):
    """All 3^(2^n) onset/don't-care/offset assignments."""
    import itertools

    for labels in itertools.product(range(3), repeat=2**n):
        yield ProblemSpec(
            n,
            tuple(m for m, k in enumerate(labels) if k == 1),
            tuple(m for m, k in enumerate(labels) if k == 2),
        )


@pytest.fixture
def example():
    return EXAMPLE


# criterion number -> (passed, detail); filled in by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        passed, detail = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")

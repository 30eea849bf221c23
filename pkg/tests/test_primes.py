import random

import pytest

from conftest import EXAMPLE, all_problems, random_problem
from quinemc import oracle
from quinemc.cube import Implicant, ProblemSpec, combine, covers, make_implicant, ones_count
from quinemc.errors import DomainError
from quinemc.primes import (
    ReductionColumn,
    generate_primes,
    group_by_ones,
    reduction_columns,
    reduction_pass,
)

COLUMN_1 = "000X 0X00 00X1 0X01 X001 010X 01X0 X100 0X11 X011 01X1 X101 011X X110 10X1 1X01 110X 11X0".split()
COLUMN_2 = "0X0X 0XX1 X0X1 XX01 01XX X10X X1X0".split()


def strs(imps):
    return [str(i) for i in imps]


def test_group_by_ones_example():
    col = group_by_ones(EXAMPLE)
    groups = {g: strs(members) for g, members in enumerate(col.groups) if members}
    assert groups == {
        0: ["0000"],
        1: ["0001", "0100"],
        2: ["0011", "0101", "0110", "1001", "1100"],
        3: ["0111", "1011", "1101", "1110"],
    }
    assert not col.ticked


def test_group_by_ones_trivial():
    assert strs(group_by_ones(ProblemSpec(1, (0,))).groups[0]) == ["0"]
    col = group_by_ones(ProblemSpec(3, (7,)))
    assert [strs(g) for g in col.groups] == [[], [], [], ["111"]]


def test_reduction_pass_example_column_1():
    col0 = group_by_ones(EXAMPLE)
    col1 = reduction_pass(col0)
    assert strs(col1.terms()) == COLUMN_1
    assert col0.ticked == set(col0.terms())
    assert col1.index == 1


def test_reduction_pass_example_column_2():
    col1 = reduction_pass(group_by_ones(EXAMPLE))
    raw = sum(
        combine(a, b) is not None
        for g in range(len(col1.groups) - 1)
        for a in col1.groups[g]
        for b in col1.groups[g + 1]
    )
    assert raw == 14
    col2 = reduction_pass(col1)
    assert strs(col2.terms()) == COLUMN_2
    assert col1.ticked == set(col1.terms())
    assert reduction_pass(col2) is None
    assert not col2.ticked


def test_reduction_pass_nothing_to_pair():
    col = ReductionColumn(0, 4, [[make_implicant(0, 4)], [], [], [], []])
    assert reduction_pass(col) is None


def test_operands_ticked_even_for_duplicate_results():
    # 0X00 + 0X01 only reproduces 0X0X already made from 000X + 010X
    col1 = reduction_pass(group_by_ones(EXAMPLE))
    reduction_pass(col1)
    assert Implicant.from_string("0X00") in col1.ticked
    assert Implicant.from_string("0X01") in col1.ticked


@pytest.mark.parametrize(
    "problem, expected",
    [
        (EXAMPLE, COLUMN_2),
        (ProblemSpec(2, (0, 1, 2, 3)), ["XX"]),
        (ProblemSpec(3, (3, 5, 6, 7)), ["11X", "1X1", "X11"]),
    ],
)
def test_generate_primes_examples(problem, expected):
    assert sorted(strs(generate_primes(problem))) == sorted(expected)


def test_generate_primes_order_is_deterministic():
    # larger cubes first, then by value, then by dash mask
    assert strs(generate_primes(EXAMPLE)) == COLUMN_2
    assert strs(generate_primes(ProblemSpec(3, (0, 1, 2, 3, 7)))) == ["0XX", "X11"]


def test_generate_primes_empty():
    with pytest.raises(DomainError):
        generate_primes(ProblemSpec(3, ()))


def check_prime_properties(problem):
    primes = generate_primes(problem)
    care = problem.care_set
    assert len(set(primes)) == len(primes)
    for p in primes:
        assert all(covers(p, m) for m in care if covers(p, m))
        assert {m for m in range(2**problem.n) if covers(p, m)} <= care
        for pos in range(problem.n):
            bit = 1 << pos
            if p.dashes & bit:
                continue
            bigger = Implicant(p.n, p.value & ~bit, p.dashes | bit)
            assert any(covers(bigger, m) for m in range(2**problem.n) if m not in care)
    for m in care:
        assert any(covers(p, m) for p in primes)
    cols = reduction_columns(problem)
    assert len(cols) <= problem.n + 1
    for col in cols:
        terms = col.terms()
        assert len(set(terms)) == len(terms)
        for g, group in enumerate(col.groups):
            for imp in group:
                assert bin(imp.dashes).count("1") == col.index
                assert ones_count(imp) == g
    return primes


@pytest.mark.parametrize("n", [1, 2, 3])
def test_primes_match_oracle_exhaustive(n):
    for problem in all_problems(n):
        if not problem.care_set:
            continue
        primes = check_prime_properties(problem)
        assert set(primes) == set(oracle.naive_primes(problem))


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_primes_match_oracle_random(n):
    rng = random.Random(1000 + n)
    for _ in range(60 if n <= 6 else 10):
        problem = random_problem(rng, n)
        if not problem.care_set:
            continue
        primes = check_prime_properties(problem) if n <= 6 else generate_primes(problem)
        assert set(primes) == set(oracle.naive_primes(problem))

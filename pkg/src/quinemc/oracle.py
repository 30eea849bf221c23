"""Brute-force reference implementations for checking the minimizer.

Nothing here reuses the bit-mask machinery of :mod:`quinemc.cube`; cubes are
handled digit by digit as strings so a bug in one path cannot hide in the
other.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable

from .cube import Implicant, ProblemSpec
from .errors import DomainError, GuardRefusal

MAX_ENUM_VARS = 12
MAX_SUBSET_PRIMES = 24


@dataclass(frozen=True)
class Verdict:
    violations: tuple[tuple[str, object], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _digits(index: int, n: int) -> str:
    return format(index, f"0{n}b")


def eval_implicant(imp: Implicant, assignment: int) -> bool:
    if not 0 <= assignment < 2**imp.n:
        raise DomainError(f"assignment {assignment} out of range for {imp.n} variables")
    for c, a in zip(imp.to_string(), _digits(assignment, imp.n)):
        if c != "X" and c != a:
            return False
    return True


def eval_cover(implicants: Iterable[Implicant], assignment: int) -> bool:
    return any(eval_implicant(imp, assignment) for imp in implicants)


def check_equivalence(cover, problem: ProblemSpec) -> Verdict:
    """Evaluate ``cover`` (a Cover or iterable of implicants) on every assignment."""
    implicants = list(cover)
    for imp in implicants:
        if imp.n != problem.n:
            raise DomainError(f"cover width {imp.n} does not match problem width {problem.n}")
    onset, dc = set(problem.onset), set(problem.dontcare)
    bad = []
    for m in range(2**problem.n):
        value = eval_cover(implicants, m)
        if m in onset and not value:
            bad.append(("uncovered_onset", m))
        elif value and m not in onset and m not in dc:
            bad.append(("covers_offset", m))
    return Verdict(tuple(bad))


def _cube_minterms(cube: str) -> list[int]:
    options = [("0", "1") if c == "-" else (c,) for c in cube]
    return [int("".join(bits), 2) for bits in product(*options)]


def _enumerate_cubes(n: int):
    # lexicographic over (dashes, value)
    for dashes in range(2**n):
        dash_digits = _digits(dashes, n)
        for value in range(2**n):
            if value & dashes:
                continue
            yield "".join("-" if d == "1" else v for d, v in zip(dash_digits, _digits(value, n)))


def naive_primes(problem: ProblemSpec, max_vars: int = MAX_ENUM_VARS) -> list[Implicant]:
    n = problem.n
    if n > max_vars:
        raise GuardRefusal(f"naive_primes refuses n={n} (cap {max_vars})")
    care = set(problem.onset) | set(problem.dontcare)
    inside = set()
    order = []
    for cube in _enumerate_cubes(n):
        if all(m in care for m in _cube_minterms(cube)):
            inside.add(cube)
            order.append(cube)
    primes = []
    for cube in order:
        grows = any(
            cube[:k] + "-" + cube[k + 1 :] in inside for k in range(n) if cube[k] != "-"
        )
        if not grows:
            primes.append(Implicant.from_string(cube))
    return primes


def _onset_masks(primes: list[Implicant], onset: tuple[int, ...]) -> list[int]:
    masks = []
    for p in primes:
        mask = 0
        for j, m in enumerate(onset):
            if eval_implicant(p, m):
                mask |= 1 << j
        masks.append(mask)
    return masks


def _undominated(masks: list[int]) -> list[int]:
    """Distinct nonzero masks not strictly contained in another mask."""
    uniq = sorted({m for m in masks if m}, key=lambda m: -bin(m).count("1"))
    keep: list[int] = []
    for m in uniq:
        if not any(m | k == k for k in keep):
            keep.append(m)
    return keep


def _has_k_cover(masks: list[int], k: int, full: int) -> bool:
    # k-subsets in index order, skipping branches whose remaining masks
    # cannot complete the cover
    suffix = [0] * (len(masks) + 1)
    for i in range(len(masks) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]

    def pick(start: int, left: int, acc: int) -> bool:
        if acc == full:
            return True
        if left == 0 or (acc | suffix[start]) != full:
            return False
        for i in range(start, len(masks) - left + 1):
            if pick(i + 1, left - 1, acc | masks[i]):
                return True
        return False

    return pick(0, k, 0)


def exhaustive_min_cover_size(
    problem: ProblemSpec,
    max_primes: int = MAX_SUBSET_PRIMES,
    max_vars: int = MAX_ENUM_VARS,
) -> int:
    """Smallest number of primes covering the onset, by subset enumeration.

    A prime whose onset coverage is contained in another prime's can be
    swapped for it without growing a cover, so only undominated coverage
    sets are enumerated; the cap applies to those.
    """
    if not problem.onset:
        return 0
    primes = naive_primes(problem, max_vars)
    masks = _undominated(_onset_masks(primes, problem.onset))
    if len(masks) > max_primes:
        raise GuardRefusal(
            f"subset search refuses {len(masks)} candidate primes (cap {max_primes})"
        )
    full = (1 << len(problem.onset)) - 1
    for k in range(1, len(masks) + 1):
        if _has_k_cover(masks, k, full):
            return k
    raise AssertionError("prime set does not cover the onset")


def min_covers(problem: ProblemSpec, max_primes: int = MAX_SUBSET_PRIMES) -> list[frozenset[Implicant]]:
    """All minimum-cardinality prime covers (small instances only)."""
    if not problem.onset:
        return [frozenset()]
    primes = naive_primes(problem)
    masks = _onset_masks(primes, problem.onset)
    useful = [(p, m) for p, m in zip(primes, masks) if m]
    if len(useful) > max_primes:
        raise GuardRefusal(f"cover enumeration refuses {len(useful)} useful primes (cap {max_primes})")
    full = (1 << len(problem.onset)) - 1
    for k in range(1, len(useful) + 1):
        found = []
        for combo in combinations(useful, k):
            acc = 0
            for _, m in combo:
                acc |= m
            if acc == full:
                found.append(frozenset(p for p, _ in combo))
        if found:
            return found
    raise AssertionError("prime set does not cover the onset")


def ilp_min_cover_size(problem: ProblemSpec, max_vars: int = MAX_ENUM_VARS) -> int:
    """Minimum cover size via a 0/1 integer program over the brute-force primes.

    Used where the prime count is past the subset-enumeration cap.
    """
    import numpy as np
    from scipy.optimize import Bounds, LinearConstraint, milp

    if not problem.onset:
        return 0
    primes = naive_primes(problem, max_vars)
    a = np.array(
        [[1.0 if eval_implicant(p, m) else 0.0 for p in primes] for m in problem.onset]
    )
    res = milp(
        c=np.ones(len(primes)),
        constraints=LinearConstraint(a, lb=np.ones(len(problem.onset)), ub=np.inf),
        integrality=np.ones(len(primes)),
        bounds=Bounds(0, 1),
    )
    if not res.success:
        raise AssertionError(f"covering program failed: {res.message}")
    return int(round(res.fun))


def min_cover_size(problem: ProblemSpec) -> int:
    """Subset enumeration when within its cap, otherwise the integer program."""
    try:
        return exhaustive_min_cover_size(problem)
    except GuardRefusal:
        return ilp_min_cover_size(problem)

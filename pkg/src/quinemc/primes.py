"""Column-by-column reduction producing the complete set of prime implicants."""
from __future__ import annotations

from dataclasses import dataclass, field

from .cube import Implicant, ProblemSpec, combine, make_implicant, ones_count, sort_implicants
from .errors import DomainError


@dataclass
class ReductionColumn:
    """One column of the reduction table.

    ``groups[g]`` lists the terms whose value has ``g`` ones, in insertion
    order. ``ticked`` collects terms that were paired into the next column.
    """

    index: int
    n: int
    groups: list[list[Implicant]]
    ticked: set[Implicant] = field(default_factory=set)

    def terms(self) -> list[Implicant]:
        return [imp for group in self.groups for imp in group]

    def entries(self) -> list[tuple[Implicant, bool]]:
        return [(imp, imp in self.ticked) for imp in self.terms()]

    def unticked(self) -> list[Implicant]:
        return [imp for imp in self.terms() if imp not in self.ticked]

    def __len__(self) -> int:
        return sum(len(g) for g in self.groups)


def group_by_ones(problem: ProblemSpec) -> ReductionColumn:
    groups: list[list[Implicant]] = [[] for _ in range(problem.n + 1)]
    for m in sorted(problem.care_set):
        imp = make_implicant(m, problem.n)
        groups[ones_count(imp)].append(imp)
    return ReductionColumn(0, problem.n, groups)


def reduction_pass(col: ReductionColumn) -> ReductionColumn | None:
    """Pair terms of adjacent groups; ticks ``col`` in place.

    Returns the next column, or None when nothing combined.
    """
    nxt: list[list[Implicant]] = [[] for _ in range(col.n + 1)]
    seen: set[Implicant] = set()
    full = (1 << col.n) - 1
    for g in range(len(col.groups) - 1):
        lower, upper = col.groups[g], col.groups[g + 1]
        if not lower or not upper:
            continue
        # partners of a are a with one free 0-digit raised to 1; visit them
        # in the upper group's order so results match a nested scan
        position = {imp: i for i, imp in enumerate(upper)}
        for a in lower:
            partners = []
            free = full & ~(a.value | a.dashes)
            while free:
                bit = free & -free
                free ^= bit
                b = Implicant(a.n, a.value | bit, a.dashes)
                if b in position:
                    partners.append(b)
            partners.sort(key=position.__getitem__)
            for b in partners:
                c = combine(a, b)
                col.ticked.add(a)
                col.ticked.add(b)
                if c not in seen:
                    seen.add(c)
                    nxt[g].append(c)
    if not seen:
        return None
    return ReductionColumn(col.index + 1, col.n, nxt)


def reduction_columns(problem: ProblemSpec) -> list[ReductionColumn]:
    """Run reduction to exhaustion and return every column, ticks filled in."""
    if not problem.care_set:
        raise DomainError("cannot generate primes for an empty onset and don't-care set")
    cols = [group_by_ones(problem)]
    while True:
        nxt = reduction_pass(cols[-1])
        if nxt is None:
            return cols
        cols.append(nxt)


def generate_primes(problem: ProblemSpec) -> list[Implicant]:
    primes = {imp for col in reduction_columns(problem) for imp in col.unticked()}
    return sort_implicants(primes)

"""Prime implicant chart, essential extraction and exact minimum cover."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from .cube import Implicant, ProblemSpec, covers, expand_minterms, literal_count
from .primes import ReductionColumn, reduction_columns


@dataclass(frozen=True)
class PIChart:
    columns: tuple[int, ...]
    rows: tuple[Implicant, ...]
    marks: tuple[tuple[bool, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Implicant], columns: Sequence[int]) -> PIChart:
        columns = tuple(sorted(columns))
        marks = tuple(tuple(covers(r, c) for c in columns) for r in rows)
        return cls(columns, tuple(rows), marks)

    @property
    def coverage_count(self) -> dict[int, int]:
        return {c: sum(m[j] for m in self.marks) for j, c in enumerate(self.columns)}

    def covering_rows(self, column: int) -> list[Implicant]:
        j = self.columns.index(column)
        return [r for r, m in zip(self.rows, self.marks) if m[j]]

    def row_columns(self, row: Implicant) -> list[int]:
        i = self.rows.index(row)
        return [c for c, hit in zip(self.columns, self.marks[i]) if hit]

    def restrict(self, rows: Sequence[Implicant], columns: Sequence[int]) -> PIChart:
        keep_r = [self.rows.index(r) for r in rows]
        keep_c = [self.columns.index(c) for c in columns]
        marks = tuple(tuple(self.marks[i][j] for j in keep_c) for i in keep_r)
        return PIChart(tuple(self.columns[j] for j in keep_c), tuple(self.rows[i] for i in keep_r), marks)

    @property
    def empty(self) -> bool:
        return not self.columns


@dataclass(frozen=True)
class Cover:
    n: int
    implicants: tuple[Implicant, ...] = ()

    @property
    def cost(self) -> tuple[int, int]:
        """(number of terms, total literal count)."""
        return len(self.implicants), sum(literal_count(i) for i in self.implicants)

    @property
    def constant(self) -> int | None:
        if not self.implicants:
            return 0
        full = (1 << self.n) - 1
        if any(i.dashes == full for i in self.implicants):
            return 1
        return None

    def covered_minterms(self) -> set[int]:
        return {m for imp in self.implicants for m in expand_minterms(imp)}

    def __len__(self) -> int:
        return len(self.implicants)

    def __iter__(self):
        return iter(self.implicants)


@dataclass(frozen=True)
class MinimizeReport:
    problem: ProblemSpec
    primes: tuple[Implicant, ...]
    chart: PIChart
    essentials: tuple[Implicant, ...]
    reduced: PIChart
    cover: Cover
    columns: tuple[ReductionColumn, ...] = field(default=(), compare=False, repr=False)

    @property
    def cost(self) -> tuple[int, int]:
        return self.cover.cost

    @property
    def constant(self) -> int | None:
        return self.cover.constant


def build_chart(primes: Sequence[Implicant], problem: ProblemSpec) -> PIChart:
    # don't-care minterms never become columns
    return PIChart.from_rows(primes, problem.onset)


def extract_essentials(chart: PIChart) -> tuple[list[Implicant], PIChart]:
    order = {r: i for i, r in enumerate(chart.rows)}
    essentials: set[Implicant] = set()
    current = chart
    while True:
        found: list[Implicant] = []
        for c, count in current.coverage_count.items():
            if count == 1:
                (row,) = current.covering_rows(c)
                if row not in found:
                    found.append(row)
        if not found:
            break
        essentials.update(found)
        gone = {c for r in found for c in current.row_columns(r)}
        current = current.restrict(
            [r for r in current.rows if r not in essentials],
            [c for c in current.columns if c not in gone],
        )
    return sorted(essentials, key=order.__getitem__), current


class _CoverSearch:
    """Exact weighted unate covering over a chart given as bit masks.

    Row weight is ``big + literals`` so one integer objective orders covers
    by (size, literal count). Lower bounds come from pairwise disjoint
    columns and, on larger subproblems, the LP relaxation.
    """

    LP_MIN_COLUMNS = 10

    def __init__(self, row_masks: list[int], weights: list[int], ncols: int):
        self.row_masks = row_masks
        self.weights = weights
        self.ncols = ncols
        self.col_masks = [0] * ncols
        for r, mask in enumerate(row_masks):
            rest = mask
            while rest:
                bit = rest & -rest
                rest ^= bit
                self.col_masks[bit.bit_length() - 1] |= 1 << r
        self.dense = None

    def _propagate(self, uncovered: int, chosen: list[int], cost: int, excluded: int):
        """Take rows forced by single-candidate columns; None if infeasible."""
        while True:
            forced = -1
            rest = uncovered
            while rest:
                bit = rest & -rest
                rest ^= bit
                cand = self.col_masks[bit.bit_length() - 1] & ~excluded
                if not cand:
                    return None
                if not cand & (cand - 1):
                    forced = cand.bit_length() - 1
                    break
            if forced < 0:
                return uncovered, chosen, cost
            chosen = chosen + [forced]
            cost += self.weights[forced]
            uncovered &= ~self.row_masks[forced]

    def _disjoint_bound(self, uncovered: int, excluded: int) -> float:
        cands = []
        rest = uncovered
        while rest:
            bit = rest & -rest
            rest ^= bit
            rm = self.col_masks[bit.bit_length() - 1] & ~excluded
            if not rm:
                return math.inf
            cands.append((rm.bit_count(), rm))
        cands.sort()
        used = bound = 0
        for _, rm in cands:
            if rm & used:
                continue
            used |= rm
            low = None
            while rm:
                bit = rm & -rm
                rm ^= bit
                w = self.weights[bit.bit_length() - 1]
                if low is None or w < low:
                    low = w
            bound += low
        return bound

    def _lp(self, uncovered: int, excluded: int):
        """LP relaxation value and row values; None when not worth solving."""
        cols = [j for j in range(self.ncols) if uncovered >> j & 1]
        if len(cols) < self.LP_MIN_COLUMNS:
            return None
        touching = 0
        for j in cols:
            touching |= self.col_masks[j]
        touching &= ~excluded
        rows = [r for r in range(len(self.row_masks)) if touching >> r & 1]
        if self.dense is None:
            self.dense = np.array(
                [[m >> j & 1 for j in range(self.ncols)] for m in self.row_masks], dtype=float
            ).T
        a = self.dense[np.ix_(cols, rows)]
        res = linprog(
            np.array([self.weights[r] for r in rows], dtype=float),
            A_ub=-a,
            b_ub=-np.ones(len(cols)),
            bounds=(0, 1),
            method="highs",
        )
        if res.status != 0:
            return None
        return res.fun, dict(zip(rows, res.x))

    def _bound(self, uncovered: int, excluded: int):
        bound = self._disjoint_bound(uncovered, excluded)
        if bound == math.inf:
            return bound, None
        lp = self._lp(uncovered, excluded)
        if lp is not None:
            # solver error scales with the objective; rounding down stays a valid bound
            bound = max(bound, math.ceil(lp[0] - 1e-6 * max(1.0, abs(lp[0]))))
        return bound, lp

    def optimum(self, incumbent: int) -> int:
        """Minimum total weight, or ``incumbent`` if nothing beats it."""
        best = [incumbent]

        def node(uncovered, chosen, cost, excluded):
            state = self._propagate(uncovered, chosen, cost, excluded)
            if state is None:
                return
            uncovered, chosen, cost = state
            if not uncovered:
                best[0] = min(best[0], cost)
                return
            bound, lp = self._bound(uncovered, excluded)
            if cost + bound >= best[0]:
                return
            if lp is not None and all(abs(x - round(x)) < 1e-9 for x in lp[1].values()):
                best[0] = min(best[0], cost + round(lp[0]))
                return
            # branch on the uncovered column with the fewest candidate rows
            pick = None
            rest = uncovered
            while rest:
                bit = rest & -rest
                rest ^= bit
                cand = self.col_masks[bit.bit_length() - 1] & ~excluded
                if pick is None or cand.bit_count() < pick.bit_count():
                    pick = cand
            order = []
            while pick:
                bit = pick & -pick
                pick ^= bit
                order.append(bit.bit_length() - 1)
            if lp is not None:
                order.sort(key=lambda r: -lp[1].get(r, 0.0))
            tried = 0
            for r in order:
                node(uncovered & ~self.row_masks[r], chosen + [r], cost + self.weights[r], excluded | tried)
                tried |= 1 << r

        node((1 << self.ncols) - 1, [], 0, 0)
        return best[0]

    def first_at(self, target: int) -> list[int]:
        """Lexicographically smallest row set covering everything at weight ``target``.

        Rows are decided in index order, inclusion first, so the first cover
        reached is the smallest in sorted-tuple order.
        """
        nrows = len(self.row_masks)

        def node(i, uncovered, chosen, cost, excluded):
            if not uncovered:
                return chosen if cost == target else None
            if cost + self._bound(uncovered, excluded)[0] > target:
                return None
            while i < nrows and (excluded >> i & 1 or not self.row_masks[i] & uncovered):
                i += 1
            if i == nrows:
                return None
            found = node(i + 1, uncovered & ~self.row_masks[i], chosen + [i], cost + self.weights[i], excluded)
            if found is not None:
                return found
            return node(i + 1, uncovered, chosen, cost, excluded | 1 << i)

        found = node(0, (1 << self.ncols) - 1, [], 0, 0)
        if found is None:
            raise AssertionError("no cover at the optimal weight")
        return found


def solve_reduced(reduced: PIChart) -> list[Implicant]:
    """Exact minimum-cardinality cover of the chart's columns.

    Ties break on total literal count, then on the lexicographically
    smallest set of row positions.
    """
    if reduced.empty:
        return []
    live = [i for i, m in enumerate(reduced.marks) if any(m)]
    rows = [reduced.rows[i] for i in live]
    row_masks = []
    for i in live:
        mask = 0
        for j, hit in enumerate(reduced.marks[i]):
            if hit:
                mask |= 1 << j
        row_masks.append(mask)
    lits = [literal_count(r) for r in rows]
    big = sum(lits) + 1
    weights = [big + k for k in lits]
    search = _CoverSearch(row_masks, weights, len(reduced.columns))

    # greedy incumbent
    uncovered = (1 << len(reduced.columns)) - 1
    incumbent = 0
    while uncovered:
        r = max(range(len(rows)), key=lambda k: ((row_masks[k] & uncovered).bit_count(), -lits[k], -k))
        incumbent += weights[r]
        uncovered &= ~row_masks[r]
    target = search.optimum(incumbent)
    return [rows[r] for r in search.first_at(target)]


def minimize(problem: ProblemSpec) -> MinimizeReport:
    if not problem.onset:
        empty = PIChart((), (), ())
        return MinimizeReport(problem, (), empty, (), empty, Cover(problem.n))
    columns = reduction_columns(problem)
    primes = sorted({imp for col in columns for imp in col.unticked()}, key=Implicant.sort_key)
    chart = build_chart(primes, problem)
    essentials, reduced = extract_essentials(chart)
    picked = solve_reduced(reduced)
    cover = Cover(problem.n, tuple(essentials) + tuple(picked))
    return MinimizeReport(
        problem=problem,
        primes=tuple(primes),
        chart=chart,
        essentials=tuple(essentials),
        reduced=reduced,
        cover=cover,
        columns=tuple(columns),
    )

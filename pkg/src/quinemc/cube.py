"""Cube (implicant) representation and the single-step combination rule.

An implicant over ``n`` variables is stored as two integers read as
``n``-digit binary numbers: ``value`` holds the fixed digits and ``dashes``
marks eliminated variables. Variable 0 is the leftmost printed digit, i.e.
the most significant bit, so ``value`` of a minterm cube equals the minterm
index itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError


@dataclass(frozen=True, order=False)
class Implicant:
    n: int
    value: int
    dashes: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"variable count must be >= 1, got {self.n}")
        full = (1 << self.n) - 1
        if self.value & ~full or self.dashes & ~full:
            raise DomainError(f"implicant bits exceed width {self.n}")
        if self.value & self.dashes:
            raise DomainError("eliminated positions must carry value 0")

    @classmethod
    def from_string(cls, text: str) -> Implicant:
        """Parse X-notation (``'X0X1'``); ``'-'`` is accepted for ``'X'``."""
        value = dashes = 0
        for ch in text:
            value <<= 1
            dashes <<= 1
            if ch in "xX-":
                dashes |= 1
            elif ch == "1":
                value |= 1
            elif ch != "0":
                raise DomainError(f"invalid cube character {ch!r} in {text!r}")
        return cls(len(text), value, dashes)

    def to_string(self, dash: str = "X") -> str:
        out = []
        for pos in range(self.n - 1, -1, -1):
            bit = 1 << pos
            if self.dashes & bit:
                out.append(dash)
            else:
                out.append("1" if self.value & bit else "0")
        return "".join(out)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Implicant({self.to_string()!r})"

    def sort_key(self) -> tuple[int, int, int]:
        # larger cubes first, then by value, then by dash mask
        return (-self.dashes.bit_count(), self.value, self.dashes)

    def literal(self, var: int) -> int | None:
        """Polarity of variable ``var`` in this cube (1, 0) or None if eliminated."""
        bit = 1 << (self.n - 1 - var)
        if self.dashes & bit:
            return None
        return 1 if self.value & bit else 0


def make_implicant(minterm: int, n: int) -> Implicant:
    if n < 1:
        raise DomainError(f"variable count must be >= 1, got {n}")
    if not 0 <= minterm < (1 << n):
        raise DomainError(f"minterm {minterm} out of range for {n} variables")
    return Implicant(n, minterm, 0)


def combine(a: Implicant, b: Implicant) -> Implicant | None:
    """Merge two cubes differing in exactly one fixed digit, else None."""
    if a.n != b.n:
        raise DomainError(f"cannot combine cubes of width {a.n} and {b.n}")
    if a.dashes != b.dashes:
        return None
    diff = a.value ^ b.value
    if diff == 0 or diff & (diff - 1):
        return None
    return Implicant(a.n, a.value & ~diff, a.dashes | diff)


def covers(imp: Implicant, minterm: int) -> bool:
    if not 0 <= minterm < (1 << imp.n):
        raise DomainError(f"minterm {minterm} out of range for {imp.n} variables")
    return (minterm & ~imp.dashes) == imp.value


def expand_minterms(imp: Implicant) -> list[int]:
    out = []
    sub = imp.dashes
    while True:
        out.append(imp.value | sub)
        if sub == 0:
            break
        sub = (sub - 1) & imp.dashes
    out.reverse()
    return out


def ones_count(imp: Implicant) -> int:
    return imp.value.bit_count()


def literal_count(imp: Implicant) -> int:
    return imp.n - imp.dashes.bit_count()


def sort_implicants(imps: Iterable[Implicant]) -> list[Implicant]:
    return sorted(imps, key=Implicant.sort_key)


@dataclass(frozen=True)
class ProblemSpec:
    """Single-output function given by disjoint onset and don't-care lists."""

    n: int
    onset: tuple[int, ...]
    dontcare: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"variable count must be >= 1, got {self.n}")
        object.__setattr__(self, "onset", tuple(self.onset))
        object.__setattr__(self, "dontcare", tuple(self.dontcare))
        size = 1 << self.n
        for name, seq in (("onset", self.onset), ("dontcare", self.dontcare)):
            for i, m in enumerate(seq):
                if not 0 <= m < size:
                    raise DomainError(f"{name} minterm {m} out of range for {self.n} variables")
                if i and m <= seq[i - 1]:
                    raise DomainError(f"{name} indices must be strictly ascending")
        if set(self.onset) & set(self.dontcare):
            raise DomainError("onset and dontcare must be disjoint")

    @classmethod
    def from_sets(cls, n: int, onset: Iterable[int], dontcare: Iterable[int] = ()) -> ProblemSpec:
        return cls(n, tuple(sorted(set(onset))), tuple(sorted(set(dontcare))))

    @property
    def care_set(self) -> frozenset[int]:
        """Minterms where the function may be 1 (onset plus don't-cares)."""
        return frozenset(self.onset) | frozenset(self.dontcare)

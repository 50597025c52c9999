"""Fraction-free (Bareiss) elimination, level by level.

Level ``k`` holds a^{(k)}_{i,j} for i > k, j > k:

    a^{(k)}_{i,j} = (a^{(k-1)}_{k,k} a^{(k-1)}_{i,j} - a^{(k-1)}_{i,k} a^{(k-1)}_{k,j})
                    / a^{(k-2)}_{k-1,k-1}

with a^{(0)} = A and a^{(-1)}_{0,0} = 1. Each value is the determinant of
rows 1..k,i and columns 1..k,j of A, so every division is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import StructurallySingular, UsageError, ZeroPivot
from .matrix import Matrix
from .scalar import exact_div

STRICT = "strict"
SWAP = "swap"
PIVOTING_MODES = (STRICT, SWAP)


def check_pivoting(pivoting: str) -> str:
    if pivoting == "row-swap":
        return SWAP
    if pivoting not in PIVOTING_MODES:
        raise UsageError(f"pivoting must be one of {PIVOTING_MODES}, got {pivoting!r}")
    return pivoting


class Table:
    """Trailing block of a level: entries (i, j) with i > row0, j > col0 (1-based)."""

    __slots__ = ("row0", "col0", "data")

    def __init__(self, row0: int, col0: int, data: list[list[int]]):
        self.row0 = row0
        self.col0 = col0
        self.data = data

    def __call__(self, i: int, j: int) -> int:
        if i <= self.row0 or j <= self.col0:
            raise KeyError(f"({i}, {j}) not stored in block below ({self.row0}, {self.col0})")
        return self.data[i - self.row0 - 1][j - self.col0 - 1]

    def __eq__(self, other):
        if not isinstance(other, Table):
            return NotImplemented
        return (self.row0, self.col0, self.data) == (other.row0, other.col0, other.data)

    def __repr__(self):
        return f"Table(row0={self.row0}, col0={self.col0}, data={self.data!r})"

    def items(self):
        for r, row in enumerate(self.data, self.row0 + 1):
            for c, v in enumerate(row, self.col0 + 1):
                yield (r, c), v

    def swap_rows(self, i: int, r: int) -> None:
        a, b = i - self.row0 - 1, r - self.row0 - 1
        self.data[a], self.data[b] = self.data[b], self.data[a]


@dataclass
class FfLevel:
    k: int
    table: Table
    # a^{(k-1)}_{k,k}, the pivot that produced this level; 1 at level 0
    pivot_prev: int

    def entry(self, i: int, j: int) -> int:
        return self.table(i, j)


@dataclass(frozen=True)
class Permutation:
    """``mapping[i-1]`` is the row of the original matrix now sitting at row ``i``."""

    mapping: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def sign(self) -> int:
        seen = [False] * len(self.mapping)
        s = 1
        for start in range(len(self.mapping)):
            if seen[start]:
                continue
            length = 0
            x = start
            while not seen[x]:
                seen[x] = True
                x = self.mapping[x] - 1
                length += 1
            if length % 2 == 0:
                s = -s
        return s

    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.mapping, 1))

    def swap(self, i: int, r: int) -> "Permutation":
        m = list(self.mapping)
        m[i - 1], m[r - 1] = m[r - 1], m[i - 1]
        return Permutation(tuple(m))

    def apply(self, A: Matrix) -> Matrix:
        return A.permute_rows(self.mapping)


def initial_level(A: Matrix) -> FfLevel:
    if not A.is_integer():
        raise UsageError("fraction-free elimination needs an integer matrix")
    return FfLevel(0, Table(0, 0, [list(r) for r in A.rows]), 1)


def bareiss_entry(pivot: int, a_ij: int, a_ik: int, a_kj: int, divisor: int) -> int:
    return exact_div(pivot * a_ij - a_ik * a_kj, divisor)


def ff_step(prev: FfLevel, prev2_pivot: int, k: int) -> FfLevel:
    """Build level ``k`` from level ``k - 1``; ``prev2_pivot`` is a^{(k-2)}_{k-1,k-1}."""
    if prev.k != k - 1:
        raise UsageError(f"ff_step({k}) needs level {k - 1}, got level {prev.k}")
    t = prev.table
    pivot = t(k, k)
    if pivot == 0:
        raise ZeroPivot(k, "a^(k-1)_{k,k} = 0")
    nrows = t.row0 + len(t.data)
    ncols = t.col0 + (len(t.data[0]) if t.data else 0)
    row_k = t.data[k - t.row0 - 1]
    data = []
    for i in range(k + 1, nrows + 1):
        row_i = t.data[i - t.row0 - 1]
        a_ik = row_i[k - t.col0 - 1]
        data.append([
            bareiss_entry(pivot, row_i[j - t.col0 - 1], a_ik, row_k[j - t.col0 - 1], prev2_pivot)
            for j in range(k + 1, ncols + 1)
        ])
    return FfLevel(k, Table(k, k, data), pivot)


def find_pivot_row(t: Table, k: int) -> int | None:
    """First row r >= k with a nonzero entry in column k of level k-1."""
    nrows = t.row0 + len(t.data)
    for r in range(k, nrows + 1):
        if t(r, k) != 0:
            return r
    return None


def ff_eliminate(
    A: Matrix, pivoting: str = STRICT, keep_levels: bool = True
) -> tuple[list[FfLevel], Permutation]:
    """Run Bareiss elimination for k = 1..min(n, m).

    In swap mode a zero pivot at step k is replaced by the first nonzero
    entry below it; the swap is applied to every stored level as well, so
    the returned levels are exactly those of ``perm.apply(A)``.
    With ``keep_levels=False`` only the last level is kept.
    """
    pivoting = check_pivoting(pivoting)
    perm = Permutation.identity(A.n)
    levels = [initial_level(A)]
    for k in range(1, min(A.n, A.m) + 1):
        prev = levels[-1]
        if prev.table(k, k) == 0:
            if pivoting == STRICT:
                raise ZeroPivot(k, f"leading principal minor of order {k} vanishes")
            r = find_pivot_row(prev.table, k)
            if r is None:
                raise StructurallySingular(k)
            perm = perm.swap(k, r)
            for lvl in levels:
                lvl.table.swap_rows(k, r)
        nxt = ff_step(prev, prev.pivot_prev, k)
        if keep_levels:
            levels.append(nxt)
        else:
            levels = [nxt]
    return levels, perm


def det_from_levels(levels: Sequence[FfLevel], perm: Permutation, n: int) -> int:
    """Determinant of a square n x n input from its full level sequence."""
    last = levels[-1]
    if last.k != n:
        raise UsageError("elimination did not reach level n")
    return perm.sign * last.pivot_prev

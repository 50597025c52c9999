"""Gauss-Jordan elimination with every entry written as a ratio of minors.

After step k, an entry (i, j) with j > k of the reduced matrix A^k is

    i > k        a^{(k)}_{i,j}   / a^{(k-1)}_{k,k}
    i = k        a^{(k-1)}_{k,j} / a^{(k-1)}_{k,k}
    i = k - 1    a^{(k)}_{i,j}   / a^{(k-1)}_{k,k}
    i <= k - 2   (-1)^(k-i+1) a^{(k)}_{i,j} / a^{(k-1)}_{k,k}

where for i < k the numerator is the negated k x k minor on rows 1..k,
columns 1..k without i, then j. Those "above" quantities obey their own
fraction-free recursions, so the whole trace is computed with integer
arithmetic and one division per entry. Three routes are provided:

* ``gj_reduce``: the fraction-free recursions;
* ``gj_closed_form_entry``: explicit determinants of submatrices of A;
* ``gj_rational_oracle``: plain Gauss-Jordan over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bareiss import (
    STRICT,
    FfLevel,
    Permutation,
    Table,
    bareiss_entry,
    check_pivoting,
    find_pivot_row,
    initial_level,
)
from .errors import (
    InvalidCase,
    IndexOutOfBounds,
    NonExactDivision,
    StructurallySingular,
    ZeroPivot,
)
from .matrix import (
    DetFn,
    Matrix,
    bordered_minor_above,
    bordered_minor_below,
    det_bareiss,
    first_vanishing_leading_minor,
)


@dataclass
class GjLevel:
    """Fraction-free tables for step k.

    ``below(i, j)`` = a^{(k)}_{i,j} for i > k, j > k.
    ``above(i, j)`` = a^{(k)}_{i,j} for i < k, j > k.
    ``pivot`` = a^{(k-1)}_{k,k} (1 at level 0).
    """

    k: int
    below: Table
    above: Table
    pivot: int

    def as_ff_level(self) -> FfLevel:
        return FfLevel(self.k, self.below, self.pivot)


@dataclass
class GjStep:
    k: int
    matrix: Matrix
    level: Optional[GjLevel] = None


@dataclass
class GjTrace:
    source: Matrix
    steps: list[GjStep]
    permutation: Permutation
    level0: Optional[GjLevel] = None

    @property
    def final(self) -> Matrix:
        return self.steps[-1].matrix if self.steps else self.source

    def step(self, k: int) -> GjStep:
        s = self.steps[k - 1]
        assert s.k == k
        return s

    def ratio(self, i: int, j: int, k: int) -> "RatioForm":
        """Decomposition of entry (i, j), j > k, of A^k from the stored tables."""
        if j <= k:
            raise InvalidCase(f"only entries with j > k have a ratio form (j={j}, k={k})")
        prev = self.level0 if k == 1 else self.step(k - 1).level
        cur = self.step(k).level
        if prev is None or cur is None:
            raise InvalidCase("trace was computed without fraction-free levels")
        return ratio_from_levels(cur, prev, i, j)


def eq11_sign(i: int, k: int) -> int:
    """Sign in front of a^{(k)}_{i,j} for rows above the pivot, piecewise form."""
    if i == k - 1:
        return 1
    if i <= k - 2:
        return -1 if (k - i + 1) % 2 else 1
    raise InvalidCase(f"sign only defined for i < k (i={i}, k={k})")


def level_zero(A: Matrix) -> GjLevel:
    ff = initial_level(A)
    return GjLevel(0, ff.table, Table(0, 0, []), 1)


def gj_ff_step(level_km1: GjLevel, level_km2: Optional[GjLevel], k: int) -> GjLevel:
    """Fraction-free tables of step k from those of steps k-1 and k-2.

    Rows below the pivot use the Bareiss update. Rows i <= k-2 use

        a^{(k)}_{i,j} = -(a^{(k-1)}_{k,k} a^{(k-1)}_{i,j} - a^{(k-1)}_{i,k} a^{(k-1)}_{k,j})
                        / a^{(k-2)}_{k-1,k-1}

    and row k-1 reaches back two levels:

        a^{(k)}_{k-1,j} = (a^{(k-2)}_{k,k} a^{(k-2)}_{k-1,j} - a^{(k-2)}_{k-1,k} a^{(k-2)}_{k,j})
                          / a^{(k-3)}_{k-2,k-2}
    """
    L1, L2 = level_km1, level_km2
    if L1.k != k - 1:
        raise InvalidCase(f"step {k} needs level {k - 1}, got {L1.k}")
    if k >= 2 and (L2 is None or L2.k != k - 2):
        raise InvalidCase(f"step {k} needs level {k - 2}")
    b1 = L1.below
    pivot = b1(k, k)
    if pivot == 0:
        raise ZeroPivot(k, "a^(k-1)_{k,k} = 0")
    nrows = b1.row0 + len(b1.data)
    ncols = b1.col0 + len(b1.data[0])
    divisor = L1.pivot
    cols = range(k + 1, ncols + 1)

    below = [
        [bareiss_entry(pivot, b1(i, j), b1(i, k), b1(k, j), divisor) for j in cols]
        for i in range(k + 1, nrows + 1)
    ]

    above = []
    a1 = L1.above
    for i in range(1, k - 1):
        above.append([-bareiss_entry(pivot, a1(i, j), a1(i, k), b1(k, j), divisor) for j in cols])
    if k >= 2:
        b2 = L2.below
        above.append([bareiss_entry(b2(k, k), b2(k - 1, j), b2(k - 1, k), b2(k, j), L2.pivot) for j in cols])

    return GjLevel(k, Table(k, k, below), Table(0, k, above), pivot)


def ratio_from_levels(level_k: GjLevel, level_km1: GjLevel, i: int, j: int) -> "RatioForm":
    """Entry (i, j), j > k, of A^k as a ratio of fraction-free table values."""
    k = level_k.k
    if i > k:
        return RatioForm(i, j, k, "below", 1, level_k.below(i, j), level_k.pivot)
    if i == k:
        return RatioForm(i, j, k, "pivot-row", 1, level_km1.below(k, j), level_k.pivot)
    case = "adjacent-above" if i == k - 1 else "far-above"
    return RatioForm(i, j, k, case, eq11_sign(i, k), level_k.above(i, j), level_k.pivot)


def matrix_from_levels(level_k: GjLevel, level_km1: GjLevel, n: int, m: int) -> Matrix:
    """Assemble A^k: identity block for j <= k, one division per entry for j > k."""
    k = level_k.k
    rows = []
    for i in range(1, n + 1):
        row = [int(i == j) for j in range(1, min(k, m) + 1)]
        row.extend(ratio_from_levels(level_k, level_km1, i, j).value for j in range(k + 1, m + 1))
        rows.append(row)
    return Matrix.from_rows(rows)


def _swap_matrix_rows(M: Matrix, i: int, r: int) -> Matrix:
    mapping = list(range(1, M.n + 1))
    mapping[i - 1], mapping[r - 1] = r, i
    return M.permute_rows(mapping)


def gj_reduce(A: Matrix, pivoting: str = STRICT, keep_levels: bool = True) -> GjTrace:
    """Gauss-Jordan trace A^1..A^r (r = min(n, m)) via the fraction-free recursions.

    Only two previous levels are needed at any time. In swap mode a row swap
    at step k is also applied to the retained levels and the already-emitted
    A^l, so the trace is exactly the strict trace of ``permutation.apply(A)``.
    """
    pivoting = check_pivoting(pivoting)
    n, m = A.shape
    perm = Permutation.identity(n)
    L2: Optional[GjLevel] = None
    L1 = L0 = level_zero(A)
    steps: list[GjStep] = []
    for k in range(1, min(n, m) + 1):
        if L1.below(k, k) == 0:
            if pivoting == STRICT:
                raise ZeroPivot(k, f"leading principal minor of order {k} vanishes")
            r = find_pivot_row(L1.below, k)
            if r is None:
                raise StructurallySingular(k)
            perm = perm.swap(k, r)
            retained = [L0, *(s.level for s in steps if s.level is not None), L2, L1]
            for table in {id(lv.below): lv.below for lv in retained if lv is not None}.values():
                table.swap_rows(k, r)
            for s in steps:
                s.matrix = _swap_matrix_rows(s.matrix, k, r)
        Lk = gj_ff_step(L1, L2, k)
        Ak = matrix_from_levels(Lk, L1, n, m)
        steps.append(GjStep(k, Ak, Lk if keep_levels else None))
        L2, L1 = L1, Lk
    return GjTrace(A, steps, perm, L0 if keep_levels else None)


def gj_rational_step(M: Matrix, k: int) -> Matrix:
    """Scale row k so the pivot is 1, then clear column k in every other row."""
    rows = [list(map(Fraction, r)) for r in M.rows]
    p = rows[k - 1][k - 1]
    if p == 0:
        raise ZeroPivot(k)
    pivot_row = [x / p for x in rows[k - 1]]
    rows[k - 1] = pivot_row
    for i, row in enumerate(rows):
        if i == k - 1:
            continue
        f = row[k - 1]
        if f:
            rows[i] = [x - f * y for x, y in zip(row, pivot_row)]
    return Matrix.from_rows(rows)


def gj_rational_oracle(A: Matrix, pivoting: str = STRICT) -> GjTrace:
    """Reference Gauss-Jordan over the rationals, one step per column 1..min(n, m)."""
    pivoting = check_pivoting(pivoting)
    n, m = A.shape
    perm = Permutation.identity(n)
    M = A
    steps: list[GjStep] = []
    for k in range(1, min(n, m) + 1):
        if M.entry(k, k) == 0:
            if pivoting == STRICT:
                raise ZeroPivot(k)
            for r in range(k + 1, n + 1):
                if M.entry(r, k) != 0:
                    break
            else:
                raise StructurallySingular(k)
            perm = perm.swap(k, r)
            M = _swap_matrix_rows(M, k, r)
            for s in steps:
                s.matrix = _swap_matrix_rows(s.matrix, k, r)
        M = gj_rational_step(M, k)
        steps.append(GjStep(k, M))
    return GjTrace(A, steps, perm)


def rref(A: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """General reduced row echelon form over the rationals, any rank.

    Returns the RREF and the 1-based pivot columns.
    """
    rows = [list(map(Fraction, r)) for r in A.rows]
    n, m = A.shape
    pivots = []
    r = 0
    for c in range(m):
        if r == n:
            break
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c + 1)
        r += 1
    return Matrix.from_rows(rows), tuple(pivots)


@dataclass(frozen=True)
class RatioForm:
    """An entry of A^k written as sign * numerator / denominator.

    ``numerator`` is the fraction-free quantity a^{(.)}_{.,j} (for rows above
    the pivot it already carries the leading minus of its definition),
    ``denominator`` is the leading principal minor of order k.
    """

    i: int
    j: int
    k: int
    case: str
    sign: int
    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.sign * self.numerator, self.denominator)


def closed_form_ratio(A: Matrix, i: int, j: int, k: int, det: DetFn = det_bareiss) -> RatioForm:
    n, m = A.shape
    if not (1 <= k <= min(n, m)):
        raise IndexOutOfBounds(f"k={k} outside 1..{min(n, m)}")
    if not (1 <= i <= n and 1 <= j <= m):
        raise IndexOutOfBounds(f"({i}, {j}) outside {n}x{m}")
    if j <= k:
        raise InvalidCase(f"closed form covers j > k only (j={j}, k={k})")
    den = bordered_minor_below(A, k - 1, k, k, det)
    if den == 0:
        raise ZeroPivot(k)
    if i > k:
        return RatioForm(i, j, k, "below", 1, bordered_minor_below(A, k, i, j, det), den)
    if i == k:
        return RatioForm(i, j, k, "pivot-row", 1, bordered_minor_below(A, k - 1, k, j, det), den)
    case = "adjacent-above" if i == k - 1 else "far-above"
    return RatioForm(i, j, k, case, eq11_sign(i, k), bordered_minor_above(A, k, i, j, det), den)


def gj_closed_form_entry(A: Matrix, i: int, j: int, k: int, det: DetFn = det_bareiss) -> Fraction:
    """Entry (i, j) of A^k, j > k, from explicit determinants of submatrices of A."""
    return closed_form_ratio(A, i, j, k, det).value


# The k = 2, 3, 4 instances of the sign pattern, as (k, i, sign).
BASE_SIGN_CASES = ((2, 1, 1), (3, 1, -1), (3, 2, 1), (4, 1, 1), (4, 2, -1), (4, 3, 1))


@dataclass
class Discrepancy:
    kind: str
    k: int
    i: int
    j: int
    detail: str

    def __str__(self):
        return f"[{self.kind}] k={self.k} (i={self.i}, j={self.j}): {self.detail}"


@dataclass
class ConstructionReport:
    shape: tuple[int, int]
    checks: int = 0
    table_checks: int = 0
    base_sign_checks: int = 0
    nonexact_divisions: int = 0
    zero_pivot_step: Optional[int] = None
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.discrepancies
            and self.zero_pivot_step is None
            and self.nonexact_divisions == 0
        )

    def summary(self) -> str:
        n, m = self.shape
        if self.zero_pivot_step is not None:
            head = f"FAIL {n}x{m}: zero pivot at step k={self.zero_pivot_step}"
        elif self.ok:
            head = f"PASS {n}x{m}"
        else:
            head = f"FAIL {n}x{m}"
        return (
            f"{head}: {self.checks} entry checks, {self.table_checks} minor checks, "
            f"{self.base_sign_checks} base-sign checks, "
            f"{self.nonexact_divisions} non-exact divisions, "
            f"{len(self.discrepancies)} discrepancies"
        )


def verify_construction(A: Matrix, minor_det: Optional[DetFn] = None) -> ConstructionReport:
    """Three-way check of every j > k entry of every A^k (strict mode).

    closed form (explicit minors) == fraction-free recursion == rational
    Gauss-Jordan. With ``minor_det`` given, every stored fraction-free table
    entry is also compared with the explicitly assembled minor evaluated by
    ``minor_det``. Problems are collected in the report, never raised.
    """
    report = ConstructionReport(A.shape)
    k_bad = first_vanishing_leading_minor(A)
    if k_bad is not None:
        report.zero_pivot_step = k_bad
        return report
    try:
        fast = gj_reduce(A, STRICT)
    except NonExactDivision as exc:
        report.nonexact_divisions += 1
        report.discrepancies.append(Discrepancy("non-exact", 0, 0, 0, str(exc)))
        return report
    except ZeroPivot as exc:
        report.zero_pivot_step = exc.k
        return report
    oracle = gj_rational_oracle(A, STRICT)
    n, m = A.shape

    for step, ref in zip(fast.steps, oracle.steps):
        k = step.k
        if step.matrix != ref.matrix:
            for i in range(1, n + 1):
                for j in range(1, min(k, m) + 1):
                    if step.matrix.entry(i, j) != ref.matrix.entry(i, j):
                        report.discrepancies.append(Discrepancy(
                            "identity-block", k, i, j,
                            f"recursion {step.matrix.entry(i, j)} != oracle {ref.matrix.entry(i, j)}"))
        for j in range(k + 1, m + 1):
            for i in range(1, n + 1):
                report.checks += 1
                try:
                    closed = gj_closed_form_entry(A, i, j, k)
                except NonExactDivision as exc:
                    report.nonexact_divisions += 1
                    report.discrepancies.append(Discrepancy("non-exact", k, i, j, str(exc)))
                    continue
                rec = step.matrix.entry(i, j)
                orc = ref.matrix.entry(i, j)
                if not (closed == rec == orc):
                    report.discrepancies.append(Discrepancy(
                        "three-way", k, i, j,
                        f"closed form {closed}, recursion {rec}, oracle {orc}"))

        if minor_det is not None:
            lvl = step.level
            for (i, j), v in lvl.below.items():
                report.table_checks += 1
                want = bordered_minor_below(A, k, i, j, minor_det)
                if v != want:
                    report.discrepancies.append(Discrepancy(
                        "below-minor", k, i, j, f"table {v} != minor {want}"))
            for (i, j), v in lvl.above.items():
                report.table_checks += 1
                want = bordered_minor_above(A, k, i, j, minor_det)
                if v != want:
                    report.discrepancies.append(Discrepancy(
                        "above-minor", k, i, j, f"table {v} != minor {want}"))
            report.table_checks += 1
            want = bordered_minor_below(A, k - 1, k, k, minor_det)
            if lvl.pivot != want:
                report.discrepancies.append(Discrepancy(
                    "pivot-minor", k, k, k, f"pivot {lvl.pivot} != minor {want}"))

    if n >= 4:
        for k, i, sign in BASE_SIGN_CASES:
            step, ref = fast.step(k), oracle.step(k)
            for j in range(k + 1, m + 1):
                report.base_sign_checks += 1
                want = Fraction(sign * step.level.above(i, j), step.level.pivot)
                if ref.matrix.entry(i, j) != want:
                    report.discrepancies.append(Discrepancy(
                        "base-sign", k, i, j,
                        f"oracle {ref.matrix.entry(i, j)} != {sign:+d} * a^({k})_{{{i},{j}}} / pivot = {want}"))
    return report

"""Dense exact matrices, bordered minors and the two determinant routines.

All public indices are 1-based so that code reads like the subscripts
a_{i,j} it implements. Storage is a tuple of row tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import (
    DimensionMismatch,
    IndexOutOfBounds,
    InvalidCase,
    NotSquare,
    TooLarge,
)
from .scalar import Scalar, as_exact, exact_div

COFACTOR_MAX_N = 10


@dataclass(frozen=True)
class Matrix:
    rows: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_exact(x) for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def column(cls, values: Iterable) -> "Matrix":
        return cls(tuple((v,) for v in values))

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.n, self.m

    def is_square(self) -> bool:
        return self.n == self.m

    def is_integer(self) -> bool:
        return all(isinstance(x, int) for r in self.rows for x in r)

    def entry(self, i: int, j: int) -> Scalar:
        """Entry a_{i,j}, 1-based."""
        if not (1 <= i <= self.n and 1 <= j <= self.m):
            raise IndexOutOfBounds(f"({i}, {j}) outside {self.n}x{self.m}")
        return self.rows[i - 1][j - 1]

    def col(self, j: int) -> tuple[Scalar, ...]:
        if not 1 <= j <= self.m:
            raise IndexOutOfBounds(f"column {j} outside 1..{self.m}")
        return tuple(r[j - 1] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def hstack(self, other: "Matrix") -> "Matrix":
        if other.n != self.n:
            raise DimensionMismatch(f"cannot append {other.n} rows to {self.n}")
        return Matrix(tuple(a + b for a, b in zip(self.rows, other.rows)))

    def columns(self, first: int, last: int) -> "Matrix":
        return submatrix(self, range(1, self.n + 1), range(first, last + 1))

    def permute_rows(self, mapping: Sequence[int]) -> "Matrix":
        """Row ``i`` of the result is row ``mapping[i-1]`` of ``self``."""
        return Matrix(tuple(self.rows[p - 1] for p in mapping))

    def to_rational(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(Fraction(x) for x in r) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.m != other.n:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        return Matrix(
            tuple(
                tuple(sum(a * b for a, b in zip(r, c)) for c in cols)
                for r in self.rows
            )
        )

    def __str__(self) -> str:
        from .io import render_matrix

        return render_matrix(self)


def _check_indices(idx: Sequence[int], bound: int, what: str) -> None:
    if not idx:
        raise IndexOutOfBounds(f"empty {what} index list")
    for a, b in zip(idx, idx[1:]):
        if b <= a:
            raise IndexOutOfBounds(f"{what} indices must be strictly increasing")
    if idx[0] < 1 or idx[-1] > bound:
        raise IndexOutOfBounds(f"{what} index outside 1..{bound}")


def submatrix(A: Matrix, row_idx: Iterable[int], col_idx: Iterable[int]) -> Matrix:
    row_idx, col_idx = list(row_idx), list(col_idx)
    _check_indices(row_idx, A.n, "row")
    _check_indices(col_idx, A.m, "column")
    return Matrix(
        tuple(tuple(A.rows[i - 1][j - 1] for j in col_idx) for i in row_idx)
    )


def _square_rows(A) -> tuple[tuple, ...]:
    rows = A.rows if isinstance(A, Matrix) else tuple(tuple(r) for r in A)
    if any(len(r) != len(rows) for r in rows):
        raise NotSquare(f"{len(rows)} rows but row lengths {[len(r) for r in rows]}")
    return rows


def det_cofactor(A) -> Scalar:
    """Determinant by Laplace expansion along the first row, recursively.

    The minors of the lower rows depend only on which columns are still
    available, so they are memoized by column bitmask; the arithmetic is
    still the plain cofactor sum, just without recomputing shared minors.
    """
    rows = _square_rows(A)
    n = len(rows)
    if n > COFACTOR_MAX_N:
        raise TooLarge(f"cofactor expansion capped at n={COFACTOR_MAX_N}, got {n}")
    if n == 0:
        return 1
    memo: dict[int, Scalar] = {}
    full = (1 << n) - 1

    def minor(r: int, avail: int) -> Scalar:
        # rows r..n-1 against the columns set in avail
        if r == n:
            return 1
        hit = memo.get(avail)
        if hit is not None:
            return hit
        total = 0
        sign = 1
        row = rows[r]
        for c in range(n):
            if avail >> c & 1:
                x = row[c]
                if x:
                    total += sign * x * minor(r + 1, avail & ~(1 << c))
                sign = -sign
        memo[avail] = total
        return total

    return minor(0, full)


def det_bareiss(A) -> Scalar:
    """Determinant by fraction-free elimination with row swaps.

    Works over ints (every division exact) and also accepts Fraction entries.
    """
    rows = [list(r) for r in _square_rows(A)]
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        p = rows[k][k]
        for i in range(k + 1, n):
            ri, rk = rows[i], rows[k]
            f = ri[k]
            for j in range(k + 1, n):
                v = p * ri[j] - f * rk[j]
                ri[j] = exact_div(v, prev) if isinstance(v, int) and isinstance(prev, int) else v / prev
        prev = p
    return as_exact(sign * rows[n - 1][n - 1])


DetFn = Callable[[Matrix], Scalar]


@dataclass(frozen=True)
class BorderedMinorSpec:
    """Which fraction-free quantity a^{(k)}_{i,j} to assemble.

    ``below``: rows 1..k then i, columns 1..k then j (needs i > k, j > k).
    ``above``: rows 1..k, columns 1..k without i then j, negated (needs i < k < j).
    """

    k: int
    i: int
    j: int
    variant: str

    def __post_init__(self):
        if self.variant == "below":
            if not (self.i > self.k >= 0 and self.j > self.k):
                raise InvalidCase(f"below-diagonal minor needs i > k, j > k: {self}")
        elif self.variant == "above":
            if not (1 <= self.i < self.k < self.j):
                raise InvalidCase(f"above-diagonal minor needs i < k < j: {self}")
        else:
            raise InvalidCase(f"unknown variant {self.variant!r}")

    def indices(self) -> tuple[list[int], list[int]]:
        k, i, j = self.k, self.i, self.j
        if self.variant == "below":
            return [*range(1, k + 1), i], [*range(1, k + 1), j]
        return list(range(1, k + 1)), [c for c in range(1, k + 1) if c != i] + [j]

    def assemble(self, A: Matrix) -> Matrix:
        rows, cols = self.indices()
        if max(rows) > A.n or max(cols) > A.m:
            raise IndexOutOfBounds(f"{self} does not fit a {A.n}x{A.m} matrix")
        # rows/cols are increasing here because i > k (below) and j > k
        return submatrix(A, rows, cols)


def bordered_minor(A: Matrix, spec: BorderedMinorSpec, det: DetFn = det_bareiss) -> Scalar:
    value = det(spec.assemble(A))
    return -value if spec.variant == "above" else value


def bordered_minor_below(A: Matrix, k: int, i: int, j: int, det: DetFn = det_bareiss) -> Scalar:
    return bordered_minor(A, BorderedMinorSpec(k, i, j, "below"), det)


def bordered_minor_above(A: Matrix, k: int, i: int, j: int, det: DetFn = det_bareiss) -> Scalar:
    return bordered_minor(A, BorderedMinorSpec(k, i, j, "above"), det)


def leading_principal_minor(A: Matrix, k: int, det: DetFn = det_bareiss) -> Scalar:
    if not 1 <= k <= min(A.n, A.m):
        raise IndexOutOfBounds(f"k={k} outside 1..{min(A.n, A.m)}")
    return det(submatrix(A, range(1, k + 1), range(1, k + 1)))


def first_vanishing_leading_minor(A: Matrix, det: DetFn = det_bareiss) -> int | None:
    """Smallest k with a zero leading principal minor, or None."""
    for k in range(1, min(A.n, A.m) + 1):
        if leading_principal_minor(A, k, det) == 0:
            return k
    return None


@dataclass(frozen=True)
class SylvesterVerdict:
    equal: bool
    lhs: Scalar
    rhs: Scalar


def check_sylvester_identity(M, U, V, R, S, a, b, c, d, det: DetFn = det_cofactor) -> SylvesterVerdict:
    """Evaluate both sides of the two-row/two-column bordering identity.

    |M| * |M U V; R a b; S c d|  vs  |M U; R a| |M V; S d| - |M V; R b| |M U; S c|
    """
    M = [list(r) for r in (M.rows if isinstance(M, Matrix) else M)]
    p = len(M)
    if any(len(r) != p for r in M):
        raise DimensionMismatch("M must be square")
    U, V, R, S = list(U), list(V), list(R), list(S)
    if not all(len(x) == p for x in (U, V, R, S)):
        raise DimensionMismatch(f"borders must have length {p}")

    def border(col, row, corner):
        return [Mr + [u] for Mr, u in zip(M, col)] + [row + [corner]]

    full = [Mr + [u, v] for Mr, u, v in zip(M, U, V)] + [R + [a, b], S + [c, d]]
    lhs = det(M) * det(full)
    rhs = det(border(U, R, a)) * det(border(V, S, d)) - det(border(V, R, b)) * det(border(U, S, c))
    return SylvesterVerdict(lhs == rhs, lhs, rhs)

"""Linear solves and inverses read off the last Gauss-Jordan step of an augmented matrix."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .bareiss import STRICT, check_pivoting
from .errors import DimensionMismatch, MathError, NotSquare, SingularMatrix
from .gauss_jordan import gj_closed_form_entry, gj_rational_oracle, gj_reduce
from .matrix import Matrix, det_bareiss
from .scalar import as_exact


@dataclass
class SolveResult:
    solution: tuple[Fraction, ...]
    det_A: int
    method_agreement: dict[str, bool] = field(default_factory=dict)


def clear_row_denominators(A: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Scale each row by the lcm of its denominators; returns the integer matrix and the factors."""
    factors = []
    rows = []
    for r in A.rows:
        f = lcm(*(Fraction(x).denominator for x in r))
        factors.append(f)
        rows.append([x * f for x in r])
    return Matrix.from_rows(rows), tuple(factors)


def _require_square(A: Matrix) -> int:
    if not A.is_square():
        raise NotSquare(f"expected a square matrix, got {A.n}x{A.m}")
    return A.n


def _as_rhs(b, n: int) -> Matrix:
    B = b if isinstance(b, Matrix) else Matrix.column(b)
    if B.n != n:
        raise DimensionMismatch(f"right-hand side has {B.n} rows, A has {n}")
    return B


def solve_many(A: Matrix, B: Matrix, pivoting: str = STRICT) -> tuple[Matrix, int]:
    """Solve A X = B for every column of B at once.

    Gauss-Jordan is run (fraction-free) on [A | B]; X is the right block of
    A^n. Rational input is row-scaled to integers first, which leaves X
    unchanged. Returns X and det(A). The residual A X = B is checked exactly.
    """
    pivoting = check_pivoting(pivoting)
    n = _require_square(A)
    B = _as_rhs(B, n)
    aug, factors = clear_row_denominators(A.hstack(B))
    det_scaled = det_bareiss(aug.columns(1, n))
    if det_scaled == 0:
        raise SingularMatrix("det(A) = 0")
    trace = gj_reduce(aug, pivoting, keep_levels=False)
    X = trace.final.columns(n + 1, n + B.m)
    if A @ X != B:
        raise MathError("residual check failed: A X != B")
    scale = 1
    for f in factors:
        scale *= f
    return X, as_exact(Fraction(det_scaled, scale))


def cramer_classical(A: Matrix, b: Sequence) -> tuple[Fraction, ...]:
    """x_i = det(A with column i replaced by b) / det(A)."""
    n = _require_square(A)
    b = list(_as_rhs(b, n).col(1))
    d = det_bareiss(A)
    if d == 0:
        raise SingularMatrix("det(A) = 0")
    xs = []
    for i in range(n):
        Ai = [list(r) for r in A.rows]
        for r in range(n):
            Ai[r][i] = b[r]
        xs.append(Fraction(det_bareiss(Ai)) / d)
    return tuple(xs)


def solve_gj(A: Matrix, b: Sequence, pivoting: str = STRICT, cross_check: bool = True) -> SolveResult:
    """Solve A x = b through the explicit Gauss-Jordan construction.

    With ``cross_check`` the answer is also compared against classical
    Cramer, the rational elimination oracle and (strict mode) the
    closed-form determinant ratio of each component; disagreement raises.
    """
    pivoting = check_pivoting(pivoting)
    n = _require_square(A)
    X, det_A = solve_many(A, _as_rhs(b, n), pivoting)
    x = tuple(Fraction(v) for v in X.col(1))
    agreement = {"residual": True}
    if cross_check:
        agreement["cramer_classical"] = cramer_classical(A, b) == x
        aug = A.hstack(_as_rhs(b, n))
        oracle = gj_rational_oracle(aug, pivoting)
        agreement["rational_oracle"] = tuple(oracle.final.col(n + 1)) == x
        if pivoting == STRICT:
            aug_int, _ = clear_row_denominators(aug)
            agreement["closed_form"] = all(
                gj_closed_form_entry(aug_int, i, n + 1, n) == x[i - 1] for i in range(1, n + 1)
            )
        failed = [name for name, good in agreement.items() if not good]
        if failed:
            raise MathError(f"solution disagrees with: {', '.join(failed)}")
    return SolveResult(x, det_A, agreement)


def inverse(A: Matrix, pivoting: str = STRICT) -> Matrix:
    """A^{-1} as the right block of the final Gauss-Jordan step on [A | I]."""
    n = _require_square(A)
    I = Matrix.identity(n)
    B, _ = solve_many(A, I, pivoting)
    if B @ A != I:
        raise MathError("inverse check failed: B A != I")
    return B

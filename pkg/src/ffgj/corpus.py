"""Seeded random matrices for self-checks and tests."""

from __future__ import annotations

import random

from .matrix import Matrix, det_bareiss, first_vanishing_leading_minor


def random_matrix(rng: random.Random, n: int, m: int, lo: int = -9, hi: int = 9) -> Matrix:
    return Matrix.from_rows([[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)])


def random_strict_matrix(rng: random.Random, n: int, m: int, lo: int = -9, hi: int = 9) -> Matrix:
    """Uniform entries, resampled until every leading principal minor is nonzero."""
    while True:
        A = random_matrix(rng, n, m, lo, hi)
        if first_vanishing_leading_minor(A) is None:
            return A


def random_nonsingular(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> Matrix:
    while True:
        A = random_matrix(rng, n, n, lo, hi)
        if det_bareiss(A) != 0:
            return A


def random_vanishing_minor_matrix(rng: random.Random, n: int, m: int, lo: int = -9, hi: int = 9) -> Matrix:
    """A matrix with some leading principal minor equal to zero.

    The top-left k x k block is made singular for a random k by copying a
    multiple of one of its earlier rows (or zeroing a_11 when k = 1); the
    entries outside that block stay random.
    """
    rows = [[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)]
    k = rng.randint(1, min(n, m))
    if k == 1:
        rows[0][0] = 0
    else:
        src = rng.randrange(k - 1)
        c = rng.choice([-2, -1, 1, 2])
        rows[k - 1][:k] = [c * x for x in rows[src][:k]]
    return Matrix.from_rows(rows)


def theorem_corpus(count: int, seed: int = 0, sizes=range(2, 8)) -> list[Matrix]:
    """n x (n + 2) matrices with entries in [-9, 9] and nonzero leading minors."""
    rng = random.Random(seed)
    sizes = list(sizes)
    return [random_strict_matrix(rng, n, n + 2) for n in (rng.choice(sizes) for _ in range(count))]

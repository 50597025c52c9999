"""Exit criteria. Each test appends one PASS/FAIL line to the terminal summary.

Run alone with ``pytest tests/test_acceptance.py``; every tolerance is exact
equality (rational arithmetic throughout).
"""

import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import matmul
from ffgj import (
    Matrix,
    StructurallySingular,
    ZeroPivot,
    bordered_minor_above,
    check_sylvester_identity,
    cramer_classical,
    det_cofactor,
    ff_eliminate,
    gj_rational_oracle,
    gj_reduce,
    inverse,
    solve_gj,
    verify_construction,
)
from ffgj.corpus import random_nonsingular, random_vanishing_minor_matrix, theorem_corpus
from ffgj.gauss_jordan import BASE_SIGN_CASES
from ffgj.matrix import first_vanishing_leading_minor

CORPUS_SIZE = 500
CORPUS_SEED = 2026
GOLDEN = Path(__file__).parent / "golden"


def record(number, title, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


@pytest.fixture(scope="module")
def corpus():
    return theorem_corpus(CORPUS_SIZE, seed=CORPUS_SEED)


@pytest.fixture(scope="module")
def three_way(corpus):
    t0 = time.perf_counter()
    reports = [verify_construction(A) for A in corpus]
    return reports, time.perf_counter() - t0


@pytest.fixture(scope="module")
def with_minors(corpus):
    return [verify_construction(A, minor_det=det_cofactor) for A in corpus]


def test_c1_theorem_corpus(corpus, three_way):
    reports, elapsed = three_way
    assert {A.n for A in corpus} == set(range(2, 8))
    assert all(A.m == A.n + 2 for A in corpus)
    assert all(-9 <= x <= 9 for A in corpus for r in A.rows for x in r)
    bad = [str(d) for r in reports for d in r.discrepancies]
    checks = sum(r.checks for r in reports)
    expected = sum(A.n * (A.m - k) for A in corpus for k in range(1, A.n + 1))
    ok = not bad and all(r.ok for r in reports) and checks == expected and elapsed < 60
    record(1, "closed form = recursion = rational oracle", ok,
           f"{checks} entries over {len(corpus)} matrices, {len(bad)} mismatches, {elapsed:.1f}s")


def test_c2_tables_equal_cofactor_minors(with_minors):
    bad = [str(d) for r in with_minors for d in r.discrepancies if d.kind.endswith("minor")]
    checks = sum(r.table_checks for r in with_minors)
    record(2, "fraction-free tables = cofactor minors", not bad and checks > 0,
           f"{checks} below/above/pivot entries, {len(bad)} mismatches")


def test_c3_sylvester_identity():
    rng = random.Random(31)
    failures = 0
    for _ in range(200):
        p = rng.randint(1, 5)

        def vec():
            return [rng.randint(-5, 5) for _ in range(p)]

        M = [vec() for _ in range(p)]
        a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
        v = check_sylvester_identity(M, vec(), vec(), vec(), vec(), a, b, c, d)
        failures += not (v.equal and v.lhs == v.rhs)
    record(3, "two-row bordering identity", failures == 0, f"200 instances, {failures} failures")


def test_c4_no_nonexact_divisions(three_way, with_minors):
    events = sum(r.nonexact_divisions for r in three_way[0]) + sum(r.nonexact_divisions for r in with_minors)
    record(4, "fraction-free exactness", events == 0, f"{events} non-exact divisions")


def test_c5_base_case_signs(corpus):
    checks = failures = 0
    for A in corpus:
        if A.n < 4:
            continue
        steps = gj_rational_oracle(A).steps
        for k, i, sign in BASE_SIGN_CASES:
            Ak = steps[k - 1].matrix
            den = det_cofactor([list(r[:k]) for r in A.rows[:k]])
            for j in range(k + 1, A.m + 1):
                checks += 1
                want = Fraction(sign * bordered_minor_above(A, k, i, j, det_cofactor), den)
                failures += Ak.entry(i, j) != want
    n4 = sum(A.n >= 4 for A in corpus)
    record(5, "k = 2, 3, 4 sign identities", failures == 0 and checks > 0,
           f"{checks} identities on {n4} matrices with n >= 4, {failures} failures")


def test_c6_generalized_cramer():
    rng = random.Random(6)
    failures = []
    for t in range(200):
        n = rng.randint(1, 7)
        A = random_nonsingular(rng, n)
        b = [rng.randint(-9, 9) for _ in range(n)]
        mode = "strict" if first_vanishing_leading_minor(A) is None else "swap"
        x = solve_gj(A, b, pivoting=mode).solution
        classical = cramer_classical(A, b)
        back_read = gj_rational_oracle(A.hstack(Matrix.column(b)), mode).final.col(n + 1)
        residual = [row[0] for row in matmul(A.rows, [[v] for v in x])]
        B = inverse(A, pivoting=mode)
        I = [[int(i == j) for j in range(n)] for i in range(n)]
        if not (x == classical == tuple(back_read) and residual == b
                and matmul(A.rows, B.rows) == I and matmul(B.rows, A.rows) == I):
            failures.append(t)
    record(6, "generalized Cramer solve and inverse", not failures,
           f"200 systems, {len(failures)} failures")


def test_c7_pivoting_soundness():
    rng = random.Random(77)
    failures = []
    done = 0
    while done < 100:
        n = rng.randint(2, 7)
        A = random_vanishing_minor_matrix(rng, n, n + 2)
        try:
            swapped = gj_reduce(A, "swap")
        except StructurallySingular:
            continue
        done += 1
        k_first = next(k for k in range(1, n + 1) if det_cofactor([list(r[:k]) for r in A.rows[:k]]) == 0)
        seen = []
        for run in (lambda: gj_reduce(A, "strict"), lambda: ff_eliminate(A, "strict")):
            try:
                run()
                seen.append(None)
            except ZeroPivot as exc:
                seen.append(exc.k)
        P = swapped.permutation.apply(A)
        strict = gj_reduce(P, "strict")
        ff_swap, ff_perm = ff_eliminate(A, "swap")
        ff_strict, _ = ff_eliminate(P, "strict")
        same = (
            [s.matrix for s in swapped.steps] == [s.matrix for s in strict.steps]
            and [(s.level.below, s.level.above, s.level.pivot) for s in swapped.steps]
            == [(s.level.below, s.level.above, s.level.pivot) for s in strict.steps]
            and ff_perm == swapped.permutation
            and [(lv.table, lv.pivot_prev) for lv in ff_swap] == [(lv.table, lv.pivot_prev) for lv in ff_strict]
            and not swapped.permutation.is_identity()
        )
        if seen != [k_first, k_first] or not same:
            failures.append(A)
    record(7, "strict ZeroPivot step and swap = strict on permuted", not failures,
           f"100 matrices with a vanishing leading minor, {len(failures)} failures")


def test_c8_cli_golden():
    cases = [line.split("|") for line in (GOLDEN / "cases.txt").read_text().splitlines()]
    mismatched = []
    for name, args in cases:
        runs = [
            subprocess.run([sys.executable, "-m", "ffgj", *args.split()], cwd=GOLDEN, capture_output=True)
            for _ in range(2)
        ]
        want = ((GOLDEN / f"{name}.out").read_bytes(), (GOLDEN / f"{name}.err").read_bytes(),
                int((GOLDEN / f"{name}.code").read_text()))
        if any((r.stdout, r.stderr, r.returncode) != want for r in runs):
            mismatched.append(name)
    record(8, "CLI golden files, byte-identical reruns", not mismatched,
           f"{len(cases)} cases, mismatched: {mismatched or 'none'}")

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import int_matrices
from oracles import gj_by_hand, leibniz_det
from ffgj import (
    InvalidCase,
    Matrix,
    StructurallySingular,
    ZeroPivot,
    bordered_minor_above,
    bordered_minor_below,
    closed_form_ratio,
    gj_closed_form_entry,
    gj_ff_step,
    gj_rational_oracle,
    gj_rational_step,
    gj_reduce,
    rref,
    verify_construction,
)
from ffgj.gauss_jordan import BASE_SIGN_CASES, eq11_sign, level_zero
from ffgj.matrix import first_vanishing_leading_minor

A23 = Matrix.from_rows([[2, 1, 5], [4, 5, 7]])


def strict_matrices(max_n=5, extra_cols=2):
    return int_matrices(1, max_n, min_m=1, max_m=max_n + extra_cols).filter(
        lambda A: first_vanishing_leading_minor(A) is None)


class TestRationalStep:
    def test_identity(self):
        I = Matrix.identity(3)
        for k in (1, 2, 3):
            assert gj_rational_step(I, k) == I

    def test_two_by_two(self):
        assert gj_rational_step(Matrix.from_rows([[2, 4], [1, 3]]), 1) == Matrix.from_rows([[1, 2], [0, 1]])

    def test_zero_pivot(self):
        with pytest.raises(ZeroPivot):
            gj_rational_step(Matrix.from_rows([[0, 1], [1, 0]]), 1)

    @given(int_matrices(1, 5), st.data())
    def test_column_becomes_unit_vector(self, M, data):
        k = data.draw(st.integers(1, min(M.n, M.m)))
        assume(M.entry(k, k) != 0)
        col = gj_rational_step(M, k).col(k)
        assert col == tuple(int(i == k) for i in range(1, M.n + 1))


class TestRationalOracle:
    def test_identity(self):
        t = gj_rational_oracle(Matrix.identity(4))
        assert all(s.matrix == Matrix.identity(4) for s in t.steps)

    def test_example(self):
        # 2*3 + 1*(-1) = 5, 4*3 + 5*(-1) = 7
        assert gj_rational_oracle(A23).final == Matrix.from_rows([[1, 0, 3], [0, 1, -1]])

    @given(strict_matrices())
    @settings(max_examples=50)
    def test_idempotent_and_matches_textbook(self, A):
        t = gj_rational_oracle(A)
        r = min(A.n, A.m)
        assert [list(row) for row in t.final.rows] == gj_by_hand(A.rows, r)
        assert gj_rational_oracle(t.final).final == t.final

    def test_swap_mode(self):
        t = gj_rational_oracle(Matrix.from_rows([[0, 1, 2], [1, 0, 3]]), "swap")
        assert t.permutation.mapping == (2, 1)
        assert t.final == Matrix.from_rows([[1, 0, 3], [0, 1, 2]])
        with pytest.raises(StructurallySingular):
            gj_rational_oracle(Matrix.from_rows([[1, 2], [2, 4]]), "swap")


class TestClosedForm:
    def test_example(self):
        # a^(2)_{1,3} / a^(1)_{2,2} = -det[[1,5],[5,7]] / 6 = 18 / 6
        rf = closed_form_ratio(A23, 1, 3, 2)
        assert (rf.sign, rf.numerator, rf.denominator) == (1, 18, 6)
        assert gj_closed_form_entry(A23, 1, 3, 2) == 3
        assert gj_closed_form_entry(A23, 2, 3, 2) == -1

    def test_identity(self):
        I = Matrix.identity(5)
        for k in range(1, 5):
            for j in range(k + 1, 6):
                for i in range(1, 6):
                    assert gj_closed_form_entry(I, i, j, k) == int(i == j)

    def test_errors(self):
        with pytest.raises(InvalidCase):
            gj_closed_form_entry(A23, 1, 2, 2)
        with pytest.raises(ZeroPivot):
            gj_closed_form_entry(Matrix.from_rows([[0, 1, 1], [1, 0, 1]]), 2, 3, 1)
        with pytest.raises(Exception):
            gj_closed_form_entry(A23, 3, 3, 1)

    @given(strict_matrices(), st.data())
    @settings(max_examples=80)
    def test_matches_textbook_elimination(self, A, data):
        k = data.draw(st.integers(1, min(A.n, A.m)))
        assume(k < A.m)
        j = data.draw(st.integers(k + 1, A.m))
        i = data.draw(st.integers(1, A.n))
        assert gj_closed_form_entry(A, i, j, k) == gj_by_hand(A.rows, k)[i - 1][j - 1]

    @pytest.mark.parametrize("k", range(2, 9))
    def test_sign_law(self, k):
        for i in range(1, k):
            assert eq11_sign(i, k) == (-1) ** (k - i + 1)

    def test_base_sign_list(self):
        assert BASE_SIGN_CASES == ((2, 1, 1), (3, 1, -1), (3, 2, 1), (4, 1, 1), (4, 2, -1), (4, 3, 1))


class TestFfStep:
    def test_eq6_base_case(self):
        L0 = level_zero(A23)
        L1 = gj_ff_step(L0, None, 1)
        L2 = gj_ff_step(L1, L0, 2)
        # a^(0)_{2,2} a^(0)_{1,3} - a^(0)_{1,2} a^(0)_{2,3} = 5*5 - 1*7
        assert L2.above(1, 3) == 18
        assert L2.above(1, 3) == -leibniz_det([[1, 5], [5, 7]])
        assert L2.pivot == 6

    def test_identity_tables(self):
        I = Matrix.identity(4)
        t = gj_reduce(I)
        for s in t.steps:
            for (i, j), v in list(s.level.below.items()) + list(s.level.above.items()):
                assert v == (bordered_minor_below(I, s.k, i, j) if i > s.k else bordered_minor_above(I, s.k, i, j))

    def test_needs_previous_levels(self):
        L0 = level_zero(A23)
        with pytest.raises(InvalidCase):
            gj_ff_step(L0, None, 2)
        L1 = gj_ff_step(L0, None, 1)
        with pytest.raises(InvalidCase):
            gj_ff_step(L1, None, 2)

    @given(strict_matrices(max_n=6))
    @settings(max_examples=60)
    def test_tables_are_minors(self, A):
        for s in gj_reduce(A).steps:
            for (i, j), v in s.level.below.items():
                assert v == bordered_minor_below(A, s.k, i, j)
            for (i, j), v in s.level.above.items():
                assert v == bordered_minor_above(A, s.k, i, j)


class TestReduce:
    def test_identity(self):
        t = gj_reduce(Matrix.identity(3))
        assert all(s.matrix == Matrix.identity(3) for s in t.steps)

    def test_example(self):
        assert gj_reduce(A23).final == Matrix.from_rows([[1, 0, 3], [0, 1, -1]])

    def test_strict_zero_pivot(self):
        with pytest.raises(ZeroPivot) as info:
            gj_reduce(Matrix.from_rows([[1, 2, 3], [2, 4, 1], [0, 1, 1]]))
        assert info.value.k == 2

    def test_ratio_requires_levels(self):
        t = gj_reduce(A23, keep_levels=False)
        with pytest.raises(InvalidCase):
            t.ratio(1, 3, 2)

    @given(strict_matrices(max_n=6))
    @settings(max_examples=60)
    def test_trace_equals_oracle(self, A):
        fast, slow = gj_reduce(A), gj_rational_oracle(A)
        assert [s.matrix for s in fast.steps] == [s.matrix for s in slow.steps]

    @given(strict_matrices(max_n=5))
    @settings(max_examples=40)
    def test_identity_block(self, A):
        for s in gj_reduce(A).steps:
            for i in range(1, A.n + 1):
                for j in range(1, s.k + 1):
                    assert s.matrix.entry(i, j) == int(i == j)

    @given(int_matrices(2, 6, min_m=2, max_m=8, lo=-2, hi=2))
    @settings(max_examples=80)
    def test_swap_trace_is_strict_trace_of_permuted(self, A):
        try:
            t = gj_reduce(A, "swap")
        except StructurallySingular:
            return
        s = gj_reduce(t.permutation.apply(A), "strict")
        assert [x.matrix for x in t.steps] == [x.matrix for x in s.steps]
        assert [(x.level.below, x.level.above, x.level.pivot) for x in t.steps] == \
            [(x.level.below, x.level.above, x.level.pivot) for x in s.steps]
        assert t.level0.below == s.level0.below
        assert gj_rational_oracle(A, "swap").permutation == t.permutation


class TestRref:
    def test_rank_deficient(self):
        R, piv = rref(Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]]))
        assert R == Matrix.from_rows([[1, 0, 1], [0, 1, 1], [0, 0, 0]])
        assert piv == (1, 2)

    @given(int_matrices(1, 5, lo=-3, hi=3))
    def test_idempotent(self, A):
        R, _ = rref(A)
        assert rref(R)[0] == R

    @given(strict_matrices())
    @settings(max_examples=40)
    def test_agrees_with_construction(self, A):
        assert rref(A)[0] == gj_reduce(A).final


class TestVerifyConstruction:
    def test_identity(self):
        rep = verify_construction(Matrix.identity(5))
        assert rep.ok and not rep.discrepancies
        assert rep.base_sign_checks == 3 + 2 + 2 + 1 + 1 + 1

    def test_random_five_by_seven(self):
        A = Matrix.from_rows([
            [3, -1, 4, 1, -5, 9, 2],
            [6, 5, -3, 5, 8, -9, 7],
            [-9, 3, 2, 3, 8, 4, -6],
            [2, 6, -4, 3, 3, 8, 3],
            [2, -7, 9, 5, 0, 2, 8],
        ])
        assert first_vanishing_leading_minor(A) is None
        from ffgj import det_cofactor
        rep = verify_construction(A, minor_det=det_cofactor)
        assert rep.ok, [str(d) for d in rep.discrepancies]
        assert rep.checks == sum(5 * (7 - k) for k in range(1, 6))
        assert rep.base_sign_checks == 5 + 4 + 4 + 3 + 3 + 3

    def test_flags_zero_pivot_step(self):
        A = Matrix.from_rows([[1, 2, 3, 4], [2, 4, 1, 1], [1, 1, 1, 1]])
        rep = verify_construction(A)
        assert not rep.ok and rep.zero_pivot_step == 2
        assert "k=2" in rep.summary()

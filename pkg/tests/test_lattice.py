from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hypertoric.lattice import (
    IntMatrix,
    SignSystem,
    determinant,
    fme_solve,
    in_rational_cone,
    kernel_basis,
    minor_dets,
    rank,
    smith_normal_form,
    strict_feasible,
)
from oracles import box_witness, cone_contains, det, invariant_factors, q_rank

A5 = [[1, 0, 1, 1, 1], [0, 1, 1, 2, 3]]


def small_matrices(max_rows=3, max_cols=4, bound=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                min_size=r, max_size=r,
            )
        )
    )


def is_diagonal(M):
    return all(M[i, j] == 0 for i in range(M.rows) for j in range(M.cols) if i != j)


class TestIntMatrix:
    def test_round_trip(self):
        M = IntMatrix.from_rows(A5)
        assert M.to_rows() == A5
        assert M.shape == (2, 5)
        assert M.column(3) == (1, 2)
        assert IntMatrix.from_columns(M.columns()) == M

    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_product(self):
        M = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert (M @ IntMatrix.identity(2)) == M
        assert (M @ M).to_rows() == [[7, 10], [15, 22]]


class TestSmithNormalForm:
    def test_identity(self):
        assert smith_normal_form(IntMatrix.identity(2)).S == IntMatrix.identity(2)

    def test_diag_2_3(self):
        snf = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))
        assert snf.S.to_rows() == [[1, 0], [0, 6]]

    def test_zero(self):
        snf = smith_normal_form(IntMatrix.zeros(2, 2))
        assert snf.S.is_zero()
        assert snf.rank == 0

    @settings(max_examples=150, deadline=None)
    @given(small_matrices())
    def test_decomposition_properties(self, rows):
        M = IntMatrix.from_rows(rows)
        snf = smith_normal_form(M)
        assert snf.U @ M @ snf.V == snf.S
        assert is_diagonal(snf.S)
        assert abs(determinant(snf.U.to_rows())) == 1
        assert abs(determinant(snf.V.to_rows())) == 1
        factors = snf.invariant_factors
        assert all(s >= 0 for s in factors)
        nonzero = [s for s in factors if s]
        assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
        # zeros come last
        assert factors[: len(nonzero)] == tuple(nonzero)
        assert list(factors) == invariant_factors(rows, M.cols)

    def test_deterministic(self):
        M = IntMatrix.from_rows(A5)
        assert smith_normal_form(M) == smith_normal_form(M)


class TestKernel:
    def test_one_two_three(self):
        K = kernel_basis(IntMatrix.from_rows([[1, 2, 3]]))
        assert K.cols == 2
        assert (IntMatrix.from_rows([[1, 2, 3]]) @ K).is_zero()
        assert q_rank(K.to_rows()) == 2
        assert set(K.columns()) == {(-2, 1, 0), (-3, 0, 1)}

    def test_identity_has_empty_kernel(self):
        assert kernel_basis(IntMatrix.identity(3)).cols == 0

    def test_two_row_example(self):
        M = IntMatrix.from_rows(A5)
        K = kernel_basis(M)
        assert K.shape == (5, 3)
        assert (M @ K).is_zero()
        assert q_rank(K.to_rows()) == 3

    @settings(max_examples=100, deadline=None)
    @given(small_matrices())
    def test_kernel_is_saturated_basis(self, rows):
        M = IntMatrix.from_rows(rows)
        K = kernel_basis(M)
        assert K.cols == M.cols - q_rank(rows)
        if K.cols:
            assert (M @ K).is_zero()
            assert q_rank(K.to_rows()) == K.cols
            # a lattice basis of the kernel is primitive: its maximal minors are coprime
            snf = smith_normal_form(K)
            assert all(s == 1 for s in snf.invariant_factors)


class TestMinors:
    def test_entries(self):
        assert minor_dets(IntMatrix.from_rows([[1, 2, 3]]), 1) == {(0,): 1, (1,): 2, (2,): 3}

    def test_two_by_two(self):
        minors = minor_dets(IntMatrix.from_rows(A5), 2)
        assert minors[(2, 3)] == 1
        assert sorted(minors.values()) == sorted([1, 1, 2, 3, -1, -1, -1, 1, 2, 1])

    def test_zero_matrix(self):
        assert set(minor_dets(IntMatrix.zeros(2, 3), 2).values()) == {0}
        assert set(minor_dets(IntMatrix.zeros(2, 3), 1).values()) == {0}

    @settings(max_examples=60, deadline=None)
    @given(small_matrices(max_rows=3, max_cols=4))
    def test_bareiss_matches_laplace(self, rows):
        k = len(rows)
        if len(rows[0]) < k:
            return
        for cols, value in minor_dets(IntMatrix.from_rows(rows), k).items():
            assert value == det([[r[j] for j in cols] for r in rows])


class TestFeasibility:
    def test_single_positive(self):
        assert strict_feasible(SignSystem(1, ((1,),), ())) == (1,)

    def test_contradiction(self):
        assert strict_feasible(SignSystem(1, ((1,),), ((2,),))) is None

    def test_two_dim_example(self):
        system = SignSystem(2, ((1, 0), (1, 1)), ((0, 1),))
        lam = strict_feasible(system)
        assert lam == (2, -1)
        assert system.holds(lam)

    vectors = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), max_size=4)

    @settings(max_examples=200, deadline=None)
    @given(vectors, vectors)
    def test_matches_box_search(self, pos, neg):
        system = SignSystem(2, tuple(pos), tuple(neg))
        lam = strict_feasible(system)
        # strictly feasible 2D systems with entries <= 3 have a witness in a small box
        brute = box_witness(pos, neg, 2, 12)
        assert (lam is None) == (brute is None)
        if lam is not None:
            assert system.holds(lam)

    def test_fme_returns_solution(self):
        # x + y >= 1, x - y >= 0, -x >= -3
        sol = fme_solve([((1, 1), 1), ((1, -1), 0), ((-1, 0), -3)], 2)
        assert sol is not None
        x, y = sol
        assert x + y >= 1 and x - y >= 0 and x <= 3
        assert all(isinstance(v, Fraction) for v in sol)

    def test_fme_infeasible(self):
        assert fme_solve([((1,), 1), ((-1,), 0)], 1) is None


class TestCone:
    def test_zero_target(self):
        assert in_rational_cone((0, 0), [])
        assert in_rational_cone((0,), [(-1,)])

    def test_one_dim(self):
        assert in_rational_cone((1,), [(1,), (-2,)])
        assert not in_rational_cone((1,), [(-1,), (-3,)])

    @settings(max_examples=200, deadline=None)
    @given(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
        st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), max_size=4),
    )
    def test_matches_caratheodory(self, target, gens):
        assert in_rational_cone(target, gens) == cone_contains(target, gens)

    @settings(max_examples=60, deadline=None)
    @given(
        st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
        st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)), max_size=4),
    )
    def test_matches_caratheodory_3d(self, target, gens):
        assert in_rational_cone(target, gens) == cone_contains(target, gens)


def test_rank_over_rationals():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[Fraction(1, 2), 1], [1, Fraction(1, 3)]]) == 2

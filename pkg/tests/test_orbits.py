from itertools import combinations

import pytest

from hypertoric import build
from hypertoric.orbits import (
    InconsistentPattern,
    OrbitType,
    UnrealizablePattern,
    census,
    classify,
    finite_stabilizer_order,
    origin_in_orbit_closure,
    stabilizer,
)
from hypertoric.patterns import SupportPattern, all_patterns
from hypertoric.moment import sample_point
from oracles import box_witness, det, gcd_list, q_rank, random_valid_matrices

D2 = [[1, 0, 1, 2], [0, 1, 1, 1]]
P = SupportPattern.parse


class TestStabilizer:
    wd = build((1, 2, 3))

    def test_trivial(self):
        s = stabilizer(self.wd, P("zw."))
        assert s.trivial and s.finite and s.order == 1

    def test_cyclic(self):
        s = stabilizer(self.wd, P("..z"))
        assert s.torus_rank == 0
        assert s.torsion == (3,)
        assert s.order == 3

    def test_origin(self):
        s = stabilizer(build(D2), SupportPattern.origin(4))
        assert s.torus_rank == 2
        assert not s.finite and s.order is None

    def test_both_same_as_single(self):
        wd = build(D2)
        assert stabilizer(wd, P("bb..")) == stabilizer(wd, P("zw.."))

    @pytest.mark.parametrize("rows", [[[1, 2, 3]], [[2, 3, 5, 7]], D2, [[1, 0, 3, -2, 1], [0, 1, 2, 3, -1]]])
    def test_against_minor_oracle(self, rows):
        wd = build(rows)
        A = wd.A.to_rows()
        d = wd.d
        for pattern in all_patterns(wd.n):
            act = list(pattern.active)
            s = stabilizer(wd, pattern)
            r = q_rank([[A[i][j] for j in act] for i in range(d)]) if act else 0
            assert s.torus_rank == d - r
            if r == d:
                g = gcd_list(det([[A[i][j] for j in cs] for i in range(d)]) for cs in combinations(act, d))
                assert s.order == g == finite_stabilizer_order(wd, pattern)


class TestOrbitClosure:
    def test_only_w(self):
        ok, lam = origin_in_orbit_closure(build((1, 2, 3)), P("ww."))
        assert ok and lam.lam == (-1,)

    def test_mixed_single_row(self):
        assert origin_in_orbit_closure(build((1, 2, 3)), P("zw.")) == (False, None)

    def test_two_rows(self):
        ok, lam = origin_in_orbit_closure(build(D2), P("zz.."))
        assert ok
        assert lam.lam[0] > 0 and lam.lam[1] > 0

    def test_inconsistent(self):
        with pytest.raises(InconsistentPattern):
            origin_in_orbit_closure(build(D2), P("b..."), on_zero_fiber=True)

    @pytest.mark.parametrize("rows", [[[1, 2, 3]], [[1, 1, 2, 3]], D2, [[1, 0, 1, 1, 1], [0, 1, 1, 2, 3]]])
    def test_against_box_search(self, rows):
        wd = build(rows)
        cols = wd.columns
        for pattern in all_patterns(wd.n):
            ok, lam = origin_in_orbit_closure(wd, pattern)
            pos = [cols[i] for i in pattern.z_active]
            neg = [cols[i] for i in pattern.w_active]
            assert ok == (box_witness(pos, neg, wd.d, 8) is not None)
            if ok:
                pair = lambda c: sum(a * b for a, b in zip(c, lam.lam))  # noqa: E731
                assert all(pair(c) > 0 for c in pos) and all(pair(c) < 0 for c in neg)


class TestClassify:
    def test_finite_in_fiber(self):
        assert classify(build((1, 2, 3)), P("..z")) is OrbitType.FINITE_STABILIZER_IN_FIBER

    def test_free(self):
        assert classify(build((1, 2, 3)), P("zw.")) is OrbitType.FREE_SMOOTH

    def test_positive_dim(self):
        assert classify(build(D2), P("..z.")) is OrbitType.POSITIVE_DIM_STABILIZER

    def test_unrealizable(self):
        with pytest.raises(UnrealizablePattern):
            classify(build((1, 2, 3)), P("b.."))


class TestTrichotomy:
    """Exhaustive pattern sweeps on random validated matrices."""

    @pytest.mark.parametrize("d,n", [(1, 3), (1, 4), (2, 4), (2, 5)])
    def test_no_counterexamples(self, d, n):
        for rows in random_valid_matrices(500 + 10 * d + n, d, n, 3, 3):
            wd = build(rows)
            for pattern in all_patterns(n):
                if sample_point(wd, pattern) is None:
                    continue
                s = stabilizer(wd, pattern)
                in_fiber, _ = origin_in_orbit_closure(wd, pattern)
                if s.finite and not s.trivial:
                    assert in_fiber
                if not in_fiber:
                    assert s.trivial
                if len(pattern.active) >= d + 1:
                    assert s.trivial

    def test_census_is_deterministic_across_jobs(self):
        wd = build([[1, 0, 1, 1, 1], [0, 1, 1, 2, 3]])
        assert census(wd, jobs=1) == census(wd, jobs=4)

    def test_census_counts(self):
        c = census(build((1, 1, 3)))
        assert sum(c.values()) == 4**3
        assert c == {"FreeSmooth": 34, "FiniteStabilizerInFiber": 2, "PositiveDimStabilizer": 1, "unrealizable": 27}

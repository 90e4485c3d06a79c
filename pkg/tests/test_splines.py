from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.interpolate import BSpline

from iga_plate.splines import (DiscreteSpace, KnotVector, basis_functions, basis_table, find_span,
                               greville_points, interpolate_at_greville, make_open_knot_vector,
                               surface_eval)


def _fd_oracle(kv, u, k, h=1e-5):
    """Central difference of order k-1 derivatives, global basis indexing."""
    def full(x, order):
        first, d = basis_functions(kv, x, order)
        out = np.zeros(kv.n_basis)
        out[first:first + kv.degree + 1] = d[order]
        return out
    return (full(u + h, k - 1) - full(u - h, k - 1)) / (2 * h)


class TestKnotVector:
    @pytest.mark.parametrize("p, n, knots, m", [
        (6, 1, [0] * 7 + [1] * 7, 7),
        (2, 2, [0, 0, 0, 0.5, 1, 1, 1], 4),
        (1, 1, [0, 0, 1, 1], 2),
    ])
    def test_construction(self, p, n, knots, m):
        kv = make_open_knot_vector(p, n)
        assert [float(x) for x in kv.values] == knots
        assert kv.n_basis == m == p + n

    def test_values_are_exact_rationals(self):
        kv = make_open_knot_vector(3, 3)
        assert Fraction(1, 3) in kv.values

    @pytest.mark.parametrize("p, n", [(0, 1), (2, 0), (-1, 3)])
    def test_rejects_bad_sizes(self, p, n):
        with pytest.raises(ValueError):
            make_open_knot_vector(p, n)

    def test_rejects_non_open(self):
        with pytest.raises(ValueError):
            KnotVector((0, 0, 0.5, 1, 1, 1), 2)
        with pytest.raises(ValueError):
            KnotVector((0, 0, 1, 0.5, 1, 1), 1)

    def test_continuity(self):
        assert make_open_knot_vector(6, 1).interior_continuity() == 6
        assert make_open_knot_vector(6, 8).interior_continuity() == 5


class TestBasisFunctions:
    def test_hat_functions(self):
        kv = make_open_knot_vector(1, 1)
        first, d = basis_functions(kv, 0.25)
        assert first == 0
        np.testing.assert_allclose(d[0], [0.75, 0.25])

    @pytest.mark.parametrize("u", [0.0, 0.13, 0.5, 0.97, 1.0])
    def test_bernstein_partition_of_unity(self, u):
        _, d = basis_functions(make_open_knot_vector(6, 1), u, 4)
        assert d.shape == (5, 7)
        assert abs(d[0].sum() - 1) < 1e-14
        for k in range(1, 5):
            assert abs(d[k].sum()) < 1e-10 * np.abs(d[k]).max()

    def test_second_derivative_at_zero_vs_fd(self):
        kv = make_open_knot_vector(6, 1)
        _, d = basis_functions(kv, 0.0, 2)
        # one-sided problem at u=0: compare at a forward-shifted stencil centre
        h = 1e-5
        f = lambda x: basis_functions(kv, x, 0)[1][0]
        fd = (f(2 * h) - 2 * f(h) + f(0.0)) / h**2
        _, dh = basis_functions(kv, h, 2)
        np.testing.assert_allclose(fd, dh[2], rtol=1e-4, atol=1e-4 * np.abs(dh[2]).max())
        # and the exact value at 0 from the Bernstein closed form: B''_0(0)=30, B''_1=-60, B''_2=30
        np.testing.assert_allclose(d[2], [30, -60, 30, 0, 0, 0, 0], atol=1e-10)

    @pytest.mark.parametrize("p, n", [(6, 1), (5, 4), (3, 2), (6, 8)])
    def test_matches_scipy_bspline(self, p, n, rng):
        kv = make_open_knot_vector(p, n)
        for u in rng.uniform(0, 1, 10):
            first, d = basis_functions(kv, float(u), 4)
            for j in range(p + 1):
                c = np.zeros(kv.n_basis)
                c[first + j] = 1.0
                spl = BSpline(kv.array, c, p, extrapolate=False)
                for k in range(min(4, p) + 1):
                    ref = spl.derivative(k)(u) if k else spl(u)
                    assert d[k, j] == pytest.approx(float(ref), rel=1e-10, abs=1e-9 * max(1, abs(d[k]).max()))

    @settings(max_examples=20, deadline=None)
    @given(st.floats(0.02, 0.98), st.integers(1, 4), st.sampled_from([(6, 1), (5, 3), (6, 15)]))
    def test_derivatives_match_finite_differences(self, u, k, pn):
        kv = make_open_knot_vector(*pn)
        if np.min(np.abs(kv.array - u)) < 1e-3:
            return
        first, d = basis_functions(kv, u, k)
        exact = np.zeros(kv.n_basis)
        exact[first:first + kv.degree + 1] = d[k]
        fd = _fd_oracle(kv, u, k)
        scale = np.abs(exact).max()
        np.testing.assert_allclose(fd, exact, rtol=1e-6, atol=1e-6 * scale)

    def test_orders_above_degree_are_zero(self):
        _, d = basis_functions(make_open_knot_vector(2, 2), 0.3, 4)
        assert np.all(d[3:] == 0)

    @pytest.mark.parametrize("u", [-1e-9, 1.0000001, 2.0])
    def test_outside_rejected(self, u):
        with pytest.raises(ValueError):
            basis_functions(make_open_knot_vector(3, 2), u)

    def test_span_convention(self):
        kv = make_open_knot_vector(2, 2)
        assert find_span(kv, 0.5) == 3  # right limit at interior knot
        assert find_span(kv, 1.0) == 3  # left limit at the end
        assert find_span(kv, 0.0) == 2


class TestGreville:
    def test_bernstein(self):
        g = greville_points(make_open_knot_vector(6, 1))
        assert list(g) == [i / 6 for i in range(7)]

    def test_quadratic(self):
        np.testing.assert_array_equal(greville_points(make_open_knot_vector(2, 2)), [0, 0.25, 0.75, 1])

    def test_linear(self):
        np.testing.assert_array_equal(greville_points(make_open_knot_vector(1, 1)), [0, 1])

    @given(st.integers(1, 8), st.integers(1, 12))
    def test_count_and_order(self, p, n):
        kv = make_open_knot_vector(p, n)
        g = greville_points(kv)
        assert len(g) == kv.n_basis
        assert np.all(np.diff(g) >= 0)
        assert g[0] == 0 and g[-1] == 1


class TestSurface:
    @settings(max_examples=25, deadline=None)
    @given(st.floats(0, 1), st.floats(0, 1))
    def test_partition_of_unity(self, u, v):
        space = DiscreteSpace.uniform(6, 9, 3.0, q=5, m2=8, L2=2.0)
        tab = basis_table(space, (u * 3.0, v * 2.0), 4)
        assert abs(tab.local(0, 0).sum() - 1) < 1e-12
        for a in range(5):
            for b in range(5 - a):
                if a + b:
                    blk = tab.local(a, b)
                    assert abs(blk.sum()) <= 1e-12 * max(np.abs(blk).max(), 1) * blk.size

    def test_constant_field(self):
        space = DiscreteSpace.uniform(6, 7, 10.0)
        out = surface_eval(space, np.full(space.shape, 2.5), (3.3, 7.1), 4)
        assert out[(0, 0)] == pytest.approx(2.5, abs=1e-13)
        assert all(abs(v) < 1e-10 for k, v in out.items() if k != (0, 0))

    def test_quadratic_reproduction(self):
        space = DiscreteSpace.uniform(6, 7, 4.0)
        c = interpolate_at_greville(space, lambda x, y: x**2)
        out = surface_eval(space, c, (1.3, 2.9), 4)
        assert out[(0, 0)] == pytest.approx(1.69, rel=1e-12)
        assert out[(2, 0)] == pytest.approx(2.0, rel=1e-10)
        assert abs(out[(4, 0)]) < 1e-9

    @pytest.mark.parametrize("a, b", [(0, 0), (2, 1), (3, 3), (4, 2), (6, 6), (5, 0)])
    def test_monomial_reproduction(self, a, b):
        space = DiscreteSpace.uniform(6, 9, 2.0, L2=3.0)
        c = interpolate_at_greville(space, lambda x, y: x**a * y**b)
        x, y = 1.1, 2.3
        out = surface_eval(space, c, (x, y), 4)

        def dmono(e, k, z):
            if k > e:
                return 0.0
            return np.prod(np.arange(e - k + 1, e + 1)) * z ** (e - k)

        for (i, j), val in out.items():
            ref = dmono(a, i, x) * dmono(b, j, y)
            assert val == pytest.approx(ref, rel=1e-9, abs=1e-9 * max(1.0, abs(ref)))

    def test_partials_vs_finite_differences(self, rng):
        space = DiscreteSpace.uniform(6, 10, 5.0)
        c = rng.normal(size=space.shape)
        x = (2.1, 3.4)
        h = 1e-5
        out = surface_eval(space, c, x, 4)
        for a in range(4):
            for b in range(4 - a):
                fd = (surface_eval(space, c, (x[0] + h, x[1]), 4)[(a, b)]
                      - surface_eval(space, c, (x[0] - h, x[1]), 4)[(a, b)]) / (2 * h)
                assert fd == pytest.approx(out[(a + 1, b)], rel=1e-6, abs=1e-6 * abs(out[(a + 1, b)]) + 1e-9)

    def test_errors(self):
        space = DiscreteSpace.uniform(3, 5, 1.0)
        with pytest.raises(ValueError):
            surface_eval(space, np.zeros((4, 5)), (0.5, 0.5))
        with pytest.raises(ValueError):
            surface_eval(space, np.zeros((5, 5)), (1.5, 0.5))

    def test_row_major_indices(self):
        space = DiscreteSpace.uniform(2, 4, 1.0)
        tab = basis_table(space, (0.0, 0.0), 0)
        r = tab.row(0, 0)
        assert r[0] == 1.0 and r.sum() == pytest.approx(1.0)
        tab = basis_table(space, (0.0, 1.0), 0)
        assert tab.row(0, 0)[3] == pytest.approx(1.0)  # (i1=0, i2=3) -> i2 fastest

    def test_recovery_readiness(self):
        assert DiscreteSpace.uniform(6, 7, 1.0).supports_recovery()
        assert DiscreteSpace.uniform(5, 12, 1.0).supports_recovery()
        assert not DiscreteSpace.uniform(4, 7, 1.0).supports_recovery()

import numpy as np
import pytest

from iga_plate import collocation
from iga_plate.collocation import CollocationSystem, build_grid, moment_row, pde_row
from iga_plate.reference import navier_solution
from iga_plate.solution import SineLoad, SolverError
from iga_plate.splines import DiscreteSpace, interpolate_at_greville

D_TEST = np.array([[7.0, 1.5, 0.0], [1.5, 3.0, 0.0], [0.0, 0.0, 0.8]])


@pytest.fixture(scope="module")
def space():
    return DiscreteSpace.uniform(6, 9, 4.0, L2=3.0)


def coeffs(space, func):
    return interpolate_at_greville(space, func).ravel()


class TestGrid:
    @pytest.mark.parametrize("m, edges, interior", [(7, 20, 25), (14, 48, 144)])
    def test_counts(self, m, edges, interior):
        g = build_grid(DiscreteSpace.uniform(6, m, 10.0))
        assert g.count("corner") == 4
        assert g.count("edge") == edges
        assert g.count("interior") == interior

    def test_points_and_normals(self):
        g = build_grid(DiscreteSpace.uniform(6, 7, 12.0))
        np.testing.assert_allclose(g.points[:, 0, 0], np.arange(7) * 2.0)
        assert tuple(g.normals[0, 3]) == (-1.0, 0.0)
        assert tuple(g.normals[6, 3]) == (1.0, 0.0)
        assert tuple(g.normals[3, 0]) == (0.0, -1.0)
        assert tuple(g.normals[3, 6]) == (0.0, 1.0)
        assert tuple(g.normals[0, 0]) == (0.0, 0.0)


class TestRows:
    def test_pde_row_quartic(self, space):
        r = pde_row(space, D_TEST, (1.3, 2.1))
        assert r @ coeffs(space, lambda x, y: x**4) == pytest.approx(-24 * D_TEST[0, 0], rel=1e-9)
        assert r @ coeffs(space, lambda x, y: y**4) == pytest.approx(-24 * D_TEST[1, 1], rel=1e-9)
        coupling = D_TEST[0, 1] + 2 * D_TEST[2, 2]
        assert r @ coeffs(space, lambda x, y: x**2 * y**2) == pytest.approx(-8 * coupling, rel=1e-9)

    @pytest.mark.parametrize("func", [
        lambda x, y: x**3 + y**3, lambda x, y: x * y**3 + x**3 * y, lambda x, y: x**2 * y + 5.0,
    ])
    def test_pde_row_annihilates_low_order(self, space, func):
        r = pde_row(space, D_TEST, (2.2, 0.7))
        c = coeffs(space, func)
        assert abs(r @ c) < 1e-9 * np.abs(r).max() * np.abs(c).max()

    def test_moment_rows(self, space):
        c = coeffs(space, lambda x, y: x**2)
        # M = -D kappa and r . w = -M_nn
        assert moment_row(space, D_TEST, (0.0, 1.0), (-1, 0)) @ c == pytest.approx(2 * D_TEST[0, 0], rel=1e-9)
        assert moment_row(space, D_TEST, (1.0, 3.0), (0, 1)) @ c == pytest.approx(2 * D_TEST[0, 1], rel=1e-9)
        twist = coeffs(space, lambda x, y: x * y)
        assert abs(moment_row(space, D_TEST, (4.0, 1.0), (1, 0)) @ twist) < 1e-9

    def test_row_errors(self, space):
        with pytest.raises(ValueError):
            pde_row(space, D_TEST, (0.0, 1.0))
        with pytest.raises(ValueError):
            moment_row(space, D_TEST, (0.0, 0.0), (-1, 0))
        with pytest.raises(ValueError):
            moment_row(space, D_TEST, (0.0, 1.0), (0, 1))
        with pytest.raises(ValueError):
            moment_row(space, D_TEST, (0.0, 1.0), (-0.6, 0.8))
        with pytest.raises(ValueError):
            moment_row(space, D_TEST, (1.0, 1.0), (1, 0))


class TestAssemble:
    @pytest.mark.parametrize("policy, rows", [("lsq-moment", 45), ("pde-only", 25), ("moment-replace", 29)])
    def test_row_counts(self, bench_space, D11, policy, rows):
        sys = collocation.assemble(bench_space, D11, SineLoad.for_space(bench_space, 1.0), policy)
        assert sys.A.shape == (rows, 25) and sys.b.shape == (rows,)
        assert list(sys.row_kinds[:1]) == (["pde"] if policy == "pde-only" else ["moment"])

    def test_normalized_rows(self, bench_space, D11):
        sys = collocation.assemble(bench_space, D11, SineLoad.for_space(bench_space, 1.0))
        np.testing.assert_allclose(np.abs(sys.A).max(axis=1), 1.0)
        raw = collocation.assemble(bench_space, D11, SineLoad.for_space(bench_space, 1.0), normalize=False)
        assert np.abs(raw.A).max() > 10
        assert np.all(sys.b[sys.row_kinds == "moment"] == 0)
        assert np.all(raw.b[raw.row_kinds == "pde"] < 0)

    def test_bad_arguments(self, bench_space, D11):
        load = SineLoad.for_space(bench_space, 1.0)
        with pytest.raises(ValueError, match="policy"):
            collocation.assemble(bench_space, D11, load, "galerkin")
        with pytest.raises(ValueError):
            collocation.assemble(bench_space, D11, load, omega=0.0)


class TestSolve:
    @pytest.mark.parametrize("policy", ["lsq-moment", "moment-replace", "pde-only"])
    def test_deterministic_and_linear(self, bench_space, D11, policy):
        a = collocation.solve_plate(bench_space, D11, 1.0, policy)
        b = collocation.solve_plate(bench_space, D11, 1.0, policy)
        np.testing.assert_array_equal(a.coeffs, b.coeffs)
        c = collocation.solve_plate(bench_space, D11, 3.0, policy)
        np.testing.assert_allclose(c.coeffs, 3 * a.coeffs, rtol=1e-9, atol=1e-12 * np.abs(a.coeffs).max())

    def test_lsq_moment_converges(self, layup11, D11):
        L = 20 * layup11.thickness
        W = navier_solution(D11, L, 1.0).W
        errs = [abs(collocation.solve_plate(DiscreteSpace.uniform(6, m, L), D11, 1.0).deflection(L / 2, L / 2) - W) / W
                for m in (7, 14, 21)]
        assert errs[0] > errs[1] > errs[2]
        assert errs[2] < 2e-3

    def test_moment_replace_is_consistent(self, bench_space, D11):
        f = collocation.solve_plate(bench_space, D11, 1.0, "moment-replace")
        d = f.diagnostics
        assert d["rows"] == 29 and d["pde_residual"] < 1e-9 and d["moment_residual"] < 1e-9

    def test_pde_only_leaves_edge_moment(self, bench_space, D11):
        # no moment rows: the edge bending moment is not driven to zero
        d = collocation.solve_plate(bench_space, D11, 1.0, "pde-only").diagnostics
        lsq = collocation.solve_plate(bench_space, D11, 1.0, "lsq-moment").diagnostics
        assert d["edge_moment_ratio"] > 10 * lsq["edge_moment_ratio"]

    def test_rank_deficiency_reported(self, bench_space):
        A = np.random.default_rng(0).normal(size=(6, 4))
        A[:, 2] = A[:, 1]
        sys = CollocationSystem(bench_space, A, np.ones(6), np.arange(4), np.array(["pde"] * 6),
                                np.zeros((6, 2)), "lsq-moment", 1.0, False)
        with pytest.raises(SolverError, match="deficient column [12]"):
            collocation.solve(sys)

    def test_underdetermined_rejected(self, bench_space):
        sys = CollocationSystem(bench_space, np.ones((2, 4)), np.ones(2), np.arange(4), np.array(["pde"] * 2),
                                np.zeros((2, 2)), "lsq-moment", 1.0, False)
        with pytest.raises(SolverError):
            collocation.solve(sys)

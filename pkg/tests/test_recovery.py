import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import simpson, trapezoid

from iga_plate.materials import (TABLE1, Layup, bending_stiffness, cross_ply_layup, homogenize,
                                 in_plane_ply_matrix)
from iga_plate.recovery import (BodyForce, DeflectionJet, build_thickness_grid, deflection_jet,
                                in_plane_derivative_profiles, in_plane_profile, membrane_coupling,
                                recover_profile)
from iga_plate.reference import navier_solution
from iga_plate.solution import SolutionField
from iga_plate.splines import DiscreteSpace, interpolate_at_greville


def navier_jet(layup, S, frac=(0.25, 0.25), sigma0=1.0):
    L = S * layup.thickness
    D = bending_stiffness(homogenize(layup), layup.thickness)
    nav = navier_solution(D, L, sigma0)
    return nav.jet(frac[0] * L, frac[1] * L), sigma0 * np.sin(np.pi * frac[0]) * np.sin(np.pi * frac[1])


class TestGrid:
    def test_layout(self, layup11):
        g = build_thickness_grid(layup11, 20)
        assert len(g.z) == 220 and g.n_plies == 11
        assert g.z[0] == -5.5 and g.z[-1] == 5.5
        assert g.z[19] == g.z[20] == -4.5
        assert g.ply[19] == 0 and g.ply[20] == 1

    def test_interface_side(self, layup11):
        g = build_thickness_grid(layup11, 5)
        assert g.index_of(-4.5, "lower") == 4
        assert g.index_of(-4.5, "upper") == 5
        with pytest.raises(KeyError):
            g.index_of(0.1234)

    def test_extra_nodes(self, layup11):
        g = build_thickness_grid(layup11, 20, extra=(11 / 4, 0.0))
        assert np.any(np.isclose(g.z, 2.75))
        assert g.ply[g.index_of(2.75)] == 8
        assert len(g.z) == 222

    @pytest.mark.parametrize("kw", [dict(nodes_per_ply=1), dict(extra=(6.0,))])
    def test_errors(self, layup11, kw):
        with pytest.raises(ValueError):
            build_thickness_grid(layup11, **kw)


class TestJet:
    def test_from_discrete_field(self):
        space = DiscreteSpace.uniform(6, 9, 3.0)
        field = SolutionField(space, interpolate_at_greville(space, lambda x, y: x**4 + x**2 * y**2))
        jet = deflection_jet(field, (1.0, 2.0))
        assert jet(4, 0) == pytest.approx(24.0, rel=1e-9)
        assert jet(2, 2) == pytest.approx(4.0, rel=1e-9)
        assert jet(3, 0) == pytest.approx(24.0, rel=1e-9)
        np.testing.assert_allclose(jet.kappa(), [12 + 8, 2, 2 * 8], rtol=1e-9)

    def test_requires_c4(self):
        space = DiscreteSpace.uniform(4, 9, 3.0)
        with pytest.raises(ValueError, match="C4"):
            deflection_jet(SolutionField(space, np.zeros(space.shape)), (1.0, 1.0))

    def test_navier_jet_vs_finite_differences(self):
        nav = navier_solution(np.diag([3.0, 2.0, 1.0]), 7.0, 1.0)
        jet = nav.jet(2.0, 3.0)
        h = 1e-4
        fd = (nav.partial(2, 1, 2.0 + h, 3.0) - nav.partial(2, 1, 2.0 - h, 3.0)) / (2 * h)
        assert jet(3, 1) == pytest.approx(fd, rel=1e-6)


class TestInPlane:
    def test_single_ply_linear_in_z(self):
        lay = Layup((TABLE1.with_thickness(2.0),))
        g = build_thickness_grid(lay, 5)
        jet = DeflectionJet.from_function(lambda a, b: {(2, 0): 1.0, (0, 2): 0.5, (1, 1): 0.25}.get((a, b), 0.0))
        s11, s22, s12 = in_plane_profile(jet, lay, g)
        Q = in_plane_ply_matrix(TABLE1)
        k = np.array([1.0, 0.5, 0.5])
        np.testing.assert_allclose(np.stack([s11, s22, s12], 1), -g.z[:, None] * (Q @ k)[None, :], atol=1e-12)

    def test_derivative_keys(self, layup11):
        jet, _ = navier_jet(layup11, 20)
        d = in_plane_derivative_profiles(jet, layup11, build_thickness_grid(layup11, 3))
        assert set(d) == {f"{c},{l}" for c in ("s11", "s22", "s12") for l in ("1", "2", "11", "12", "22")}

    def test_membrane_coupling_inert_for_symmetric(self, layup11):
        assert np.abs(membrane_coupling(layup11)).max() < 1e-12
        jet, _ = navier_jet(layup11, 20)
        g = build_thickness_grid(layup11, 6)
        a = recover_profile(jet, layup11, g, coupling=True)
        b = recover_profile(jet, layup11, g, coupling=False)
        np.testing.assert_allclose(a.s13, b.s13, atol=1e-12 * np.abs(a.s13).max())

    def test_membrane_resultant_vanishes(self, layup34):
        jet, _ = navier_jet(layup34, 20)
        g = build_thickness_grid(layup34, 2)
        s11, s22, s12 = in_plane_profile(jet, layup34, g)
        for s in (s11, s22, s12):
            # piecewise linear: trapezoid is exact
            assert abs(trapezoid(s, g.z)) < 1e-10 * np.abs(s).max() * 34


class TestOutOfPlane:
    def test_single_ply_parabola(self):
        t = 3.0
        lay = Layup((TABLE1.with_thickness(t),))
        jet, _ = navier_jet(lay, 10)
        g = build_thickness_grid(lay, 20)
        prof = recover_profile(jet, lay, g)
        Q = in_plane_ply_matrix(TABLE1)
        c13 = Q[0, 0] * jet(3, 0) + (Q[0, 1] + 2 * Q[2, 2]) * jet(1, 2)
        c23 = Q[1, 1] * jet(0, 3) + (Q[0, 1] + 2 * Q[2, 2]) * jet(2, 1)
        ref13 = c13 * (g.z**2 - t**2 / 4) / 2
        ref23 = c23 * (g.z**2 - t**2 / 4) / 2
        np.testing.assert_allclose(prof.s13, ref13, atol=1e-12 * np.abs(ref13).max())
        np.testing.assert_allclose(prof.s23, ref23, atol=1e-12 * np.abs(ref23).max())

    @pytest.mark.parametrize("n", [1, 2, 11, 34])
    def test_traction_free_faces(self, n):
        lay = cross_ply_layup(n)
        jet, _ = navier_jet(lay, 20)
        prof = recover_profile(jet, lay, build_thickness_grid(lay, 10))
        scale = np.abs(prof.s13).max()
        assert prof.s13[0] == prof.s23[0] == prof.s33[0] == 0.0
        assert abs(prof.s13[-1]) < 1e-10 * scale
        assert abs(prof.s23[-1]) < 1e-10 * np.abs(prof.s23).max()

    def test_top_shear_needs_coupling_for_unsymmetric(self, layup34):
        jet, _ = navier_jet(layup34, 20)
        prof = recover_profile(jet, layup34, build_thickness_grid(layup34, 10), coupling=False)
        assert abs(prof.s13[-1]) > 1e-3 * np.abs(prof.s13).max()

    def test_top_face_balances_load_homogeneous(self):
        # the sign of the double integral is fixed here: s33(top) = +q
        lay = Layup((TABLE1.with_thickness(1.0),))
        jet, q = navier_jet(lay, 20)
        prof = recover_profile(jet, lay, build_thickness_grid(lay, 41), mode="raw")
        assert prof.s33[-1] == pytest.approx(q, rel=1e-3)

    def test_interface_continuity(self, layup11):
        jet, _ = navier_jet(layup11, 20)
        g = build_thickness_grid(layup11, 20)
        prof = recover_profile(jet, layup11, g)
        for zi in layup11.interfaces[1:-1]:
            lo, hi = g.index_of(zi, "lower"), g.index_of(zi, "upper")
            for c in ("s13", "s23", "s33"):
                assert prof.component(c)[lo] == prof.component(c)[hi]
        lo, hi = g.index_of(layup11.interfaces[1], "lower"), g.index_of(layup11.interfaces[1], "upper")
        assert prof.s11[lo] != pytest.approx(prof.s11[hi])

    @pytest.mark.parametrize("layers", [11, 33])
    def test_shear_resultant_matches_moment_gradient(self, layers):
        lay = cross_ply_layup(layers)
        jet, _ = navier_jet(lay, 20)
        g = build_thickness_grid(lay, 21)
        prof = recover_profile(jet, lay, g)
        # int s13 = M11,1 + M12,2, both integrals exact for these polynomials
        total = sum(simpson(prof.s13[g.ply == k], x=g.z[g.ply == k]) for k in range(len(lay)))
        zi = lay.interfaces
        m = 0.0
        for k in range(len(lay)):
            Q = in_plane_ply_matrix(lay.stiffness(k))
            z3 = (zi[k + 1] ** 3 - zi[k] ** 3) / 3
            m += -z3 * (Q[0] @ jet.kappa(1, 0) + Q[2] @ jet.kappa(0, 1))
        assert total == pytest.approx(m, rel=1e-8)

    def test_body_force_superposition(self, layup11):
        jet, _ = navier_jet(layup11, 20)
        g = build_thickness_grid(layup11, 8)
        base = recover_profile(jet, layup11, g)
        c = 0.37
        loaded = recover_profile(jet, layup11, g, body_force=BodyForce(b1=lambda z: c, b3=lambda z: c))
        np.testing.assert_allclose(loaded.s13 - base.s13, -c * (g.z + layup11.thickness / 2), atol=1e-9)
        np.testing.assert_allclose(loaded.s33 - base.s33, -c * (g.z + layup11.thickness / 2), atol=1e-9)
        np.testing.assert_array_equal(loaded.s23, base.s23)

    @settings(max_examples=25, deadline=None)
    @given(st.floats(-5, 5).filter(lambda x: abs(x) > 1e-3), st.integers(1, 12))
    def test_linear_in_jet(self, lam, n):
        lay = cross_ply_layup(n)
        jet, _ = navier_jet(lay, 20)
        g = build_thickness_grid(lay, 6)
        a = recover_profile(jet, lay, g)
        b = recover_profile(jet.scaled(lam), lay, g)
        for c in ("s11", "s13", "s23", "s33"):
            np.testing.assert_allclose(b.component(c), lam * a.component(c),
                                       atol=1e-12 * abs(lam) * np.abs(a.component(c)).max())

    def test_profile_value_lookup(self, layup11):
        jet, _ = navier_jet(layup11, 20)
        g = build_thickness_grid(layup11, 20, extra=(0.0,))
        prof = recover_profile(jet, layup11, g)
        assert prof.value("s13", 0.0) == prof.s13[g.index_of(0.0)]
        mid = 0.5 * (g.z[3] + g.z[4])
        assert prof.value("s13", mid) == pytest.approx(0.5 * (prof.s13[3] + prof.s13[4]))
        with pytest.raises(KeyError):
            prof.component("s99")

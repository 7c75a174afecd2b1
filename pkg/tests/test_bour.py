import math

import pytest

from bour4.bour import (BourGauge, bernoulli_residual, bour_partner,
                        gauge_complete, gauge_from_expr, gauss_residual,
                        isometry_residual, minimal_pair_identity_residual,
                        natural_gauge, pair_report, parallel_curve_residual,
                        same_gauss_pair_I, same_gauss_pair_II, scale_gauge,
                        vbar, vbar_map)
from bour4.errors import (InfeasibleGaugeError, NotSpacelikeError,
                          ValidationError)
from bour4.expressions import eval_jet
from bour4.families import (SurfaceKind, helicoid_jet, make_helicoid,
                            rotational_jet)
from bour4.grids import grid_for
from bour4.surfaces import curvature_report

EX1 = dict(lam=1.0, c3=0.5, domain=(1.1, math.pi))


def spec_I(w="u/2", z="0", lam=1.0, domain=(1.5, 3.0)):
    return make_helicoid("I", lam, {"x": "u", "z": z, "w": w}, domain)


class TestVbar:
    def test_kind_I_constant_w_is_identity(self):
        spec = spec_I(w="3")
        assert vbar(spec, 2.0, 0.7) == 0.7

    def test_kind_III_closed_form(self):
        spec = make_helicoid("III", 1.0, {"x": "u", "z": "0", "w": "u"},
                             (0.75, 3.0))
        assert vbar(spec, 2.0, 0.0) == pytest.approx(0.25, abs=1e-15)

    def test_kind_I_quadrature_vs_closed_antiderivative(self):
        # the first bundled pair has d(shift)/du = -1/(u sqrt(u^4 - 1)),
        # so the tabulated shift must match its quadrature everywhere
        h, _ = same_gauss_pair_I("u", **EX1)
        vb = vbar_map(h)
        from bour4.quadrature import integrate
        f = lambda t: -1.0 / (t * math.sqrt(t ** 4 - 1.0))
        for u in (1.3, 1.9, 2.5, 3.0):
            expected = integrate(f, h.domain[0], u)
            assert vb(u, 0.0) == pytest.approx(expected, abs=1e-8)
            assert vb.du(u) == pytest.approx(f(u), abs=1e-12)

    def test_zero_pitch_shift_vanishes(self):
        spec = make_helicoid("I", 0.0, {"x": "u", "z": "0", "w": "u"}, (1.5, 3.0))
        assert vbar(spec, 2.5, 1.2) == 1.2


class TestGaugeComplete:
    def test_kind_I_b_squared(self):
        spec = spec_I()
        gauge = gauge_complete(spec, "a", "0")
        assert gauge.b(2.0).v ** 2 == pytest.approx(0.25 + 0.25, abs=1e-12)
        assert gauge.b(3.0).v ** 2 == pytest.approx(0.25 + 1.0 / 9.0, abs=1e-12)
        assert gauge.residual(spec) < 1e-9

    def test_kind_III_linear_always_solvable(self):
        spec = make_helicoid("III", 1.0, {"x": "u", "z": "c", "w": "u"},
                             (0.75, 3.0), constants={"c": 0.0})
        gauge = gauge_complete(spec, "a", "1")
        assert gauge.b(2.0).v == pytest.approx(1.0 / 16.0, abs=1e-14)
        gauge2 = gauge_complete(spec, "a", "u")  # works for any given a
        assert gauge2.residual(spec) < 1e-9

    def test_kind_I_given_b(self):
        # a^2 = rhs + b^2; with z = 0, w = u/2 the rhs is -1/4 - 1/u^2
        spec = spec_I()
        gauge = gauge_complete(spec, "b", "1")
        assert gauge.a(2.0).v ** 2 == pytest.approx(0.75 - 0.25, abs=1e-12)
        assert gauge.residual(spec) < 1e-9
        grid = grid_for(spec, nu=9, nv=9)
        r = bour_partner(spec, gauge)
        assert isometry_residual(spec, r, grid) < 1e-7
        with pytest.raises(InfeasibleGaugeError):
            gauge_complete(spec, "b", "0")  # a^2 would be negative everywhere

    def test_kind_II_given_b(self):
        spec = make_helicoid("II", 1.0, {"x": "2*u", "y": "u/4", "w": "0.8 + u"},
                             (0.8, 2.0))
        gauge = gauge_complete(spec, "b", "1/4")
        assert gauge.residual(spec) < 1e-9
        grid = grid_for(spec, nu=9, nv=9)
        assert isometry_residual(spec, bour_partner(spec, gauge), grid) < 1e-7

    def test_kind_III_given_b_square_root_branch(self):
        spec = make_helicoid("III", 1.0, {"x": "u", "z": "u/8", "w": "u + u^2/10"},
                             (1.2, 2.5))
        gauge = gauge_complete(spec, "b", "0")
        assert gauge.residual(spec) < 1e-9
        assert gauge.a(2.0).v >= 0.0

    def test_infeasible_square_reports_interval(self):
        spec = spec_I(z="3*u", w="0")  # rhs >> 0, so b^2 = a^2 - rhs < 0 for a = 0
        with pytest.raises(InfeasibleGaugeError) as info:
            gauge_complete(spec, "a", "0")
        lo, hi = info.value.interval
        assert 1.5 <= lo < hi <= 3.0

    def test_given_name_validated(self):
        with pytest.raises(ValidationError):
            gauge_complete(spec_I(), "c", "0")


class TestBourPartner:
    def test_right_helicoid_partner_components(self):
        # x = u, z = c1, w = 0, pitch 1, a = 0: partner must be
        # (sqrt(u^2-1) cos t, sqrt(u^2-1) sin t, c2, asinh(sqrt(u^2-1)) + c4)
        spec = make_helicoid("I", 1.0, {"x": "u", "z": "c1", "w": "0"},
                             (1.5, 3.0), constants={"c1": 0.3})
        gauge = gauge_complete(spec, "a", "0")
        c2, c4 = 0.7, -0.2
        anchor = math.asinh(math.sqrt(1.5 ** 2 - 1.0))
        r = bour_partner(spec, gauge, constants=(c2, c4 + anchor))
        for u in (1.6, 2.0, 2.8):
            assert r.n(u).v == pytest.approx(math.sqrt(u * u - 1.0), abs=1e-12)
            assert r.s(u).v == pytest.approx(c2, abs=1e-12)
            assert r.r(u).v == pytest.approx(math.asinh(math.sqrt(u * u - 1.0)) + c4,
                                             abs=1e-9)

    def test_kind_I_needs_radial_positivity(self):
        spec = make_helicoid("I", 2.0, {"x": "u", "z": "0", "w": "0"}, (1.5, 3.0))
        gauge = BourGauge(SurfaceKind.I, gauge_from_expr("0"), gauge_from_expr("1"))
        with pytest.raises(NotSpacelikeError):
            bour_partner(spec, gauge)  # x^2 < lambda^2 near u = 1.5

    def test_zero_pitch_natural_gauge_reproduces_surface(self):
        spec = make_helicoid("I", 0.0, {"x": "u", "z": "sin(u)/4", "w": "u/3"},
                             (1.5, 3.0))
        gauge = natural_gauge(spec)
        assert gauge.residual(spec) < 1e-12
        r = bour_partner(spec, gauge,
                         constants=(math.sin(1.5) / 4.0, 0.5))
        for u, v in [(1.7, 0.4), (2.4, 1.3), (2.95, 2.0)]:
            a = helicoid_jet(spec, u, v)
            b = rotational_jet(r, u, v)
            for va, vb in zip(a, b):
                assert tuple(va) == pytest.approx(tuple(vb), abs=1e-9)

    def test_gauge_kind_checked(self):
        gauge = BourGauge(SurfaceKind.II, gauge_from_expr("0"), gauge_from_expr("1"))
        with pytest.raises(ValidationError):
            bour_partner(spec_I(), gauge)


class TestIsometry:
    def test_kind_I_residual_small(self):
        spec = spec_I()
        r = bour_partner(spec, gauge_complete(spec, "a", "0"))
        grid = grid_for(spec, nu=17, nv=17)
        assert isometry_residual(spec, r, grid) < 1e-7

    def test_wrong_gauge_is_detected(self):
        spec = spec_I()
        gauge = gauge_complete(spec, "a", "0")
        bad = bour_partner(spec, scale_gauge(gauge, b_factor=1.1))
        grid = grid_for(spec, nu=9, nv=9)
        assert isometry_residual(spec, bad, grid) > 1e-3

    def test_zero_pitch_residual_is_rounding(self):
        spec = make_helicoid("II", 0.0, {"x": "2*u", "y": "u/4", "w": "0.8 + u"},
                             (0.5, 1.5))
        r = bour_partner(spec, natural_gauge(spec))
        grid = grid_for(spec, nu=9, nv=9)
        assert isometry_residual(spec, r, grid) < 1e-11

    def test_all_kinds_with_two_gauges(self):
        cases = [
            (spec_I(), ("a", "0"), ("a", "1/2")),
            (make_helicoid("II", 1.0, {"x": "2*u", "y": "u/4", "w": "0.8 + u"},
                           (0.8, 2.0)), ("a", "0"), ("a", "1")),
            (make_helicoid("III", 1.0, {"x": "u", "z": "u/8", "w": "u + u^2/10"},
                           (1.2, 2.5)), ("a", "1"), ("b", "0")),
        ]
        for spec, g1, g2 in cases:
            grid = grid_for(spec, nu=9, nv=9)
            for given, expr in (g1, g2):
                r = bour_partner(spec, gauge_complete(spec, given, expr))
                assert isometry_residual(spec, r, grid) < 1e-7


class TestSameGaussPairs:
    def test_kind_I_example_parameters(self):
        h, r = same_gauss_pair_I("u", **EX1)
        grid = grid_for(h, nu=17, nv=17)
        assert gauss_residual(h, r, grid) < 1e-7
        rep = pair_report(h, r, grid)
        assert rep.verdicts == {"isometric": True, "same_gauss": True,
                                "minimal": True, "hyperplanar": True}

    def test_kind_I_profile_matches_bundled_display(self):
        h, _ = same_gauss_pair_I("u", **EX1)
        w = dict(h.profile)["w"]
        for u in (1.3, 2.0, 2.9):
            expect = (math.asinh(math.sqrt((u * u - 1) / 2))
                      - math.atan(math.sqrt((u * u - 1) / (u * u + 1))))
            assert eval_jet(w, u, h.consts).v == pytest.approx(expect, abs=1e-12)

    def test_kind_I_sign_branches(self):
        for sw, sr in [(1, 1), (-1, 1), (1, -1), (-1, -1)]:
            h, r = same_gauss_pair_I("u", 1.0, 0.5, sign_w=sw, sign_r=sr,
                                     domain=(1.2, 2.5))
            grid = grid_for(h, nu=7, nv=7)
            assert gauss_residual(h, r, grid) < 1e-7, (sw, sr)

    def test_kind_I_right_helicoid_limit(self):
        h, r = same_gauss_pair_I("u", 1.0, 1.0, domain=(1.5, 3.0))
        w = dict(h.profile)["w"]
        assert all(eval_jet(w, u, h.consts).v == 0.0 for u in (1.6, 2.2, 2.9))
        grid = grid_for(h, nu=9, nv=9)
        assert gauss_residual(h, r, grid) < 1e-7
        rep = pair_report(h, r, grid)
        assert max(rep.max_mean_curvature) < 1e-9

    def test_kind_I_parameter_range(self):
        with pytest.raises(ValidationError):
            same_gauss_pair_I("u", 1.0, 2.0)
        with pytest.raises(ValidationError):
            same_gauss_pair_I("u", 1.0, -0.5)
        with pytest.raises(ValidationError):
            same_gauss_pair_I("u", 0.0, 0.5)

    def test_kind_II_example_parameters(self):
        h, r = same_gauss_pair_II("u", 1.0, -0.5, domain=(0.2, 0.9))
        grid = grid_for(h, nu=17, nv=17)
        assert gauss_residual(h, r, grid) < 1e-7
        rep = pair_report(h, r, grid)
        assert rep.verdicts == {"isometric": True, "same_gauss": True,
                                "minimal": True, "hyperplanar": True}

    def test_kind_II_wrong_orientation_fails(self):
        h, r = same_gauss_pair_II("u", 1.0, -0.5, domain=(0.2, 0.9))
        grid = grid_for(h, nu=7, nv=7)
        assert gauss_residual(h, r, grid, sign=-1) > 1e-3

    def test_kind_II_right_helicoid_rejected(self):
        with pytest.raises(ValidationError):
            same_gauss_pair_II("2", 1.0, -0.5, domain=(0.2, 0.9))

    def test_kind_II_parameter_range(self):
        with pytest.raises(ValidationError):
            same_gauss_pair_II("u", 1.0, 0.5)
        with pytest.raises(ValidationError):
            same_gauss_pair_II("u", 1.0, -2.0)

    def test_kind_II_asin_domain_guarded(self):
        with pytest.raises(ValidationError):
            same_gauss_pair_II("u", 1.0, -0.5, domain=(0.2, 1.5))


class TestGaussResidual:
    def test_surface_against_itself(self):
        spec = make_helicoid("I", 0.0, {"x": "u", "z": "0", "w": "u/3"},
                             (1.5, 3.0))
        r = bour_partner(spec, natural_gauge(spec), constants=(0.0, 1.0 / 2.0))
        grid = grid_for(spec, nu=9, nv=9)
        assert gauss_residual(spec, r, grid) < 1e-11

    def test_generic_pair_differs(self):
        spec = spec_I()
        r = bour_partner(spec, gauge_complete(spec, "a", "1/2"))
        grid = grid_for(spec, nu=9, nv=9)
        rep = pair_report(spec, r, grid)
        assert rep.verdicts["isometric"]
        assert not rep.verdicts["same_gauss"]

    def test_null_plane_pair_differs_but_is_isometric(self):
        h = make_helicoid("III", 1.0, {"x": "u", "z": "c", "w": "u"},
                          (0.75, math.pi), constants={"c": 0.0},
                          v_domain=(-math.pi, math.pi))
        r = bour_partner(h, gauge_complete(h, "b", "0"))
        grid = grid_for(h, nu=17, nv=17)
        assert isometry_residual(h, r, grid) < 1e-7
        assert gauss_residual(h, r, grid) > 0.1

    def test_null_plane_natural_gauge_shares_gauss_map(self):
        # the translate-partner: the expected-different claim does not
        # extend to the gauge (a, b) = (x'/w', z'/w' + pitch^2/(4 w^2))
        h = make_helicoid("III", 1.0, {"x": "u", "z": "c", "w": "u"},
                          (0.75, math.pi), constants={"c": 0.0})
        r = bour_partner(h, gauge_complete(h, "a", "1"))
        grid = grid_for(h, nu=9, nv=9)
        assert isometry_residual(h, r, grid) < 1e-7
        assert gauss_residual(h, r, grid) < 1e-7

    def test_null_plane_natural_gauge_partner_is_a_translate(self):
        # under the correspondence the composed partner differs from the
        # helicoid by one constant vector, so equal Gauss maps are forced
        h = make_helicoid("III", 1.0, {"x": "u", "z": "c", "w": "u"},
                          (0.75, math.pi), constants={"c": 0.0})
        r = bour_partner(h, gauge_complete(h, "a", "1"))
        vb = vbar_map(h)
        pts = [(u, v) for u in (0.9, 1.6, 2.8) for v in (-1.0, 0.2, 1.7)]
        shifts = []
        for u, v in pts:
            d = rotational_jet(r, u, vb(u, v)).X - helicoid_jet(h, u, v).X
            shifts.append(tuple(d))
        first = shifts[0]
        for s in shifts[1:]:
            assert s == pytest.approx(first, abs=1e-9)


class TestGaugeODE:
    def test_exact_solution(self):
        res = bernoulli_residual("1/(1 + c3*(u^2 - lam^2))", "u", 1.0,
                                 (1.5, 3.0), {"c3": 0.5, "lam": 1.0})
        assert res < 1e-10

    def test_unit_equilibrium(self):
        assert bernoulli_residual("1", "u", 1.0, (1.5, 3.0)) == 0.0

    def test_perturbed_solution_detected(self):
        res = bernoulli_residual("1.001/(1 + c3*(u^2 - lam^2))", "u", 1.0,
                                 (1.5, 3.0), {"c3": 0.5, "lam": 1.0})
        assert res > 1e-5

    def test_kind_II_exact_solution(self):
        res = bernoulli_residual("1/(1 + c3*(u^2 + lam^2))", "u", 1.0,
                                 (0.3, 0.9), {"c3": -0.5, "lam": 1.0},
                                 kind=SurfaceKind.II)
        assert res < 1e-10

    def test_minimality_identity_along_constructions(self):
        h1, _ = same_gauss_pair_I("u", **EX1)
        assert minimal_pair_identity_residual(h1) < 1e-8
        h2, _ = same_gauss_pair_II("u", 1.0, -0.5, domain=(0.2, 0.9))
        assert minimal_pair_identity_residual(h2) < 1e-8

    def test_minimality_identity_rejects_generic_profile(self):
        spec = spec_I()  # w = u/2 is not a shared-Gauss-map profile
        assert minimal_pair_identity_residual(spec) > 1e-3


class TestParallelCurves:
    VS = [k * 0.02 for k in range(100)]

    def test_kind_I_circle(self):
        h, r = same_gauss_pair_I("u", **EX1)
        assert parallel_curve_residual(h, r, 2.0, self.VS) < 1e-9

    def test_kind_II_hyperbola(self):
        h, r = same_gauss_pair_II("u", 1.0, -0.5, domain=(0.2, 0.9))
        assert parallel_curve_residual(h, r, 0.5, self.VS) < 1e-9

    def test_kind_III_parabola(self):
        h = make_helicoid("III", 1.0, {"x": "u", "z": "c", "w": "u"},
                          (0.75, math.pi), constants={"c": 0.0})
        r = bour_partner(h, gauge_complete(h, "b", "0"))
        vs = [-1.0 + k * 0.02 for k in range(100)]
        assert parallel_curve_residual(h, r, 2.0, vs) < 1e-9

    def test_detects_wrong_radius(self):
        h, r = same_gauss_pair_I("u", **EX1)
        other = make_helicoid("I", 1.0, {"x": "u + 1/2", "z": "0", "w": "0"},
                              h.domain)
        assert parallel_curve_residual(other, r, 2.0, self.VS) > 1e-2


class TestMeanCurvatureRelation:
    def test_partner_H2_matches_paperlike_formula(self):
        # on the hyperplanar non-minimal pair, the partner's second mean
        # curvature component from the generic pipeline must match the
        # gauge-substituted formula (in magnitude; the split is frame-signed)
        spec = spec_I()
        gauge = gauge_complete(spec, "a", "0")
        r = bour_partner(spec, gauge)
        vb = vbar_map(spec)
        lam = 1.0
        for u in (1.7, 2.0, 2.6):
            x, xp = u, 1.0
            b = gauge.b(u)
            num = -(x * x - lam * lam) * b.d + b.v * x * xp * (b.v ** 2 - 1.0)
            den = (2.0 * (1.0 - b.v ** 2) ** 1.5 * x * xp
                   * math.sqrt(x * x - lam * lam))
            expected = num / den
            rep = curvature_report(rotational_jet(r, u, vb(u, 0.3)))
            assert abs(rep.H2) == pytest.approx(abs(expected), abs=1e-9)

    def test_proportionality_on_minimal_pair(self):
        # both closed forms vanish along the shared-Gauss-map construction,
        # so their stated proportionality holds there
        h, r = same_gauss_pair_I("u", **EX1)
        vb = vbar_map(h)
        for u in (1.5, 2.0, 2.8):
            hj = curvature_report(helicoid_jet(h, u, 0.7))
            rj = curvature_report(rotational_jet(r, u, vb(u, 0.7)))
            x, wp = u, eval_jet(dict(h.profile)["w"], u, h.consts).d1
            assert abs(rj.H2 - x * x * wp * hj.H2) < 1e-8

    def test_proportionality_fails_off_the_minimal_locus(self):
        # negative control documenting that the proportionality is not an
        # identity for general hyperplanar pairs
        spec = spec_I()
        r = bour_partner(spec, gauge_complete(spec, "a", "0"))
        vb = vbar_map(spec)
        u = 2.0
        hj = curvature_report(helicoid_jet(spec, u, 0.3))
        rj = curvature_report(rotational_jet(r, u, vb(u, 0.3)))
        assert abs(abs(rj.H2) - abs(u * u * 0.5 * hj.H2)) > 1e-3

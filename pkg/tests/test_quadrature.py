import math

import pytest

from bour4.errors import QuadratureError
from bour4.quadrature import Antiderivative, default_tolerance, integrate


class TestIntegrate:
    @pytest.mark.parametrize("f,a,b,exact", [
        (math.sin, 0.0, math.pi, 2.0),
        (lambda x: x ** 2, 0.0, 1.0, 1.0 / 3.0),
        (lambda x: math.exp(-x), 0.0, 5.0, 1.0 - math.exp(-5.0)),
        (lambda x: 1.0 / (1.0 + x * x), -1.0, 1.0, math.pi / 2.0),
        (lambda x: 1.0 / math.sqrt(x), 1e-4, 1.0, 2.0 - 2e-2),
    ])
    def test_known_integrals(self, f, a, b, exact):
        assert integrate(f, a, b) == pytest.approx(exact, abs=1e-10)

    def test_empty_interval(self):
        assert integrate(math.sin, 1.0, 1.0) == 0.0

    def test_oscillatory(self):
        val = integrate(lambda x: math.sin(40.0 * x), 0.0, 1.0)
        assert val == pytest.approx((1.0 - math.cos(40.0)) / 40.0, abs=1e-10)

    def test_non_finite_integrand_fails(self):
        with pytest.raises(QuadratureError):
            integrate(lambda x: 1.0 / x if x != 0.0 else math.inf, -1.0, 1.0)

    def test_non_integrable_singularity_fails(self):
        with pytest.raises(QuadratureError):
            integrate(lambda x: 1.0 / (x - 0.3) ** 2 if x != 0.3 else math.inf,
                      0.0, 1.0)


class TestAntiderivative:
    def test_matches_closed_form(self):
        F = Antiderivative(math.cos, 0.0, 6.0)
        for i in range(121):
            u = 6.0 * i / 120
            assert F(u) == pytest.approx(math.sin(u), abs=1e-10)

    def test_interpolation_between_nodes(self):
        F = Antiderivative(lambda x: math.exp(x) * math.cos(3 * x), 0.0, 2.0)
        exact = lambda x: math.exp(x) * (math.cos(3 * x) + 3 * math.sin(3 * x)) / 10.0
        for i in range(997):
            u = 2.0 * i / 996
            assert F(u) == pytest.approx(exact(u) - exact(0.0), abs=1e-9)

    def test_total(self):
        F = Antiderivative(lambda x: x ** 3, 0.0, 2.0)
        assert F.total == pytest.approx(4.0, abs=1e-11)

    def test_queries_outside_build_interval(self):
        F = Antiderivative(math.cos, 0.0, 1.0)
        assert F(-0.5) == pytest.approx(math.sin(-0.5), abs=1e-9)
        assert F(1.3) == pytest.approx(math.sin(1.3), abs=1e-9)

    def test_decreasing_interval_rejected(self):
        with pytest.raises(QuadratureError):
            Antiderivative(math.sin, 2.0, 1.0)


class TestEnvironmentOverride:
    def test_default(self, monkeypatch):
        monkeypatch.delenv("LB_QUAD_TOL", raising=False)
        assert default_tolerance() == 1e-11

    def test_override(self, monkeypatch):
        monkeypatch.setenv("LB_QUAD_TOL", "1e-6")
        assert default_tolerance() == 1e-6

    def test_bad_value(self, monkeypatch):
        monkeypatch.setenv("LB_QUAD_TOL", "banana")
        with pytest.raises(QuadratureError):
            default_tolerance()

    def test_out_of_range(self, monkeypatch):
        monkeypatch.setenv("LB_QUAD_TOL", "2.0")
        with pytest.raises(QuadratureError):
            default_tolerance()

import math

import mpmath
import numpy as np
import pytest

from fracq.errors import DomainError
from fracq.fraccore import FracOrder, OrderClass, gamma, rl_integral, rl_integral_result
from fracq.functions import UNIT, Interval, TestFunction, catalog_functions, get_function
from fracq.quadrature import integrate


def shifted_power(m, iv):
    a = iv.a
    return TestFunction(f"pow{m}", iv,
                        lambda t: (np.asarray(t, dtype=float) - a) ** m,
                        lambda t: m * (np.asarray(t, dtype=float) - a) ** max(m - 1, 0))


def power_rule(m, alpha, a, x):
    return float(mpmath.gamma(m + 1) / mpmath.gamma(m + 1 + alpha) * mpmath.mpf(x - a) ** (m + alpha))


class TestGamma:
    def test_examples(self):
        assert gamma(5) == 24.0
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
        assert gamma(2.5) == pytest.approx(1.5 * 0.5 * math.sqrt(math.pi), rel=1e-14)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_factorials_exact(self, n):
        assert gamma(n + 1) == math.factorial(n)

    @pytest.mark.parametrize("x", [0.1, 0.5, 1.5, 3.7, 10.2])
    def test_recurrence(self, x):
        assert gamma(x + 1) == pytest.approx(x * gamma(x), rel=1e-12)

    def test_against_mpmath(self):
        for x in np.concatenate([np.linspace(0.01, 50, 397), [1e-6, 0.999, 49.99]]):
            assert gamma(x) == pytest.approx(float(mpmath.gamma(x)), rel=1e-12), x

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            gamma(x)


class TestFracOrder:
    @pytest.mark.parametrize("alpha,cls", [(0, OrderClass.ZERO), (0.3, OrderClass.SINGULAR),
                                           (0.999, OrderClass.SINGULAR), (1, OrderClass.REGULAR),
                                           (2.5, OrderClass.REGULAR)])
    def test_regularity(self, alpha, cls):
        assert FracOrder(alpha).regularity is cls

    def test_rejects_negative(self):
        with pytest.raises(DomainError):
            FracOrder(-0.1)


class TestRLIntegral:
    def test_constant_half_order(self):
        expected = 1 / math.gamma(1.5)
        assert rl_integral(get_function("const1"), 0.5, 1.0) == pytest.approx(expected, rel=1e-12)
        assert expected == pytest.approx(1.1283791671, rel=1e-10)

    def test_constant_brute_force(self):
        # direct quadrature of the singular kernel on a graded mesh, as an independent path
        f = get_function("const1")
        pieces = sum(float(mpmath.quad(lambda t: (1 - t) ** (-0.5), [1 - 2.0**-k, 1 - 2.0**-(k + 1)]))
                     for k in range(40))
        pieces += 2 * 2.0 ** (-20)  # exact tail over [1 - 2^-40, 1]
        assert rl_integral(f, 0.5, 1.0) == pytest.approx(pieces / math.gamma(0.5), rel=1e-8)

    def test_order_one_is_integration(self):
        assert rl_integral(get_function("linear"), 1, 1.0) == pytest.approx(0.5, rel=1e-14)

    def test_order_zero_is_identity(self, unit_functions):
        for f in unit_functions:
            assert rl_integral(f, 0, 1.0) == float(f.f(1.0))
            assert rl_integral(f, FracOrder(0.0), 0.3) == float(f.f(0.3))

    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    @pytest.mark.parametrize("alpha", [0.25, 0.5, 1, 1.5, 2])
    @pytest.mark.parametrize("iv,x", [(UNIT, 1.0), (UNIT, 0.4), (Interval(1, 3), 3.0)])
    def test_power_rule(self, m, alpha, iv, x):
        f = shifted_power(m, iv)
        assert rl_integral(f, alpha, x) == pytest.approx(power_rule(m, alpha, iv.a, x), rel=1e-8)

    def test_semigroup(self, unit_functions):
        for f in unit_functions:
            def inner(t):
                t = np.atleast_1d(np.asarray(t, dtype=float))
                return np.array([integrate(f.eval_f, Interval(0, v), 1e-12).value if v > 0 else 0.0
                                 for v in t.ravel()]).reshape(t.shape)

            g = TestFunction("J1f", UNIT, inner, f.eval_f)
            assert rl_integral(g, 1, 1.0) == pytest.approx(rl_integral(f, 2, 1.0), rel=1e-8, abs=1e-12), f.id

    def test_continuity_across_one(self, unit_functions):
        for f in unit_functions:
            lo = rl_integral(f, 1 - 1e-6, 1.0)
            hi = rl_integral(f, 1 + 1e-6, 1.0)
            # cubic_ext integrates to 0, so measure against the size of |f|
            scale = max(abs(lo), abs(hi), integrate(lambda t: np.abs(f.f(t)), UNIT).value)
            assert abs(lo - hi) <= 1e-4 * scale, f.id

    def test_error_estimate_attached(self):
        res = rl_integral_result(get_function("exp"), 0.5, 1.0)
        assert res.error_estimate >= 0
        assert res.evaluations >= 1

    def test_domain_errors(self):
        f = get_function("exp")
        with pytest.raises(DomainError):
            rl_integral(f, 0.5, 0.0)
        with pytest.raises(DomainError):
            rl_integral(f, 0.5, 1.5)
        with pytest.raises(DomainError):
            rl_integral(f, -0.5, 1.0)

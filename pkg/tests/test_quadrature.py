import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import beta

from fracq.errors import DomainError, NonConvergence
from fracq.functions import UNIT, Interval, catalog_functions, get_function
from fracq.quadrature import (
    TOL_ENV_VAR,
    HolderPair,
    QuadResult,
    default_tol,
    integrate,
    integrate_weighted_right,
    lp_norm,
    sup_norm,
)


class TestIntegrate:
    def test_unit_constant(self):
        assert integrate(lambda t: 1.0, UNIT, 1e-10).value == 1.0

    def test_cubic(self):
        assert integrate(lambda t: t**3, Interval(0, 2), 1e-10).value == pytest.approx(4.0, rel=1e-14)

    def test_sine(self):
        res = integrate(lambda t: np.sin(np.pi * t), UNIT, 1e-10)
        assert res.value == pytest.approx(2 / math.pi, abs=1e-10)
        assert abs(res.value - 2 / math.pi) <= max(1e-10, res.error_estimate)

    @pytest.mark.parametrize("k", range(11))
    @pytest.mark.parametrize("iv", [Interval(0, 1), Interval(0, 10), Interval(-3, 7), Interval(2.5, 3.0)])
    def test_monomial_exactness(self, k, iv):
        exact = (iv.b ** (k + 1) - iv.a ** (k + 1)) / (k + 1)
        res = integrate(lambda t: t**k, iv, 1e-10)
        scale = integrate(lambda t: np.abs(t) ** k, iv, 1e-10).value
        assert abs(res.value - exact) <= 1e-12 * max(abs(exact), scale)

    @settings(max_examples=60, deadline=None)
    @given(coef=st.lists(st.floats(-5, 5), min_size=1, max_size=11),
           a=st.floats(-5, 5), length=st.floats(0.01, 10))
    def test_polynomial_exactness_property(self, coef, a, length):
        iv = Interval(a, a + length)
        poly = np.polynomial.Polynomial(coef)
        anti = poly.integ()
        exact = anti(iv.b) - anti(iv.a)
        res = integrate(poly, iv, 1e-10)
        scale = integrate(lambda t: np.abs(poly(t)), iv, 1e-10).value
        assert abs(res.value - exact) <= 1e-12 * max(scale, 1e-300) + 1e-300

    def test_against_mpmath(self):
        for fn, mp in [(np.exp, mpmath.exp), (lambda t: np.sqrt(t), mpmath.sqrt),
                       (lambda t: np.log1p(t) * np.cos(7 * t), lambda t: mpmath.log1p(t) * mpmath.cos(7 * t))]:
            res = integrate(fn, Interval(0, 2), 1e-10)
            ref = float(mpmath.quad(mp, [0, 2]))
            assert abs(res.value - ref) <= max(1e-10, res.error_estimate)

    def test_scalar_integrand(self):
        res = integrate(lambda t: math.exp(t), UNIT, 1e-10, vectorized=False)
        assert res.value == pytest.approx(math.e - 1, abs=1e-12)

    def test_result_fields(self):
        res = integrate(np.exp, UNIT, 1e-10)
        assert res.error_estimate >= 0
        assert res.evaluations >= 1

    def test_budget_exhaustion(self):
        with pytest.raises(NonConvergence):
            integrate(lambda t: np.sign(np.sin(1 / (t + 1e-3))), UNIT, 1e-14, max_evaluations=3000)

    def test_nonfinite_integrand(self):
        with pytest.raises(DomainError):
            integrate(lambda t: np.full_like(t, np.inf), UNIT, 1e-10)

    def test_bad_tolerance(self):
        with pytest.raises(DomainError):
            integrate(np.exp, UNIT, 0.0)


class TestWeightedRight:
    def test_examples(self):
        assert integrate_weighted_right(lambda t: 1.0, UNIT, 0.5, 1e-10).value == pytest.approx(2.0, rel=1e-13)
        assert integrate_weighted_right(lambda t: 1.0, Interval(0, 3), 2, 1e-10).value == pytest.approx(4.5, rel=1e-13)
        assert integrate_weighted_right(lambda t: t, UNIT, 1, 1e-10).value == pytest.approx(0.5, rel=1e-14)

    @pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75, 1.5])
    @pytest.mark.parametrize("m", [0, 1, 2])
    @pytest.mark.parametrize("iv", [UNIT, Interval(1.0, 3.5)])
    def test_beta_oracle(self, alpha, m, iv):
        res = integrate_weighted_right(lambda t: (t - iv.a) ** m, iv, alpha, 1e-10)
        exact = iv.length ** (alpha + m) * beta(m + 1, alpha)
        assert res.value == pytest.approx(exact, rel=1e-9)

    @pytest.mark.parametrize("alpha", [1, 1.5, 2, 3])
    def test_substitution_matches_direct(self, alpha, unit_functions):
        for f in unit_functions:
            sub = integrate_weighted_right(f.eval_f, UNIT, alpha, 1e-10, method="substitution").value
            direct = integrate_weighted_right(f.eval_f, UNIT, alpha, 1e-10, method="direct").value
            assert sub == pytest.approx(direct, rel=1e-9, abs=1e-12), f.id

    def test_singular_weight_stays_cheap(self):
        res = integrate_weighted_right(np.exp, UNIT, 0.1, 1e-10)
        # e * lower incomplete gamma(0.1, 1) after u = 1 - t
        ref = float(mpmath.e * mpmath.gammainc(0.1, 0, 1))
        assert res.value == pytest.approx(ref, rel=1e-9)
        assert res.evaluations < 2000

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            integrate_weighted_right(np.exp, UNIT, 0.0, 1e-10)
        with pytest.raises(DomainError):
            integrate_weighted_right(np.exp, UNIT, 0.5, 1e-10, method="direct")


class TestNorms:
    def test_lp_examples(self):
        assert lp_norm(lambda s: np.ones_like(s), UNIT, 2) == pytest.approx(1.0, rel=1e-14)
        assert lp_norm(lambda s: s, UNIT, 2) == pytest.approx(math.sqrt(1 / 3), rel=1e-12)
        assert lp_norm(lambda s: 2.0 + 0 * s, Interval(0, 4), 2) == pytest.approx(4.0, rel=1e-13)

    def test_lp_rejects_p_le_1(self):
        with pytest.raises(DomainError):
            lp_norm(np.exp, UNIT, 1.0)

    def test_lp_monotone_in_p_for_pow32(self):
        df = get_function("pow32").eval_df
        norms = [lp_norm(df, UNIT, p) for p in (1.25, 2, 4, 10)]
        assert all(x <= y for x, y in zip(norms, norms[1:]))

    def test_sup_examples(self):
        assert sup_norm(lambda s: s, UNIT) == 1.0
        assert sup_norm(lambda s: np.sin(np.pi * s), UNIT) == pytest.approx(1.0, abs=1e-15)
        assert sup_norm(lambda s: -3.0 + 0 * s, Interval(0, 2)) == 3.0

    def test_sup_refines_between_grid_points(self):
        # peak at an irrational point off the 4097 grid
        c = 1 / math.sqrt(2)
        df = lambda s: np.exp(-1e6 * (s - c) ** 2)
        grid_max = np.max(np.abs(df(np.linspace(0, 1, 4097))))
        est = sup_norm(df, UNIT)
        assert est >= grid_max
        assert est == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("p", [2, 4, 10])
    def test_sup_dominates_lp_on_unit_interval(self, p, unit_functions):
        for f in unit_functions:
            assert sup_norm(f.eval_df, UNIT) >= lp_norm(f.eval_df, UNIT, p) - 1e-12, f.id


class TestHolderPair:
    def test_conjugate(self):
        hp = HolderPair.from_p(4)
        assert hp.q == pytest.approx(4 / 3)
        assert abs(1 / hp.p + 1 / hp.q - 1) <= 1e-14

    def test_rejects(self):
        with pytest.raises(DomainError):
            HolderPair(2, 3)
        with pytest.raises(DomainError):
            HolderPair.from_p(1)


class TestDefaultTolerance:
    def test_default(self, monkeypatch):
        monkeypatch.delenv(TOL_ENV_VAR, raising=False)
        assert default_tol() == 1e-10

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv(TOL_ENV_VAR, "1e-8")
        assert default_tol() == 1e-8

    @pytest.mark.parametrize("raw", ["abc", "-1", "0", "inf"])
    def test_env_invalid(self, monkeypatch, raw):
        monkeypatch.setenv(TOL_ENV_VAR, raw)
        with pytest.raises(DomainError):
            default_tol()


def test_quadresult_invariants():
    with pytest.raises(ValueError):
        QuadResult(1.0, -1.0, 1)
    with pytest.raises(ValueError):
        QuadResult(1.0, 0.0, 0)

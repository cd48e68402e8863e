import math

import numpy as np
import pytest

from fracq.errors import DomainError
from fracq.functions import (
    DENSITY_IDS,
    FUNCTION_IDS,
    UNIT,
    Interval,
    catalog_densities,
    catalog_functions,
    get_density,
    get_function,
)
from fracq.quadrature import integrate

from conftest import SCALED_INTERVALS


def interior(iv, n=101):
    return np.linspace(iv.a, iv.b, n + 2)[1:-1]


def central_diff(g, t, h):
    return (g(t + h) - g(t - h)) / (2 * h)


class TestInterval:
    def test_rejects_reversed_and_degenerate(self):
        with pytest.raises(DomainError):
            Interval(1.0, 1.0)
        with pytest.raises(DomainError):
            Interval(2.0, 1.0)
        with pytest.raises(DomainError):
            Interval(0.0, math.inf)

    def test_parse(self):
        assert Interval.parse("0,3") == Interval(0.0, 3.0)
        with pytest.raises(DomainError):
            Interval.parse("0;3")


class TestCatalogFunctions:
    def test_required_entries(self):
        ids = set(FUNCTION_IDS)
        assert {"const1", "linear", "mono2", "mono3", "mono4", "mono5",
                "exp", "sinpi", "pow32", "cubic_ext"} <= ids

    def test_spot_values(self):
        assert get_function("const1").f(0.7) == 1.0
        assert get_function("exp").df(0.0) == 1.0
        assert get_function("pow32").df(0.25) == pytest.approx(0.75, rel=1e-15)

    def test_pow32_derivative_matches_finite_difference(self):
        f = get_function("pow32")
        assert central_diff(f.f, 0.25, 1e-5) == pytest.approx(0.75, rel=1e-8)

    def test_cubic_has_interior_extrema(self):
        f = get_function("cubic_ext")
        assert f.df(0.5 - 1 / 3) == pytest.approx(0.0, abs=1e-14)
        assert f.df(0.5 + 1 / 3) == pytest.approx(0.0, abs=1e-14)

    @pytest.mark.parametrize("iv", SCALED_INTERVALS)
    def test_derivative_consistency(self, iv):
        h = 1e-5 * iv.length
        t = interior(iv)
        for f in catalog_functions(iv):
            fd = central_diff(f.f, t, h)
            exact = f.df(t)
            np.testing.assert_allclose(fd, exact, rtol=1e-6, atol=1e-6 * np.max(np.abs(exact)) + 1e-12,
                                       err_msg=f.id)

    @pytest.mark.parametrize("iv", SCALED_INTERVALS)
    def test_antiderivative_consistency(self, iv):
        h = 1e-5 * iv.length
        t = interior(iv)
        for f in catalog_functions(iv):
            assert f.antiderivative is not None, f.id
            fd = central_diff(f.antiderivative, t, h)
            exact = f.f(t)
            np.testing.assert_allclose(fd, exact, rtol=1e-6, atol=1e-6 * np.max(np.abs(exact)) + 1e-12,
                                       err_msg=f.id)

    def test_vectorized_shapes(self, unit_functions):
        t = np.linspace(0, 1, 7)
        for f in unit_functions:
            assert f.f(t).shape == t.shape
            assert f.df(t).shape == t.shape

    def test_lookup_is_deterministic(self):
        t = np.linspace(0, 1, 33)
        for fid in FUNCTION_IDS:
            np.testing.assert_array_equal(get_function(fid).f(t), get_function(fid).f(t))

    def test_unknown_id(self):
        with pytest.raises(DomainError):
            get_function("nope")


class TestCatalogDensities:
    def test_required_entries(self):
        assert set(DENSITY_IDS) == {"uniform", "linear", "trunc_exp"}

    def test_spot_values(self):
        assert get_density("uniform").W(0.5) == 0.5
        assert get_density("uniform").W(-1.0) == 0.0
        assert get_density("uniform").W(2.0) == 1.0
        assert get_density("linear").W(0.5) == pytest.approx(0.25, rel=1e-15)

    @pytest.mark.parametrize("iv", SCALED_INTERVALS)
    def test_normalized(self, iv):
        for d in catalog_densities(iv):
            assert integrate(d.eval_w, iv, 1e-12).value == pytest.approx(1.0, abs=1e-10), d.id

    @pytest.mark.parametrize("iv", SCALED_INTERVALS)
    def test_cdf_boundary_values(self, iv):
        for d in catalog_densities(iv):
            assert abs(d.W(iv.a)) <= 1e-12
            assert abs(d.W(iv.b) - 1) <= 1e-12

    @pytest.mark.parametrize("iv", SCALED_INTERVALS)
    def test_cdf_monotone_and_nonnegative_density(self, iv):
        t = np.linspace(iv.a, iv.b, 1001)
        for d in catalog_densities(iv):
            assert np.all(np.diff(d.W(t)) >= 0), d.id
            assert np.all(d.w(t) >= 0), d.id

    @pytest.mark.parametrize("iv", SCALED_INTERVALS)
    def test_cdf_derivative_is_density(self, iv):
        t = interior(iv)
        h = 1e-5 * iv.length
        for d in catalog_densities(iv):
            fd = central_diff(d.W, t, h)
            exact = d.w(t)
            np.testing.assert_allclose(fd, exact, rtol=1e-6, atol=1e-6 * np.max(exact), err_msg=d.id)

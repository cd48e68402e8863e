"""Peano kernels, Montgomery identities and the fractional master identities.

Every identity is exposed as numbers that should agree: either a residual
(identity LHS minus RHS) or the pair of sides.  Double integrals are done
as iterated quadrature with the inner tolerance ten times tighter.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError
from .fraccore import gamma, rl_integral
from .functions import Density, Interval, TestFunction
from .quadrature import default_tol, integrate, integrate_weighted_right

MIN_LENGTH = 1e-6


def scaled_residual(lhs: float, rhs: float) -> float:
    """``|lhs - rhs| / (1 + max(|lhs|, |rhs|))``."""
    return abs(lhs - rhs) / (1.0 + max(abs(lhs), abs(rhs)))


def _check_in(iv: Interval, **points):
    for name, v in points.items():
        arr = np.asarray(v, dtype=float)
        if np.any(arr < iv.a) or np.any(arr > iv.b):
            raise DomainError(f"{name}={v} lies outside [{iv.a}, {iv.b}]")


def peano_kernel(iv: Interval, t: float, s):
    """Plain Peano kernel P(t, s); the second branch owns ``s == t``."""
    _check_in(iv, t=t, s=s)
    s = np.asarray(s, dtype=float)
    L = iv.length
    out = np.where(s < t, (s - iv.a) / L, (s - iv.b) / L)
    return float(out) if out.ndim == 0 else out


def weighted_kernel(d: Density, x: float, t):
    """Weighted Peano kernel: ``W(t)`` for ``t < x``, else ``W(t) - 1``."""
    _check_in(d.domain, x=x, t=t)
    t = np.asarray(t, dtype=float)
    W = d.W(t)
    out = np.where(t < x, W, W - 1.0)
    return float(out) if out.ndim == 0 else out


def _integrate_pieces(g, a: float, b: float, cut: float, tol: float) -> float:
    """Integrate over [a, b] splitting at the kernel jump ``cut``."""
    total = 0.0
    if cut > a:
        total += integrate(g, Interval(a, cut), tol).value
    if cut < b:
        total += integrate(g, Interval(cut, b), tol).value
    return total


def montgomery_residual(f: TestFunction, t: float, tol: float | None = None) -> float:
    iv = f.domain
    _check_in(iv, t=t)
    tol = tol if tol is not None else default_tol()
    mean = integrate(f.eval_f, iv, tol).value / iv.length
    kernel = _integrate_pieces(lambda s: peano_kernel(iv, t, s) * f.df(s), iv.a, iv.b, t, tol)
    return float(f.f(t)) - (mean + kernel)


def _same_domain(f: TestFunction, d: Density):
    if f.domain != d.domain:
        raise DomainError(f"function domain {f.domain} differs from density domain {d.domain}")


def weighted_montgomery_residual(f: TestFunction, d: Density, x: float,
                                 tol: float | None = None) -> float:
    _same_domain(f, d)
    iv = f.domain
    _check_in(iv, x=x)
    tol = tol if tol is not None else default_tol()
    wmean = integrate(lambda s: d.w(s) * f.f(s), iv, tol).value
    kernel = _integrate_pieces(lambda s: weighted_kernel(d, x, s) * f.df(s), iv.a, iv.b, x, tol)
    return float(f.f(x)) - (wmean + kernel)


def interchange_lemma_sides(f: TestFunction, alpha: float, d: Density | None = None,
                            tol: float | None = None) -> list[tuple[float, float]]:
    """Both sides of the order-of-integration lemmas.

    Returns three ``(lhs, rhs)`` pairs for the plain Montgomery split
    (constant mean term, the ``(s-a) f'`` part, the ``(s-b) f'`` part).
    With a density, two more pairs follow: the weighted-mean term and the
    ``W f'`` part.  Left sides are iterated quadratures.
    """
    if not alpha > 0:
        raise DomainError(f"interchange lemmas divide by alpha; need alpha > 0, got {alpha}")
    iv = f.domain
    a, b, L = iv.a, iv.b, iv.length
    tol = tol if tol is not None else default_tol()
    inner_tol = tol / 10

    def outer(h):
        return integrate_weighted_right(h, iv, alpha, tol, vectorized=False).value

    def moment(g, order):
        # int_a^b (b-s)^order g(s) ds
        return integrate_weighted_right(g, iv, order + 1.0, tol).value

    total = integrate(f.eval_f, iv, tol).value
    pairs = [(outer(lambda t: total), L**alpha / alpha * total)]

    def left_part(t):
        if t <= a:
            return 0.0
        return integrate(lambda s: (s - a) * f.df(s), Interval(a, t), inner_tol).value

    m_alpha = moment(f.eval_df, alpha)
    m_alpha1 = moment(f.eval_df, alpha + 1)
    pairs.append((outer(left_part), L / alpha * m_alpha - m_alpha1 / alpha))

    def right_part(t):
        if t >= b:
            return 0.0
        return integrate(lambda s: (s - b) * f.df(s), Interval(t, b), inner_tol).value

    m_one = moment(f.eval_df, 1.0)
    pairs.append((outer(right_part), m_alpha1 / alpha - L**alpha / alpha * m_one))

    if d is not None:
        _same_domain(f, d)
        wtotal = integrate(lambda s: d.w(s) * f.f(s), iv, tol).value
        pairs.append((outer(lambda t: wtotal), L**alpha / alpha * wtotal))

        def cdf_part(t):
            if t <= a:
                return 0.0
            return integrate(lambda s: d.W(s) * f.df(s), Interval(a, t), inner_tol).value

        pairs.append((outer(cdf_part), moment(lambda s: d.W(s) * f.df(s), alpha) / alpha))
    return pairs


def interchange_lemma_residuals(f: TestFunction, alpha: float, d: Density | None = None,
                                tol: float | None = None) -> list[float]:
    """LHS minus RHS for each pair of :func:`interchange_lemma_sides`."""
    return [lhs - rhs for lhs, rhs in interchange_lemma_sides(f, alpha, d, tol)]


def _check_length(iv: Interval):
    if iv.length <= MIN_LENGTH:
        raise DomainError(f"interval [{iv.a}, {iv.b}] is too short (length <= {MIN_LENGTH})")


def identity_z_sides(f: TestFunction, alpha: float, tol: float | None = None) -> tuple[float, float]:
    """Sides of the unweighted master identity at ``x = b``.

    lhs = Gamma(alpha+1) J^alpha f(b) - (b-a)^(alpha-1) int f
    rhs = int (b-s)^alpha f'(s) ds - (b-a)^(alpha-1) int (b-s) f'(s) ds
    """
    iv = f.domain
    _check_length(iv)
    tol = tol if tol is not None else default_tol()
    L = iv.length
    scale = L ** (alpha - 1.0)
    lhs = gamma(alpha + 1) * rl_integral(f, alpha, iv.b, tol) - scale * integrate(f.eval_f, iv, tol).value
    rhs = (integrate_weighted_right(f.eval_df, iv, alpha + 1.0, tol).value
           - scale * integrate_weighted_right(f.eval_df, iv, 2.0, tol).value)
    return lhs, rhs


def identity_z1_sides(f: TestFunction, d: Density, alpha: float,
                      tol: float | None = None) -> tuple[float, float]:
    """Sides of the weighted master identity at ``x = b``.

    lhs = Gamma(alpha+1) J^alpha f(b) - (b-a)^alpha int w f
    rhs = (b-a)^alpha int (W-1) f' + int (b-s)^alpha f'(s) ds
    """
    _same_domain(f, d)
    iv = f.domain
    _check_length(iv)
    tol = tol if tol is not None else default_tol()
    scale = iv.length ** alpha
    wmean = integrate(lambda s: d.w(s) * f.f(s), iv, tol).value
    lhs = gamma(alpha + 1) * rl_integral(f, alpha, iv.b, tol) - scale * wmean
    tail = integrate(lambda s: (d.W(s) - 1.0) * f.df(s), iv, tol).value
    rhs = scale * tail + integrate_weighted_right(f.eval_df, iv, alpha + 1.0, tol).value
    return lhs, rhs


IDENTITY_TOLERANCES = {
    "montgomery": 1e-8,
    "weighted_montgomery": 1e-8,
    "interchange_mean": 1e-6,
    "interchange_left": 1e-6,
    "interchange_right": 1e-6,
    "interchange_weighted_mean": 1e-6,
    "interchange_cdf": 1e-6,
    "master": 1e-6,
    "weighted_master": 1e-6,
}

_LEMMA_NAMES = ("interchange_mean", "interchange_left", "interchange_right",
                "interchange_weighted_mean", "interchange_cdf")


def identity_suite(functions, densities, alphas, tol: float | None = None) -> dict[str, float]:
    """Largest scaled residual of each identity over the given grid.

    The Montgomery identities are checked at the nine interior points
    ``a + k(b-a)/10``.  The order-of-integration lemmas skip ``alpha = 0``,
    where they are undefined.
    """
    worst = dict.fromkeys(IDENTITY_TOLERANCES, 0.0)

    def record(name, value):
        worst[name] = max(worst[name], value)

    for f in functions:
        iv = f.domain
        points = [iv.a + k * iv.length / 10 for k in range(1, 10)]
        for t in points:
            record("montgomery", abs(montgomery_residual(f, t, tol)) / (1 + abs(float(f.f(t)))))
            for d in densities:
                r = weighted_montgomery_residual(f, d, t, tol)
                record("weighted_montgomery", abs(r) / (1 + abs(float(f.f(t)))))
        for alpha in alphas:
            record("master", scaled_residual(*identity_z_sides(f, alpha, tol)))
            for d in densities:
                record("weighted_master", scaled_residual(*identity_z1_sides(f, d, alpha, tol)))
            if alpha <= 0:
                continue
            for name, pair in zip(_LEMMA_NAMES, interchange_lemma_sides(f, alpha, None, tol)):
                record(name, scaled_residual(*pair))
            for d in densities:
                weighted = interchange_lemma_sides(f, alpha, d, tol)[3:]
                for name, pair in zip(_LEMMA_NAMES[3:], weighted):
                    record(name, scaled_residual(*pair))
    return worst

"""Adaptive quadrature, the right-endpoint power weight, and norms of f'.

The workhorse is a globally adaptive 7/15-point Gauss-Kronrod rule that
splits every interval whose error estimate exceeds its share of the target.
All new subintervals of a pass are evaluated in one vectorized call.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NonConvergence
from .functions import Interval

DEFAULT_TOL = 1e-10
MAX_EVALUATIONS = 10**6
TOL_ENV_VAR = "FRACQ_DEFAULT_TOL"

# roundoff floor relative to the integral of |g|
_REL_FLOOR = 50 * np.finfo(float).eps

_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full 15-point layout on [-1, 1]
_NODES = np.concatenate([-_XGK[:-1], [0.0], _XGK[-2::-1]])
_KWEIGHTS = np.concatenate([_WGK[:-1], [_WGK[-1]], _WGK[-2::-1]])
_GWEIGHTS = np.zeros(15)
_GWEIGHTS[1:7:2] = _WG[:3]
_GWEIGHTS[7] = _WG[3]
_GWEIGHTS[9:15:2] = _WG[2::-1]


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0 or self.evaluations < 1:
            raise ValueError("QuadResult needs error_estimate >= 0 and evaluations >= 1")

    def scaled(self, factor: float) -> "QuadResult":
        return QuadResult(self.value * factor, self.error_estimate * abs(factor), self.evaluations)


@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents with 1/p + 1/q = 1 and p > 1."""

    p: float
    q: float

    def __post_init__(self):
        if not (self.p > 1 and self.q > 1):
            raise DomainError(f"Holder exponents must exceed 1, got p={self.p}, q={self.q}")
        if abs(1 / self.p + 1 / self.q - 1) > 1e-14:
            raise DomainError(f"p={self.p} and q={self.q} are not conjugate")

    @classmethod
    def from_p(cls, p: float) -> "HolderPair":
        if not p > 1:
            raise DomainError(f"p must exceed 1, got {p}")
        p = float(p)
        return cls(p, p / (p - 1))


def default_tol() -> float:
    """Default absolute tolerance, overridable through ``FRACQ_DEFAULT_TOL``."""
    raw = os.environ.get(TOL_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise DomainError(f"{TOL_ENV_VAR}={raw!r} is not a number") from None
    if not (tol > 0 and math.isfinite(tol)):
        raise DomainError(f"{TOL_ENV_VAR} must be a positive finite number, got {raw!r}")
    return tol


def _resolve_tol(tol):
    if tol is None:
        return default_tol()
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    return tol


def _as_vectorized(g: Callable, vectorized: bool) -> Callable[[np.ndarray], np.ndarray]:
    if vectorized:
        def call(x):
            y = np.asarray(g(x), dtype=float)
            if y.shape != x.shape:
                y = np.broadcast_to(y, x.shape)
            return y
    else:
        def call(x):
            flat = np.fromiter((g(float(v)) for v in x.ravel()), dtype=float, count=x.size)
            return flat.reshape(x.shape)
    return call


def _gk15(call, lo: np.ndarray, hi: np.ndarray):
    center = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    x = center[:, None] + half[:, None] * _NODES[None, :]
    y = call(x)
    if not np.all(np.isfinite(y)):
        raise DomainError("integrand is not finite on the integration interval")
    kron = half * (y @ _KWEIGHTS)
    gauss = half * (y @ _GWEIGHTS)
    resabs = np.abs(half) * (np.abs(y) @ _KWEIGHTS)
    return kron, np.abs(kron - gauss), resabs


def integrate(g: Callable, iv: Interval, tol: float | None = None, *,
              vectorized: bool = True, max_evaluations: int = MAX_EVALUATIONS) -> QuadResult:
    """Integrate ``g`` over ``iv`` to absolute tolerance ``tol``.

    The error estimate is the raw Kronrod/Gauss difference, which is
    pessimistic for smooth integrands.  When the tolerance is below the
    roundoff floor of the integral, refinement stops at that floor and the
    reported estimate reflects it.

    Set ``vectorized=False`` for integrands that only accept scalars.
    """
    tol = _resolve_tol(tol)
    call = _as_vectorized(g, vectorized)
    a, b = iv.a, iv.b
    length = b - a

    lo = np.array([a])
    hi = np.array([b])
    vals, errs, absv = _gk15(call, lo, hi)
    evaluations = 15
    min_width = 64 * np.finfo(float).eps * max(abs(a), abs(b), length)

    while True:
        err_total = float(errs.sum())
        target = max(tol, _REL_FLOOR * float(absv.sum()))
        if err_total <= target:
            break
        width = hi - lo
        share = target * width / length
        split = (errs > share) & (width > min_width) & (errs > _REL_FLOOR * absv)
        if not split.any():
            break
        n_new = 2 * int(split.sum())
        if evaluations + 15 * n_new > max_evaluations:
            raise NonConvergence(
                f"integration over [{a}, {b}] exhausted {max_evaluations} evaluations "
                f"(error estimate {err_total:.3e} > tolerance {target:.3e})"
            )
        mid = 0.5 * (lo[split] + hi[split])
        new_lo = np.concatenate([lo[split], mid])
        new_hi = np.concatenate([mid, hi[split]])
        nv, ne, na = _gk15(call, new_lo, new_hi)
        evaluations += 15 * n_new
        keep = ~split
        lo = np.concatenate([lo[keep], new_lo])
        hi = np.concatenate([hi[keep], new_hi])
        vals = np.concatenate([vals[keep], nv])
        errs = np.concatenate([errs[keep], ne])
        absv = np.concatenate([absv[keep], na])

    # sum in left-to-right order so the result does not depend on split history
    order = np.argsort(lo, kind="stable")
    value = math.fsum(vals[order])
    return QuadResult(value, float(errs.sum()), evaluations)


def integrate_weighted_right(g: Callable, iv: Interval, alpha: float, tol: float | None = None, *,
                             method: str = "auto", vectorized: bool = True) -> QuadResult:
    """Integral of ``(b - t)**(alpha - 1) * g(t)`` over ``iv``.

    For ``alpha < 1`` the weight is singular at ``b`` and the substitution
    ``u = (b - t)**alpha`` is used, giving
    ``(1/alpha) * int_0^{(b-a)^alpha} g(b - u**(1/alpha)) du``.
    ``method="substitution"`` forces that path for any ``alpha > 0``;
    ``method="direct"`` integrates the weighted integrand as is and is
    only allowed for ``alpha >= 1``.
    """
    if not alpha > 0:
        raise DomainError(f"weight exponent requires alpha > 0, got {alpha}")
    if method not in ("auto", "substitution", "direct"):
        raise ValueError(f"unknown method {method!r}")
    if method == "direct" and alpha < 1:
        raise DomainError("direct integration of a singular weight (alpha < 1) is not supported")
    tol = _resolve_tol(tol)
    call = _as_vectorized(g, vectorized)
    a, b = iv.a, iv.b

    if method == "substitution" or (method == "auto" and alpha < 1):
        inv = 1.0 / alpha
        upper = iv.length ** alpha

        def transformed(u):
            t = np.clip(b - np.power(u, inv), a, b)
            return call(t)

        res = integrate(transformed, Interval(0.0, upper), tol * alpha)
        return res.scaled(inv)

    if alpha == 1:
        return integrate(call, iv, tol)

    def weighted(t):
        return np.power(b - t, alpha - 1.0) * call(t)

    return integrate(weighted, iv, tol)


def lp_norm(df: Callable, iv: Interval, p: float, tol: float | None = None, *,
            full_output: bool = False):
    """``(int |df|^p)^(1/p)``; with ``full_output`` also the raw QuadResult."""
    if not p > 1:
        raise DomainError(f"lp_norm requires p > 1, got {p}")
    res = integrate(lambda s: np.abs(df(s)) ** p, iv, tol)
    norm = max(res.value, 0.0) ** (1.0 / p)
    if full_output:
        return norm, res
    return norm


_INVPHI = (math.sqrt(5) - 1) / 2


def _golden_max(h: Callable[[float], float], lo: float, hi: float, width: float) -> float:
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    hc, hd = h(c), h(d)
    best = max(hc, hd)
    while hi - lo > width:
        if hc >= hd:
            hi, d, hd = d, c, hc
            c = hi - _INVPHI * (hi - lo)
            hc = h(c)
        else:
            lo, c, hc = c, d, hd
            d = lo + _INVPHI * (hi - lo)
            hd = h(d)
        best = max(best, hc, hd)
    return best


def sup_norm(df: Callable, iv: Interval, *, samples: int = 4097, n_refine: int = 5) -> float:
    """Estimate ``sup |df|`` on ``iv``.

    Scans an equispaced grid, then golden-section refines around the
    largest local maxima.  This is an estimator, not a certified bound; it
    never returns less than the sampled maximum.
    """
    x = np.linspace(iv.a, iv.b, samples)
    v = np.abs(np.asarray(df(x), dtype=float))
    if v.shape != x.shape:
        v = np.broadcast_to(v, x.shape)
    best = float(v.max())

    left = np.concatenate([[-np.inf], v[:-1]])
    right = np.concatenate([v[1:], [-np.inf]])
    peaks = np.flatnonzero((v >= left) & (v >= right))
    # largest first, ties by position
    peaks = peaks[np.lexsort((peaks, -v[peaks]))][:n_refine]

    width = 1e-10 * iv.length

    def h(t):
        return float(np.abs(df(np.float64(t))))

    for i in peaks:
        lo = x[max(i - 1, 0)]
        hi = x[min(i + 1, samples - 1)]
        best = max(best, _golden_max(h, lo, hi, width))
    return best

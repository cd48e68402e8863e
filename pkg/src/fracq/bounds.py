"""Both sides of the fractional Ostrowski-type bounds, as BoundReports.

Every evaluator computes the left side from the fractional integral at
``b`` (order zero routes to ``f(b)``), the right side from the printed
constants, and flags the bound as holding when
``rhs - lhs >= -HOLD_TOL * (1 + |rhs|)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .fraccore import gamma, rl_integral_result
from .functions import Density, Interval, TestFunction
from .quadrature import HolderPair, default_tol, integrate, lp_norm, sup_norm

HOLD_TOL = 1e-7


class TheoremId(str, enum.Enum):
    T1_Eq9 = "T1_Eq9"
    T2_Eq7 = "T2_Eq7"
    T3_Eq16 = "T3_Eq16"
    T4_Eq14_literal = "T4_Eq14_literal"
    T4_Eq14_corrected = "T4_Eq14_corrected"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    OstrowskiClassical = "OstrowskiClassical"

    def __str__(self):
        return self.value

    @property
    def needs_density(self) -> bool:
        return self in _WEIGHTED

    @property
    def needs_p(self) -> bool:
        return self in _HOLDER

    @property
    def fractional(self) -> bool:
        return self in _FRACTIONAL

    @property
    def sound(self) -> bool:
        return self is not TheoremId.T4_Eq14_literal


_WEIGHTED = {TheoremId.T3_Eq16, TheoremId.T4_Eq14_literal, TheoremId.T4_Eq14_corrected,
             TheoremId.C3, TheoremId.C4}
_HOLDER = {TheoremId.T1_Eq9, TheoremId.T3_Eq16, TheoremId.C1, TheoremId.C3}
_FRACTIONAL = {TheoremId.T1_Eq9, TheoremId.T2_Eq7, TheoremId.T3_Eq16,
               TheoremId.T4_Eq14_literal, TheoremId.T4_Eq14_corrected}


def holds_within(lhs: float, rhs: float) -> bool:
    return rhs - lhs >= -HOLD_TOL * (1.0 + abs(rhs))


@dataclass(frozen=True)
class BoundReport:
    theorem: TheoremId
    function_id: str
    density_id: Optional[str]
    interval: Interval
    alpha: float
    holder: Optional[HolderPair]
    M: Optional[float]
    lhs: float
    rhs: float
    slack: float
    holds: bool
    quadrature_error: float

    @property
    def ratio(self) -> float:
        """lhs / rhs.

        A vanishing right side (constant f) counts as ratio 0 as long as the
        bound holds within tolerance; a violated nonpositive right side
        gives infinity.
        """
        if self.rhs > 0:
            return self.lhs / self.rhs
        return 0.0 if self.holds else math.inf

    def sort_key(self):
        return (self.theorem.value, self.function_id, self.density_id or "",
                self.alpha, self.holder.p if self.holder else -1.0)


def _make(theorem, f, d, alpha, hp, M, lhs, rhs, qerr) -> BoundReport:
    return BoundReport(
        theorem=TheoremId(theorem), function_id=f.id,
        density_id=d.id if d is not None else None,
        interval=f.domain, alpha=float(alpha), holder=hp, M=M,
        lhs=lhs, rhs=rhs, slack=rhs - lhs, holds=holds_within(lhs, rhs),
        quadrature_error=qerr,
    )


def _check_alpha(alpha: float):
    if not (alpha >= 0 and math.isfinite(alpha)):
        raise DomainError(f"alpha must be finite and >= 0, got {alpha}")


def _check_pair(f: TestFunction, d: Density):
    if f.domain != d.domain:
        raise DomainError(f"function domain {f.domain} differs from density domain {d.domain}")


def _scaled_rl(f: TestFunction, alpha: float, tol: float):
    """Gamma(alpha+1) J^alpha f(b) and its error estimate."""
    res = rl_integral_result(f, alpha, f.domain.b, tol)
    g = gamma(alpha + 1)
    return g * res.value, g * res.error_estimate


def _mean_gap(f: TestFunction, alpha: float, tol: float):
    """Signed Gamma(alpha+1) J^alpha f(b) - (b-a)^(alpha-1) int f."""
    iv = f.domain
    head, err = _scaled_rl(f, alpha, tol)
    total = integrate(f.eval_f, iv, tol)
    scale = iv.length ** (alpha - 1.0)
    return head - scale * total.value, err + scale * total.error_estimate


def _weighted_gap(f: TestFunction, d: Density, alpha: float, tol: float):
    """Signed Gamma(alpha+1) J^alpha f(b) - (b-a)^alpha int w f."""
    iv = f.domain
    head, err = _scaled_rl(f, alpha, tol)
    wmean = integrate(lambda s: d.w(s) * f.f(s), iv, tol)
    scale = iv.length ** alpha
    return head - scale * wmean.value, err + scale * wmean.error_estimate


def _norm_p(f: TestFunction, p: float, tol: float):
    norm, res = lp_norm(f.eval_df, f.domain, p, tol, full_output=True)
    err = res.error_estimate * norm ** (1 - p) / p if norm > 0 else 0.0
    return norm, err


def _tail_moment(d: Density, q: float, tol: float):
    """(int |W - 1|^q)^(1/q) with error estimate."""
    res = integrate(lambda s: abs(d.W(s) - 1.0) ** q, d.domain, tol)
    val = max(res.value, 0.0)
    norm = val ** (1.0 / q)
    err = res.error_estimate * norm ** (1 - q) / q if norm > 0 else 0.0
    return norm, err


def _sup(f: TestFunction, M: Optional[float]) -> float:
    if M is None:
        return sup_norm(f.eval_df, f.domain)
    if not M >= 0:
        raise DomainError(f"M must be >= 0, got {M}")
    return float(M)


def verify_t1(f: TestFunction, alpha: float, hp: HolderPair, tol: float | None = None) -> BoundReport:
    _check_alpha(alpha)
    tol = tol if tol is not None else default_tol()
    L, q = f.domain.length, hp.q
    gap, err = _mean_gap(f, alpha, tol)
    norm, nerr = _norm_p(f, hp.p, tol)
    const = L ** (alpha + 1 / q) * ((alpha * q + 1) ** (-1 / q) + (q + 1) ** (-1 / q))
    return _make(TheoremId.T1_Eq9, f, None, alpha, hp, None, abs(gap), const * norm,
                 err + const * nerr)


def verify_t2(f: TestFunction, alpha: float, M: float | None = None,
              tol: float | None = None) -> BoundReport:
    """Unscaled form: the mean gap is divided by Gamma(alpha+1)."""
    _check_alpha(alpha)
    tol = tol if tol is not None else default_tol()
    L = f.domain.length
    gap, err = _mean_gap(f, alpha, tol)
    g1 = gamma(alpha + 1)
    M = _sup(f, M)
    rhs = M * (alpha + 3) * L ** (alpha + 1) / (2 * gamma(alpha + 2))
    return _make(TheoremId.T2_Eq7, f, None, alpha, None, M, abs(gap) / g1, rhs, err / g1)


def verify_t3(f: TestFunction, d: Density, alpha: float, hp: HolderPair,
              tol: float | None = None) -> BoundReport:
    _check_alpha(alpha)
    _check_pair(f, d)
    tol = tol if tol is not None else default_tol()
    L, q = f.domain.length, hp.q
    gap, err = _weighted_gap(f, d, alpha, tol)
    norm, nerr = _norm_p(f, hp.p, tol)
    tail, terr = _tail_moment(d, q, tol)
    bracket = tail + (L / (alpha * q + 1)) ** (1 / q)
    rhs = norm * L**alpha * bracket
    qerr = err + L**alpha * (nerr * bracket + norm * terr)
    return _make(TheoremId.T3_Eq16, f, d, alpha, hp, None, abs(gap), rhs, qerr)


def verify_t4(f: TestFunction, d: Density, alpha: float, variant: str = "corrected",
              M: float | None = None, tol: float | None = None) -> BoundReport:
    """Weighted sup-norm bound.

    ``variant="literal"`` subtracts ``(b-a)/(alpha+1)`` inside the bracket
    as printed; ``"corrected"`` adds it, which is what bounding the two
    nonnegative integrals term by term gives.
    """
    if variant not in ("literal", "corrected"):
        raise DomainError(f"variant must be 'literal' or 'corrected', got {variant!r}")
    _check_alpha(alpha)
    _check_pair(f, d)
    tol = tol if tol is not None else default_tol()
    L = f.domain.length
    gap, err = _weighted_gap(f, d, alpha, tol)
    M = _sup(f, M)
    tail = integrate(lambda s: abs(d.W(s) - 1.0), d.domain, tol)
    sign = -1.0 if variant == "literal" else 1.0
    rhs = M * L**alpha * (tail.value + sign * L / (alpha + 1))
    theorem = TheoremId.T4_Eq14_literal if variant == "literal" else TheoremId.T4_Eq14_corrected
    return _make(theorem, f, d, alpha, None, M, abs(gap), rhs,
                 err + M * L**alpha * tail.error_estimate)


def verify_corollaries(f: TestFunction, hp: HolderPair, d: Density | None = None,
                       M: float | None = None, tol: float | None = None) -> list[BoundReport]:
    """The order-zero corollaries: C1, C2 and, given a density, C3 and C4.

    C4 is the corrected weighted sup-norm bound at order zero.
    """
    tol = tol if tol is not None else default_tol()
    iv = f.domain
    L, q = iv.length, hp.q
    fb = float(f.f(iv.b))
    total = integrate(f.eval_f, iv, tol)
    dev = abs(fb - total.value / L)
    derr = total.error_estimate / L
    norm, nerr = _norm_p(f, hp.p, tol)
    M = _sup(f, M)

    c1 = L ** (1 / q) * (1 + (q + 1) ** (-1 / q))
    out = [
        _make(TheoremId.C1, f, None, 0.0, hp, None, dev, c1 * norm, derr + c1 * nerr),
        _make(TheoremId.C2, f, None, 0.0, None, M, dev, 1.5 * L * M, derr),
    ]
    if d is not None:
        _check_pair(f, d)
        wmean = integrate(lambda s: d.w(s) * f.f(s), iv, tol)
        wdev = abs(fb - wmean.value)
        tail_q, terr = _tail_moment(d, q, tol)
        bracket = tail_q + L ** (1 / q)
        tail_1 = integrate(lambda s: abs(d.W(s) - 1.0), iv, tol)
        out.append(_make(TheoremId.C3, f, d, 0.0, hp, None, wdev, bracket * norm,
                         wmean.error_estimate + nerr * bracket + norm * terr))
        out.append(_make(TheoremId.C4, f, d, 0.0, None, M, wdev, M * (tail_1.value + L),
                         wmean.error_estimate + M * tail_1.error_estimate))
    return out


def verify_ostrowski_classical(f: TestFunction, x: float, M: float | None = None,
                               tol: float | None = None) -> BoundReport:
    iv = f.domain
    if not iv.contains(x):
        raise DomainError(f"x={x} lies outside [{iv.a}, {iv.b}]")
    tol = tol if tol is not None else default_tol()
    L = iv.length
    total = integrate(f.eval_f, iv, tol)
    lhs = abs(float(f.f(x)) - total.value / L)
    M = _sup(f, M)
    rhs = (0.25 + (x - iv.midpoint) ** 2 / L**2) * L * M
    return _make(TheoremId.OstrowskiClassical, f, None, 0.0, None, M, lhs, rhs,
                 total.error_estimate / L)


def verify(theorem, f: TestFunction, *, alpha: float = 0.0, p: float | None = None,
           d: Density | None = None, M: float | None = None, x: float | None = None,
           tol: float | None = None) -> BoundReport:
    """Dispatch one check by theorem id."""
    theorem = TheoremId(theorem)
    if theorem.needs_density and d is None:
        raise DomainError(f"{theorem} needs a density")
    if theorem.needs_p and p is None:
        raise DomainError(f"{theorem} needs an exponent p")
    hp = HolderPair.from_p(p) if theorem.needs_p else None

    if theorem is TheoremId.T1_Eq9:
        return verify_t1(f, alpha, hp, tol)
    if theorem is TheoremId.T2_Eq7:
        return verify_t2(f, alpha, M, tol)
    if theorem is TheoremId.T3_Eq16:
        return verify_t3(f, d, alpha, hp, tol)
    if theorem is TheoremId.T4_Eq14_literal:
        return verify_t4(f, d, alpha, "literal", M, tol)
    if theorem is TheoremId.T4_Eq14_corrected:
        return verify_t4(f, d, alpha, "corrected", M, tol)
    if theorem is TheoremId.OstrowskiClassical:
        return verify_ostrowski_classical(f, f.domain.b if x is None else x, M, tol)

    # corollaries share one evaluation path; pick the requested one
    cor_hp = hp if hp is not None else HolderPair.from_p(2.0)
    reports = verify_corollaries(f, cor_hp, d, M, tol)
    return next(r for r in reports if r.theorem is theorem)

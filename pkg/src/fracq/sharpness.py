"""Derivative-free search for functions that come close to a bound.

A fixed Latin-hypercube scan of the parameter box is followed by compass
pattern search from the three best scan points.  The evaluation sequence
does not depend on the budget, which only truncates it, so a larger budget
can never return a worse ratio.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.stats import qmc

from .bounds import TheoremId, verify
from .errors import BoundViolation, DomainError
from .functions import UNIT, Density, Interval, TestFunction
from .quadrature import HolderPair

RATIO_TOL = 1e-7
SCAN_POINTS = 64
N_STARTS = 3
MIN_STEP = 1e-4
SCAN_SEED = 20240601


@dataclass(frozen=True)
class FamilySpec:
    id: str
    parameter_box: tuple[tuple[float, float], ...]
    instantiate: Callable[[Sequence[float], Interval], TestFunction]

    @property
    def dim(self) -> int:
        return len(self.parameter_box)


@dataclass(frozen=True)
class SharpnessResult:
    theorem: TheoremId
    family: str
    best_params: tuple[float, ...]
    best_ratio: float
    evaluations: int


def _label(family: str, params) -> str:
    return family + "(" + ",".join(format(float(v), ".17g") for v in params) + ")"


def _poly(name: str, degree: int) -> FamilySpec:
    def instantiate(params, domain: Interval = UNIT) -> TestFunction:
        c = np.array(params, dtype=float)
        powers = np.arange(1, degree + 1)

        def f(t):
            t = np.asarray(t, dtype=float)
            return np.sum(c * t[..., None] ** powers, axis=-1)

        def df(t):
            t = np.asarray(t, dtype=float)
            return np.sum(c * powers * t[..., None] ** (powers - 1), axis=-1)

        return TestFunction(_label(name, params), domain, f, df)

    return FamilySpec(name, ((-2.0, 2.0),) * degree, instantiate)


def _exp_family() -> FamilySpec:
    def instantiate(params, domain: Interval = UNIT) -> TestFunction:
        (c,) = params
        return TestFunction(
            _label("exp", params), domain,
            lambda t: np.exp(c * np.asarray(t, dtype=float)),
            lambda t: c * np.exp(c * np.asarray(t, dtype=float)),
        )

    return FamilySpec("exp", ((-2.0, 2.0),), instantiate)


FAMILIES = {
    "linear": _poly("linear", 1),
    "quadratic": _poly("quadratic", 2),
    "cubic": _poly("cubic", 3),
    "exp": _exp_family(),
}


def get_family(fid: str) -> FamilySpec:
    try:
        return FAMILIES[fid]
    except KeyError:
        raise DomainError(f"unknown family {fid!r}; known: {', '.join(FAMILIES)}") from None


def evaluate_ratio(theorem, family: FamilySpec, params, *, alpha: float = 0.0,
                   hp: HolderPair | None = None, d: Density | None = None,
                   x: float | None = None, domain: Interval = UNIT,
                   tol: float | None = None) -> float:
    """lhs/rhs of ``theorem`` for one member of ``family`` (0/0 counts as 0).

    Raises BoundViolation when a sound bound is exceeded.
    """
    theorem = TheoremId(theorem)
    f = family.instantiate(tuple(float(v) for v in params), domain)
    report = verify(theorem, f, alpha=alpha, p=hp.p if hp else None, d=d, x=x, tol=tol)
    ratio = report.ratio
    if theorem.sound and ratio > 1 + RATIO_TOL:
        raise BoundViolation(f"{theorem} exceeded by {f.id}: lhs={report.lhs!r}, rhs={report.rhs!r}")
    return ratio


class _Budget(Exception):
    pass


def maximize_ratio(theorem, family: FamilySpec, alpha: float = 0.0, hp: HolderPair | None = None,
                   d: Density | None = None, budget: int = 1000, *, x: float | None = None,
                   domain: Interval = UNIT, tol: float | None = None) -> SharpnessResult:
    """Largest lhs/rhs found over ``family`` within ``budget`` evaluations."""
    if budget < 100:
        raise DomainError(f"budget must be at least 100, got {budget}")
    theorem = TheoremId(theorem)
    lo = np.array([b[0] for b in family.parameter_box])
    hi = np.array([b[1] for b in family.parameter_box])
    width = hi - lo

    cache: dict[tuple[float, ...], float] = {}
    best: list = [-math.inf, None]

    def better(r, key, than_r, than_key):
        return r > than_r or (r == than_r and (than_key is None or key < than_key))

    def ratio(point) -> float:
        key = tuple(float(v) for v in point)
        if key in cache:
            return cache[key]
        if len(cache) >= budget:
            raise _Budget
        r = evaluate_ratio(theorem, family, key, alpha=alpha, hp=hp, d=d, x=x,
                           domain=domain, tol=tol)
        cache[key] = r
        if better(r, key, best[0], best[1]):
            best[0], best[1] = r, key
        return r

    scan = lo + width * qmc.LatinHypercube(d=family.dim, seed=SCAN_SEED).random(SCAN_POINTS)
    try:
        scored = [(ratio(pt), tuple(float(v) for v in pt)) for pt in scan]
        scored.sort(key=lambda rk: (-rk[0], rk[1]))
        for _, start in scored[:N_STARTS]:
            _pattern_search(ratio, np.array(start), lo, hi, width, better)
    except _Budget:
        pass

    return SharpnessResult(theorem, family.id, best[1], float(best[0]), len(cache))


def _pattern_search(ratio, center, lo, hi, width, better):
    step = 0.25
    r_center = ratio(center)
    k_center = tuple(center)
    while step >= MIN_STEP:
        r_move, k_move = r_center, k_center
        for i in range(len(center)):
            for sign in (1.0, -1.0):
                trial = center.copy()
                trial[i] = np.clip(trial[i] + sign * step * width[i], lo[i], hi[i])
                r = ratio(trial)
                k = tuple(float(v) for v in trial)
                if r > r_move or (r == r_move and r > r_center and k < k_move):
                    r_move, k_move = r, k
        if r_move > r_center:
            center = np.array(k_move)
            r_center, k_center = r_move, k_move
        else:
            step /= 2

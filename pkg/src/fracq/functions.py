"""Catalog of test functions and probability densities.

Every evaluator is vectorized: it accepts a float or an ndarray and returns
the same shape.  Catalog entries are immutable and keyed by string ids so
that configs and reports stay stable.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError

Evaluator = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"interval endpoints must be finite, got [{self.a}, {self.b}]")
        if not self.a < self.b:
            raise DomainError(f"interval requires a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.a + self.b)

    def contains(self, x: float) -> bool:
        return self.a <= x <= self.b

    @classmethod
    def parse(cls, text: str) -> "Interval":
        """Build an interval from ``"a,b"``."""
        parts = text.split(",")
        if len(parts) != 2:
            raise DomainError(f"interval must look like 'a,b', got {text!r}")
        try:
            return cls(float(parts[0]), float(parts[1]))
        except ValueError as exc:
            raise DomainError(f"bad interval {text!r}: {exc}") from None


UNIT = Interval(0.0, 1.0)


@dataclass(frozen=True)
class TestFunction:
    id: str
    domain: Interval
    eval_f: Evaluator = field(repr=False)
    eval_df: Evaluator = field(repr=False)
    antiderivative: Optional[Evaluator] = field(default=None, repr=False)
    smoothness_note: str = ""

    __test__ = False  # not a pytest class

    def f(self, t):
        return self.eval_f(np.asarray(t, dtype=float))

    def df(self, t):
        return self.eval_df(np.asarray(t, dtype=float))


@dataclass(frozen=True)
class Density:
    id: str
    domain: Interval
    eval_w: Evaluator = field(repr=False)
    eval_W: Evaluator = field(repr=False)

    def w(self, t):
        return self.eval_w(np.asarray(t, dtype=float))

    def W(self, t):
        """CDF, extended by 0 left of ``a`` and by 1 right of ``b``."""
        t = np.asarray(t, dtype=float)
        a, b = self.domain.a, self.domain.b
        inside = self.eval_W(np.clip(t, a, b))
        return np.where(t < a, 0.0, np.where(t > b, 1.0, inside))


def _const(c):
    return lambda t: np.full_like(np.asarray(t, dtype=float), c, dtype=float)


def _monomial(k: int, iv: Interval) -> TestFunction:
    names = {0: "const1", 1: "linear"}
    fid = names.get(k, f"mono{k}")
    if k == 0:
        return TestFunction(fid, iv, _const(1.0), _const(0.0), lambda t: np.asarray(t, dtype=float),
                            "f' = 0; trivially bounded")
    return TestFunction(
        fid, iv,
        lambda t: np.asarray(t, dtype=float) ** k,
        lambda t: k * np.asarray(t, dtype=float) ** (k - 1),
        lambda t: np.asarray(t, dtype=float) ** (k + 1) / (k + 1),
        "polynomial; f' bounded and in every L_p",
    )


def catalog_functions(domain: Interval = UNIT) -> list[TestFunction]:
    """Return the function corpus on ``domain``."""
    a, b = domain.a, domain.b
    mid = domain.midpoint
    L = domain.length
    out = [_monomial(k, domain) for k in range(6)]
    out.append(TestFunction("exp", domain, np.exp, np.exp, np.exp, "entire; f' bounded on [a,b]"))
    out.append(TestFunction(
        "sinpi", domain,
        lambda t: np.sin(np.pi * np.asarray(t, dtype=float)),
        lambda t: np.pi * np.cos(np.pi * np.asarray(t, dtype=float)),
        lambda t: -np.cos(np.pi * np.asarray(t, dtype=float)) / np.pi,
        "entire; |f'| <= pi",
    ))
    # (t-a)^{3/2}: f' bounded but f'' blows up at a
    out.append(TestFunction(
        "pow32", domain,
        lambda t: np.maximum(np.asarray(t, dtype=float) - a, 0.0) ** 1.5,
        lambda t: 1.5 * np.sqrt(np.maximum(np.asarray(t, dtype=float) - a, 0.0)),
        lambda t: 0.4 * np.maximum(np.asarray(t, dtype=float) - a, 0.0) ** 2.5,
        "f' = 1.5 (t-a)^(1/2): bounded, in every L_p, not Lipschitz at a",
    ))
    # u^3 - u/3 with u = (t - mid)/L: extrema at u = +-1/3, strictly inside
    def u(t):
        return (np.asarray(t, dtype=float) - mid) / L

    out.append(TestFunction(
        "cubic_ext", domain,
        lambda t: u(t) ** 3 - u(t) / 3.0,
        lambda t: (3.0 * u(t) ** 2 - 1.0 / 3.0) / L,
        lambda t: L * (u(t) ** 4 / 4.0 - u(t) ** 2 / 6.0),
        "cubic with interior extrema at mid +- L/3",
    ))
    return out


def catalog_densities(domain: Interval = UNIT) -> list[Density]:
    """Return the density corpus on ``domain``, each with closed-form CDF."""
    a, L = domain.a, domain.length
    uniform = Density(
        "uniform", domain,
        lambda t: np.full_like(np.asarray(t, dtype=float), 1.0 / L),
        lambda t: (np.asarray(t, dtype=float) - a) / L,
    )
    linear = Density(
        "linear", domain,
        lambda t: 2.0 * (np.asarray(t, dtype=float) - a) / L**2,
        lambda t: ((np.asarray(t, dtype=float) - a) / L) ** 2,
    )
    rate = 2.0 / L
    norm = -math.expm1(-rate * L)
    trunc_exp = Density(
        "trunc_exp", domain,
        lambda t: rate * np.exp(-rate * (np.asarray(t, dtype=float) - a)) / norm,
        lambda t: -np.expm1(-rate * (np.asarray(t, dtype=float) - a)) / norm,
    )
    return [uniform, linear, trunc_exp]


FUNCTION_IDS = tuple(f.id for f in catalog_functions())
DENSITY_IDS = tuple(d.id for d in catalog_densities())


def get_function(fid: str, domain: Interval = UNIT) -> TestFunction:
    for f in catalog_functions(domain):
        if f.id == fid:
            return f
    raise DomainError(f"unknown function id {fid!r}; known: {', '.join(FUNCTION_IDS)}")


def get_density(did: str, domain: Interval = UNIT) -> Density:
    for d in catalog_densities(domain):
        if d.id == did:
            return d
    raise DomainError(f"unknown density id {did!r}; known: {', '.join(DENSITY_IDS)}")

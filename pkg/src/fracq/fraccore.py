"""Gamma function and the Riemann-Liouville fractional integral."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .functions import Interval, TestFunction
from .quadrature import QuadResult, integrate_weighted_right


class OrderClass(enum.Enum):
    ZERO = "zero"
    SINGULAR = "singular"
    REGULAR = "regular"


@dataclass(frozen=True)
class FracOrder:
    """Order ``alpha >= 0`` of the fractional integral and its regularity class.

    ``ZERO`` is the identity operator, ``SINGULAR`` (0 < alpha < 1) has a
    kernel that blows up at the evaluation point, ``REGULAR`` is alpha >= 1.
    """

    alpha: float

    def __post_init__(self):
        if not (self.alpha >= 0 and math.isfinite(self.alpha)):
            raise DomainError(f"fractional order must be finite and >= 0, got {self.alpha}")

    @property
    def regularity(self) -> OrderClass:
        if self.alpha == 0:
            return OrderClass.ZERO
        if self.alpha < 1:
            return OrderClass.SINGULAR
        return OrderClass.REGULAR


def gamma(x: float) -> float:
    """Gamma function for ``x > 0``."""
    if not x > 0:
        raise DomainError(f"gamma is only provided for x > 0, got {x}")
    return math.gamma(x)


def _order(order) -> FracOrder:
    return order if isinstance(order, FracOrder) else FracOrder(float(order))


def rl_integral_result(f: TestFunction, order, x: float, tol: float | None = None) -> QuadResult:
    """``J_a^alpha f(x)`` with the quadrature error estimate attached."""
    order = _order(order)
    a = f.domain.a
    if not x > a:
        raise DomainError(f"evaluation point must exceed a={a}, got {x}")
    if x > f.domain.b:
        raise DomainError(f"evaluation point {x} lies beyond b={f.domain.b}")
    if order.regularity is OrderClass.ZERO:
        return QuadResult(float(f.f(x)), 0.0, 1)
    res = integrate_weighted_right(f.eval_f, Interval(a, x), order.alpha, tol)
    return res.scaled(1.0 / gamma(order.alpha))


def rl_integral(f: TestFunction, order, x: float, tol: float | None = None) -> float:
    """Riemann-Liouville integral of ``f`` from ``a`` to ``x``.

    ``order`` may be a FracOrder or a plain number.  Order zero returns
    ``f(x)`` directly; no limit is taken.
    """
    return rl_integral_result(f, order, x, tol).value


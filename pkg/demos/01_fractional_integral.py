"""Riemann-Liouville integrals of the corpus, checked against closed forms.

Run: python demos/01_fractional_integral.py
"""
import math

import numpy as np

from fracq import UNIT, TestFunction, gamma, get_function, integrate_weighted_right, rl_integral

# J^alpha of (t - a)^m has a closed form; compare for a few orders.
print("power rule  J^alpha t^m (1)")
for m in range(4):
    f = TestFunction(f"t^{m}", UNIT, lambda t, m=m: np.asarray(t, dtype=float) ** m,
                     lambda t, m=m: m * np.asarray(t, dtype=float) ** max(m - 1, 0))
    for alpha in (0.25, 0.5, 1.5):
        num = rl_integral(f, alpha, 1.0)
        exact = gamma(m + 1) / gamma(m + 1 + alpha)
        print(f"  m={m} alpha={alpha:<4}  {num:.15f}  rel err {abs(num / exact - 1):.1e}")

# For alpha < 1 the kernel blows up at the right end; the substitution
# u = (b - t)^alpha makes the integrand regular, so few evaluations suffice.
for alpha in (0.9, 0.5, 0.1, 0.01):
    res = integrate_weighted_right(np.exp, UNIT, alpha)
    print(f"int (1-t)^({alpha}-1) e^t dt = {res.value:.12f}   ({res.evaluations} evaluations)")

# Order zero is the identity, not a limit of the integral.
f = get_function("sinpi")
print("J^0 sin(pi t) at 0.3:", rl_integral(f, 0, 0.3), "=", math.sin(0.3 * math.pi))

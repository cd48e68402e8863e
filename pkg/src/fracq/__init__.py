"""Numerical verification of fractional Ostrowski-type inequalities.

Riemann-Liouville integrals, Montgomery identities (plain and weighted),
and evaluators for both sides of the resulting bounds.
"""
from .bounds import (
    BoundReport,
    TheoremId,
    verify,
    verify_corollaries,
    verify_ostrowski_classical,
    verify_t1,
    verify_t2,
    verify_t3,
    verify_t4,
)
from .errors import BoundViolation, DomainError, NonConvergence
from .fraccore import FracOrder, OrderClass, gamma, rl_integral
from .functions import (
    UNIT,
    Density,
    Interval,
    TestFunction,
    catalog_densities,
    catalog_functions,
    get_density,
    get_function,
)
from .montgomery import (
    identity_z1_sides,
    identity_z_sides,
    interchange_lemma_residuals,
    montgomery_residual,
    peano_kernel,
    weighted_kernel,
    weighted_montgomery_residual,
)
from .quadrature import HolderPair, QuadResult, integrate, integrate_weighted_right, lp_norm, sup_norm
from .sharpness import FAMILIES, FamilySpec, SharpnessResult, maximize_ratio

__version__ = "0.1.0"

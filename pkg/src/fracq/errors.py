"""Exception types raised across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class NonConvergence(RuntimeError):
    """Adaptive quadrature ran out of its evaluation budget."""


class BoundViolation(RuntimeError):
    """A bound that should be sound was exceeded beyond tolerance."""

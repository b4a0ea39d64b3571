"""Exception hierarchy shared across the package."""


class SqueezeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(SqueezeError, ValueError):
    """A value violates a precondition (point outside a domain, bad parameter)."""


class UnsupportedGeometryError(SqueezeError):
    """The requested operation has no implementation for this geometry.

    Raised by closed-form evaluators outside their catalog and by the
    subdomain-disk estimator when no admissible disk exists.  Callers are
    expected to fall back to bound aggregation.
    """

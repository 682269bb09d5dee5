"""Exception types shared across the package."""


class GeometryError(Exception):
    """Base class for all domain errors raised by this package."""


class DegenerateRicci(GeometryError):
    """Symmetric Ricci tensor has an eigenvalue below tolerance; no normal form."""


class NotOnFlipLocus(GeometryError):
    """Constants violate the reflection-invariance relations."""


class ZeroDivisor(GeometryError, ZeroDivisionError):
    """Division by a non-invertible hyper-number."""


class DomainError(GeometryError):
    """Evaluation point (or finite-difference stencil) leaves the valid domain."""


class SingularJacobian(GeometryError):
    """A smooth map has a singular differential at the queried point."""


class PoleError(GeometryError):
    """Closed-form pullback evaluated at a pole of the map."""


class IllConditioned(GeometryError):
    """Rank decision rejected: singular-value gap below the safety factor."""

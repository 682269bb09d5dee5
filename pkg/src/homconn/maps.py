"""Affine symmetries of the half-plane and their action on connection constants.

The relevant transformation group consists of the affine maps

    T : (x1, x2) -> (m*x1, a*x1 + b*x2 + d),    m > 0, b != 0,

which are exactly the affine maps preserving the half-plane x1 > 0.  Two
subgroups matter: the homothety-translations (a = 0, b = m), which fix every
homogeneous connection, and the shear-scale maps (m = 1, d = 0), which move
the constants around their orbit.  The orientation-preserving shear-scale
maps (b > 0) form the group whose orbits the canonicalization in
:mod:`homconn.canonical` parametrizes.

Transport convention
--------------------
``act(T, C)`` returns the constants of the connection obtained by
transporting Gamma = c/x1 along T, with components read off at the image
point (a pushforward).  Under this convention the symmetric Ricci
coefficients transform by congruence with the *inverse* Jacobian,

    r' = (J^-1)^T r (J^-1) * m^2,

and composition satisfies act(compose(T1, T2), C) = act(T1, act(T2, C)).
The convention is pinned by tests against the finite-difference transport
oracle, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .connection import ChristoffelConstants, Point, RicciCoefficients

__all__ = [
    "AffineMap",
    "SParam",
    "compose",
    "inverse",
    "act",
    "transform_sym_ricci",
    "null_form_map",
    "null_form_jacobian_det",
]


@dataclass(frozen=True)
class AffineMap:
    """The map (x1, x2) -> (m*x1, a*x1 + b*x2 + d) with m > 0 and b != 0."""

    m: float
    a: float
    b: float
    d: float

    def __post_init__(self) -> None:
        if not all(np.isfinite(v) for v in (self.m, self.a, self.b, self.d)):
            raise ValueError("affine-map parameters must be finite")
        if self.m <= 0.0:
            raise ValueError(f"m must be positive, got {self.m}")
        if self.b == 0.0:
            raise ValueError("b must be nonzero")

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(1.0, 0.0, 1.0, 0.0)

    @classmethod
    def shear_scale(cls, a: float, b: float) -> "AffineMap":
        """(x1, x2) -> (x1, a*x1 + b*x2); orientation-preserving iff b > 0."""
        return cls(1.0, a, b, 0.0)

    @classmethod
    def flip(cls) -> "AffineMap":
        """The reflection (x1, x2) -> (x1, -x2)."""
        return cls(1.0, 0.0, -1.0, 0.0)

    @property
    def is_homothety_translation(self) -> bool:
        """Member of the subgroup acting trivially on connection constants."""
        return self.a == 0.0 and self.b == self.m

    @property
    def is_shear_scale(self) -> bool:
        """Fixes x1 and has no translation part."""
        return self.m == 1.0 and self.d == 0.0

    @property
    def is_oriented_shear_scale(self) -> bool:
        return self.is_shear_scale and self.b > 0.0

    @property
    def is_flip(self) -> bool:
        return (self.m, self.a, self.b, self.d) == (1.0, 0.0, -1.0, 0.0)

    @property
    def jacobian(self) -> np.ndarray:
        return np.array([[self.m, 0.0], [self.a, self.b]])

    def apply(self, p: Point) -> Point:
        return Point(self.m * p.x1, self.a * p.x1 + self.b * p.x2 + self.d)

    def max_param_diff(self, other: "AffineMap") -> float:
        return max(
            abs(self.m - other.m), abs(self.a - other.a), abs(self.b - other.b), abs(self.d - other.d)
        )


@dataclass(frozen=True)
class SParam:
    """Reparametrized shear-scale element (x1, x2) -> (x1, (-a*x1 + x2)/b).

    This is the parametrization in which the symmetric-Ricci transformation
    rule takes its simplest form; ``to_affine`` converts to the user-facing
    map, of which it is the inverse with parameters (a, b).
    """

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.a) and np.isfinite(self.b)):
            raise ValueError("parameters must be finite")
        if self.b == 0.0:
            raise ValueError("b must be nonzero")

    def to_affine(self) -> AffineMap:
        return AffineMap(1.0, -self.a / self.b, 1.0 / self.b, 0.0)


def compose(t1: AffineMap, t2: AffineMap) -> AffineMap:
    """The map x -> t1(t2(x))."""
    return AffineMap(
        m=t1.m * t2.m,
        a=t1.a * t2.m + t1.b * t2.a,
        b=t1.b * t2.b,
        d=t1.b * t2.d + t1.d,
    )


def inverse(t: AffineMap) -> AffineMap:
    return AffineMap(
        m=1.0 / t.m,
        a=-t.a / (t.m * t.b),
        b=1.0 / t.b,
        d=-t.d / t.b,
    )


def act(t: AffineMap, constants: ChristoffelConstants) -> ChristoffelConstants:
    """Constants of the connection transported along ``t``.

    With J the Jacobian of ``t``, the transported Christoffel array at the
    image point is (J^-1 tensor J^-1 tensor J) applied to c, divided by the
    image coordinate m*x1; extracting the constants multiplies back by m.
    Homothety-translations leave the constants exactly fixed.
    """
    if t.is_homothety_translation:
        return constants
    j = t.jacobian
    jinv = np.array([[1.0 / t.m, 0.0], [-t.a / (t.m * t.b), 1.0 / t.b]])
    cprime = t.m * np.einsum("ia,jb,ijk,ck->abc", jinv, jinv, constants.c, j)
    return ChristoffelConstants(cprime)


def transform_sym_ricci(s: SParam, rho_s: RicciCoefficients) -> RicciCoefficients:
    """Symmetric-Ricci coefficients after acting by the shear-scale element.

    In the S-parametrization the rule is closed form:

        r'11 = r11 + 2a r12 + a^2 r22
        r'12 = b (r12 + a r22)
        r'22 = b^2 r22

    and coincides with the symmetric Ricci of ``act(s.to_affine(), .)``.
    """
    r = rho_s.r
    r11 = r[0, 0] + 2.0 * s.a * r[0, 1] + s.a * s.a * r[1, 1]
    r12 = s.b * (r[0, 1] + s.a * r[1, 1])
    r22 = s.b * s.b * r[1, 1]
    return RicciCoefficients(np.array([[r11, r12], [r12, r22]]))


def null_form_map(alpha: float, beta: float, rho_s: RicciCoefficients) -> tuple[float, float]:
    """Transformed (off-diagonal, leading-diagonal) pair under a shear-scale.

    Returns ((S rho)_12, (S rho)_11) for S with parameters (alpha, beta).
    The null normal form is characterized by this pair hitting (+-1, 0),
    which is what makes the map useful: its regularity at (0, 1) near a
    null-normalized tensor is what pins the normal form down.
    """
    r = rho_s.r
    off = beta * (r[0, 1] + alpha * r[1, 1])
    lead = r[0, 0] + 2.0 * alpha * r[0, 1] + alpha * alpha * r[1, 1]
    return off, lead


def null_form_jacobian_det(alpha: float, beta: float, rho_s: RicciCoefficients) -> float:
    """Jacobian determinant of ``null_form_map`` with respect to (alpha, beta).

    Closed form -2 (r12 + alpha r22)^2; in particular -2 at (0, 1) on a
    tensor already in null normal form, so the map is a local diffeomorphism
    there.
    """
    r = rho_s.r
    return -2.0 * (r[0, 1] + alpha * r[1, 1]) ** 2

"""Complex and para-complex arithmetic with linear fractional transformations.

A hyper-number is u + v*i where the imaginary unit squares to ``unit_sign``:
-1 gives the ordinary complex numbers, +1 the para-complex (split-complex)
ring, which has zero divisors along the lines u = +-v.  Matrices in SL(2, R)
act on either ring by linear fractional transformation; these realize the
orientation-preserving isometries of the constant-curvature half-plane
metrics.  Note the pairing is crossed: the *complex* transformations are the
isometries of the definite metric and the *para-complex* ones of the
Lorentzian metric (confirmed by the pullback tests, which is the reliable
way to pin it down).

The coordinate bridge (u, v) = (x2, x1) is owned by :func:`point_to_hyper`
and :func:`hyper_to_xy` alone; everything else works purely in (u, v).
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from .errors import DomainError, ZeroDivisor

__all__ = [
    "HyperNumber",
    "Mobius",
    "point_to_hyper",
    "hyper_to_xy",
    "lft_apply",
    "lft_compose_law_check",
    "im_transform",
    "generator_flow_coefficients",
]

_INV_TOL = 1e-12


@dataclass(frozen=True)
class HyperNumber:
    """u + v*i in the ring where i*i = unit_sign (+1 or -1)."""

    re: float
    im: float
    unit_sign: int

    def __post_init__(self) -> None:
        if self.unit_sign not in (-1, 1):
            raise ValueError(f"unit_sign must be -1 or +1, got {self.unit_sign}")
        if not (np.isfinite(self.re) and np.isfinite(self.im)):
            raise ValueError("components must be finite")

    def _check_ring(self, other: "HyperNumber") -> None:
        if self.unit_sign != other.unit_sign:
            raise ValueError("cannot mix complex and para-complex numbers")

    def __add__(self, other: "HyperNumber") -> "HyperNumber":
        self._check_ring(other)
        return HyperNumber(self.re + other.re, self.im + other.im, self.unit_sign)

    def __sub__(self, other: "HyperNumber") -> "HyperNumber":
        self._check_ring(other)
        return HyperNumber(self.re - other.re, self.im - other.im, self.unit_sign)

    def __neg__(self) -> "HyperNumber":
        return HyperNumber(-self.re, -self.im, self.unit_sign)

    def __mul__(self, other: "HyperNumber") -> "HyperNumber":
        self._check_ring(other)
        return HyperNumber(
            self.re * other.re + self.unit_sign * self.im * other.im,
            self.re * other.im + other.re * self.im,
            self.unit_sign,
        )

    def scaled(self, t: float) -> "HyperNumber":
        return HyperNumber(t * self.re, t * self.im, self.unit_sign)

    def conj(self) -> "HyperNumber":
        return HyperNumber(self.re, -self.im, self.unit_sign)

    def norm_sq(self) -> float:
        """The real number z * conj(z) = u^2 - unit_sign * v^2."""
        return self.re * self.re - self.unit_sign * self.im * self.im

    def is_invertible(self, tol: float = _INV_TOL) -> bool:
        scale = max(1.0, self.re * self.re + self.im * self.im)
        return abs(self.norm_sq()) > tol * scale

    def inv(self, tol: float = _INV_TOL) -> "HyperNumber":
        if not self.is_invertible(tol):
            raise ZeroDivisor(f"{self} is not invertible")
        return self.conj().scaled(1.0 / self.norm_sq())

    def max_diff(self, other: "HyperNumber") -> float:
        return max(abs(self.re - other.re), abs(self.im - other.im))

    @classmethod
    def unit(cls, unit_sign: int) -> "HyperNumber":
        """The imaginary unit of the chosen ring."""
        return cls(0.0, 1.0, unit_sign)

    @classmethod
    def one(cls, unit_sign: int) -> "HyperNumber":
        return cls(1.0, 0.0, unit_sign)


@dataclass(frozen=True)
class Mobius:
    """An SL(2, R) representative [[a, b], [c, d]] acting by (a z + b)/(c z + d).

    A and -A act identically, so equality of transformations is decided by
    comparing the action on a few generic points, never by matrix equality.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > 1e-9:
            raise ValueError(f"determinant must be 1, got {det!r}")

    @classmethod
    def from_unnormalized(cls, a: float, b: float, c: float, d: float) -> "Mobius":
        det = a * d - b * c
        if det <= 0.0:
            raise ValueError(f"needs positive determinant, got {det!r}")
        s = math.sqrt(det)
        return cls(a / s, b / s, c / s, d / s)

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def rotation(cls, theta: float) -> "Mobius":
        return cls(math.cos(theta), math.sin(theta), -math.sin(theta), math.cos(theta))

    @classmethod
    def boost(cls, t: float) -> "Mobius":
        return cls(math.cosh(t), math.sinh(t), math.sinh(t), math.cosh(t))

    @classmethod
    def translation(cls, d: float) -> "Mobius":
        return cls(1.0, d, 0.0, 1.0)

    @classmethod
    def homothety(cls, m: float) -> "Mobius":
        if m <= 0.0:
            raise ValueError("homothety factor must be positive")
        s = math.sqrt(m)
        return cls(s, 0.0, 0.0, 1.0 / s)

    def matmul(self, other: "Mobius") -> "Mobius":
        return Mobius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def same_action(self, other: "Mobius", unit_sign: int, tol: float = 1e-9) -> bool:
        """Projective equality, tested on three generic points."""
        probes = [
            HyperNumber(0.37, 1.21, unit_sign),
            HyperNumber(-0.81, 0.64, unit_sign),
            HyperNumber(1.49, 2.17, unit_sign),
        ]
        for z in probes:
            try:
                w1 = lft_apply(self, z)
                w2 = lft_apply(other, z)
            except ZeroDivisor:
                continue
            if w1.max_diff(w2) > tol:
                return False
        return True


def point_to_hyper(x1: float, x2: float, unit_sign: int) -> HyperNumber:
    """Coordinate bridge: (u, v) = (x2, x1), so z = x2 + x1 * i."""
    return HyperNumber(x2, x1, unit_sign)


def hyper_to_xy(z: HyperNumber) -> np.ndarray:
    """Inverse bridge: (x1, x2) = (v, u)."""
    return np.array([z.im, z.re])


def lft_apply(mat: Mobius, z: HyperNumber) -> HyperNumber:
    """(a z + b) * inv(c z + d); raises ZeroDivisor off the invertible set."""
    s = z.unit_sign
    num = z.scaled(mat.a) + HyperNumber(mat.b, 0.0, s)
    den = z.scaled(mat.c) + HyperNumber(mat.d, 0.0, s)
    return num * den.inv()


def lft_compose_law_check(a: Mobius, b: Mobius, z: HyperNumber, tol: float = 1e-9) -> bool:
    """True iff applying b then a agrees with applying the matrix product a*b."""
    lhs = lft_apply(a, lft_apply(b, z))
    rhs = lft_apply(a.matmul(b), z)
    return lhs.max_diff(rhs) <= tol


def im_transform(mat: Mobius, z: HyperNumber) -> float:
    """Imaginary part of the image, via the closed-form factorization.

    Computes Im(z) * Re(inv((c z + d)(c zbar + d))); the product in the
    denominator is a real multiple of one, so its inverse is real.  Tests
    compare this against the imaginary part of a direct evaluation.
    """
    s = z.unit_sign
    den = z.scaled(mat.c) + HyperNumber(mat.d, 0.0, s)
    den_conj = z.conj().scaled(mat.c) + HyperNumber(mat.d, 0.0, s)
    prod = den * den_conj
    if abs(prod.im) > 1e-9 * max(1.0, abs(prod.re)):
        raise DomainError("denominator product unexpectedly non-real")
    return z.im * prod.inv().re


def generator_flow_coefficients(kind: str, unit_sign: int) -> np.ndarray:
    """Velocity field of a one-parameter transformation subgroup, in (u, v).

    Returns a (2, 6) coefficient array over the monomials
    {1, u, v, u^2, u*v, v^2}; row 0 is the u-component.  The quadratic
    rotation/boost rows are d/dt at t=0 of the corresponding flows,
    zdot = 1 + z^2 (complex) and zdot = 1 - z^2 (para-complex); both are
    checked against difference quotients of the flow in the tests.
    """
    coeffs = np.zeros((2, 6))
    if kind == "translation":
        coeffs[0, 0] = 1.0  # flow z -> z + t
    elif kind == "dilation":
        coeffs[0, 1] = 1.0  # flow z -> e^t z
        coeffs[1, 2] = 1.0
    elif kind == "rotation_or_boost":
        if unit_sign == -1:
            # zdot = 1 + z^2: udot = 1 + u^2 - v^2, vdot = 2uv
            coeffs[0, 0] = 1.0
            coeffs[0, 3] = 1.0
            coeffs[0, 5] = -1.0
            coeffs[1, 4] = 2.0
        else:
            # zdot = 1 - z^2: udot = 1 - u^2 - v^2, vdot = -2uv
            coeffs[0, 0] = 1.0
            coeffs[0, 3] = -1.0
            coeffs[0, 5] = -1.0
            coeffs[1, 4] = -2.0
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return coeffs

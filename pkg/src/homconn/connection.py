"""Core types and closed-form curvature for homogeneous half-plane connections.

The connections handled by this package live on the half-plane x1 > 0 and
have Christoffel symbols

    Gamma_ij^k(x1, x2) = c[i][j][k] / x1

for a constant real array ``c`` with two lower indices (i, j) and one upper
index (k).  Torsion is allowed throughout: c[i][j][k] and c[j][i][k] may
differ.  Every such connection is invariant under the homotheties and
translations (x1, x2) -> (m*x1, m*x2 + d), which is what makes the family
locally homogeneous.

For this family the Ricci tensor scales exactly as (x1)^-2, so it is stored
as the constant coefficient matrix of (x1)^-2.  The four coefficients have a
quadratic closed form in the entries of ``c``; that closed form is the
workhorse of the whole package and is verified elsewhere against a
finite-difference curvature oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotOnFlipLocus

__all__ = [
    "Point",
    "ChristoffelConstants",
    "RicciCoefficients",
    "Signature",
    "ricci",
    "symmetrize",
    "signature_of",
    "flip_locus_ricci",
    "HYPERBOLIC_MODEL",
    "LORENTZ_MODEL",
    "NULL_MODEL",
    "METRIC_DEFINITE",
    "METRIC_LORENTZ",
    "METRIC_NULL",
]

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class Point:
    """A point of the half-plane; x1 is strictly positive."""

    x1: float
    x2: float

    def __post_init__(self) -> None:
        if not (np.isfinite(self.x1) and np.isfinite(self.x2)):
            raise ValueError("point coordinates must be finite")
        if self.x1 <= 0.0:
            raise ValueError(f"x1 must be positive, got {self.x1}")

    @property
    def xy(self) -> np.ndarray:
        return np.array([self.x1, self.x2], dtype=float)


@dataclass(frozen=True)
class ChristoffelConstants:
    """The 8 constants c[i][j][k] of a homogeneous connection Gamma = c/x1.

    Stored as a (2, 2, 2) float array; axis order is (i, j, k) with i, j the
    lower indices and k the upper one.  Index 0 corresponds to the x1
    direction.  No symmetry in (i, j) is assumed.
    """

    c: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.c, dtype=float)
        if arr.shape != (2, 2, 2):
            raise ValueError(f"expected shape (2, 2, 2), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("Christoffel constants must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "c", arr)

    @classmethod
    def zero(cls) -> "ChristoffelConstants":
        return cls(np.zeros((2, 2, 2)))

    @classmethod
    def from_entries(cls, entries: dict[tuple[int, int, int], float]) -> "ChristoffelConstants":
        """Build from 1-based (i, j, k) -> value entries; unset slots are 0."""
        arr = np.zeros((2, 2, 2))
        for (i, j, k), value in entries.items():
            arr[i - 1, j - 1, k - 1] = value
        return cls(arr)

    def max_diff(self, other: "ChristoffelConstants") -> float:
        return float(np.max(np.abs(self.c - other.c)))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.c)))


@dataclass(frozen=True)
class RicciCoefficients:
    """Coefficient matrix r of a Ricci tensor rho_jk = r[j][k] / (x1)^2.

    Not assumed symmetric: with torsion the Ricci tensor of a connection
    generally has r[0][1] != r[1][0].
    """

    r: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.r, dtype=float)
        if arr.shape != (2, 2):
            raise ValueError(f"expected shape (2, 2), got {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("Ricci coefficients must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "r", arr)

    def is_symmetric(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.r[0, 1] - self.r[1, 0]) <= tol * max(1.0, self.max_abs())

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.r)))

    def max_diff(self, other: "RicciCoefficients") -> float:
        return float(np.max(np.abs(self.r - other.r)))


@dataclass(frozen=True)
class Signature:
    """Eigenvalue sign counts (p, q) of a symmetric 2x2 coefficient matrix."""

    p: int
    q: int
    degenerate: bool


def ricci(constants: ChristoffelConstants) -> RicciCoefficients:
    """Closed-form Ricci coefficients of the connection Gamma = c/x1.

    Writing cIJK for the 1-based entries, the coefficients of (x1)^-2 are

        r11 = (c111 - c122 + 1) * c212 + c112 * (c222 - c211)
        r12 = c222 + c121 * c212 - c112 * c221
        r21 = -c211 + c121 * c212 - c112 * c221
        r22 = (c111 - c122 - 1) * c221 + c121 * (c222 - c211)

    The derivative terms of the general Ricci formula contribute the lone
    linear pieces (+c212, -c211, -c221); everything else is the quadratic
    Gamma*Gamma part.
    """
    c = constants.c
    c111, c112 = c[0, 0, 0], c[0, 0, 1]
    c121, c122 = c[0, 1, 0], c[0, 1, 1]
    c211, c212 = c[1, 0, 0], c[1, 0, 1]
    c221, c222 = c[1, 1, 0], c[1, 1, 1]
    r11 = (c111 - c122 + 1.0) * c212 + c112 * (c222 - c211)
    r12 = c222 + c121 * c212 - c112 * c221
    r21 = -c211 + c121 * c212 - c112 * c221
    r22 = (c111 - c122 - 1.0) * c221 + c121 * (c222 - c211)
    return RicciCoefficients(np.array([[r11, r12], [r21, r22]]))


def symmetrize(rho: RicciCoefficients) -> RicciCoefficients:
    """Symmetric part (rho + rho^T) / 2."""
    return RicciCoefficients((rho.r + rho.r.T) / 2.0)


def signature_of(rho_s: RicciCoefficients, tol: float = DEFAULT_TOL) -> Signature:
    """Sign counts of the eigenvalues of a symmetric coefficient matrix.

    Eigenvalues with |lambda| <= tol * max(1, max-norm) count as zero, so
    degeneracy detection is scale-aware without special-casing tiny inputs.
    """
    r = rho_s.r
    mid = (r[0, 0] + r[1, 1]) / 2.0
    rad = float(np.hypot((r[0, 0] - r[1, 1]) / 2.0, (r[0, 1] + r[1, 0]) / 2.0))
    eigs = (mid - rad, mid + rad)
    floor = tol * max(1.0, rho_s.max_abs())
    p = sum(1 for lam in eigs if lam > floor)
    q = sum(1 for lam in eigs if lam < -floor)
    return Signature(p=p, q=q, degenerate=(p + q < 2))


_FLIP_SLOTS = ((0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1))  # c112, c121, c211, c222


def flip_locus_ricci(constants: ChristoffelConstants, tol: float = DEFAULT_TOL) -> RicciCoefficients:
    """Diagonal Ricci formula on the locus invariant under x2 -> -x2.

    Constants fixed by the reflection satisfy c112 = c121 = c211 = c222 = 0;
    there the Ricci matrix is diagonal with entries

        ((c111 - c122 + 1) * c212,  (c111 - c122 - 1) * c221).

    Raises NotOnFlipLocus if any of the four relations fails beyond a
    scale-aware tolerance.
    """
    c = constants.c
    floor = tol * max(1.0, constants.max_abs())
    for slot in _FLIP_SLOTS:
        if abs(c[slot]) > floor:
            i, j, k = (s + 1 for s in slot)
            raise NotOnFlipLocus(f"c[{i}][{j}][{k}] = {c[slot]!r} violates the reflection relations")
    d1 = (c[0, 0, 0] - c[0, 1, 1] + 1.0) * c[1, 0, 1]
    d2 = (c[0, 0, 0] - c[0, 1, 1] - 1.0) * c[1, 1, 0]
    return RicciCoefficients(np.diag([d1, d2]))


# Levi-Civita tables of the three reference metrics (dx1^2 +/- dx2^2)/x1^2
# and (dx1 dx2 + dx2 dx1)/x1^2.  The null table has c111 = -2: both the
# Koszul formula and transport from flat coordinates give -2, and only that
# value makes the inversion map intertwine this connection with the flat one.
HYPERBOLIC_MODEL = ChristoffelConstants.from_entries(
    {(1, 1, 1): -1.0, (1, 2, 2): -1.0, (2, 1, 2): -1.0, (2, 2, 1): 1.0}
)
LORENTZ_MODEL = ChristoffelConstants.from_entries(
    {(1, 1, 1): -1.0, (1, 2, 2): -1.0, (2, 1, 2): -1.0, (2, 2, 1): -1.0}
)
NULL_MODEL = ChristoffelConstants.from_entries({(1, 1, 1): -2.0})

# Coefficient matrices of the reference metrics (coefficients of (x1)^-2).
METRIC_DEFINITE = np.array([[1.0, 0.0], [0.0, 1.0]])
METRIC_LORENTZ = np.array([[1.0, 0.0], [0.0, -1.0]])
METRIC_NULL = np.array([[0.0, 1.0], [1.0, 0.0]])

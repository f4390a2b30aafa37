"""Max-times (tropical) semiring algebra on dense nonnegative matrices.

The scalar carrier is the nonnegative reals with addition a ⊕ b = max(a, b)
and multiplication a ⊗ b = a * b, so 0 is the semiring zero and 1 the unit.
Matrices and vectors are plain numpy float64 arrays; every operation here is
a pure function of validated inputs.  Comparisons between scalars use a
relative tolerance because quantities such as cycle geometric means are
irrational in general.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Tolerance",
    "DimensionMismatchError",
    "TrExceedsOneError",
    "NoPositiveSolutionError",
    "scalar_eq",
    "oplus",
    "otimes",
    "as_matrix",
    "as_vector",
    "is_positive",
    "identity",
    "trop_matmul",
    "conjugate",
    "conjugate_transpose",
    "trop_power",
    "trop_trace",
    "tr_sum",
    "spectral_radius",
    "quad_form",
]

DEFAULT_REL_EQ = 1e-9
DEFAULT_TIE_TOL = 1e-7


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible for the requested operation."""


class TrExceedsOneError(ValueError):
    """Tr(A) > 1, so the Kleene star of A diverges."""


class NoPositiveSolutionError(ValueError):
    """The subeigenvector inequality Ax <= x has no positive solution."""


@dataclass(frozen=True)
class Tolerance:
    """Comparison tolerances: rel_eq for scalar equality, tie_tol for ranking ties."""

    rel_eq: float = DEFAULT_REL_EQ
    tie_tol: float = DEFAULT_TIE_TOL

    def __post_init__(self) -> None:
        if not (0.0 < self.rel_eq < self.tie_tol < 1.0):
            raise ValueError(
                f"tolerances must satisfy 0 < rel_eq < tie_tol < 1, "
                f"got rel_eq={self.rel_eq}, tie_tol={self.tie_tol}"
            )


def scalar_eq(a: float, b: float, rel_eq: float = DEFAULT_REL_EQ) -> bool:
    """Relative-tolerance equality: |a - b| <= rel_eq * max(a, b)."""
    return abs(a - b) <= rel_eq * max(a, b)


def oplus(a: float, b: float) -> float:
    """Tropical addition, max(a, b)."""
    return max(a, b)


def otimes(a: float, b: float) -> float:
    """Tropical multiplication, the ordinary product."""
    return a * b


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Validate and return a as a 2-D float64 array of finite nonnegative entries."""
    out = np.array(a, dtype=float)
    if out.ndim != 2 or out.size == 0:
        raise ValueError(f"{name} must be a non-empty 2-D array, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValueError(f"{name} entries must be finite")
    if np.any(out < 0):
        raise ValueError(f"{name} entries must be nonnegative")
    return out


def as_vector(x, name: str = "vector") -> np.ndarray:
    """Validate and return x as a 1-D float64 array of finite nonnegative entries."""
    out = np.array(x, dtype=float)
    if out.ndim != 1 or out.size == 0:
        raise ValueError(f"{name} must be a non-empty 1-D array, got shape {out.shape}")
    if not np.all(np.isfinite(out)):
        raise ValueError(f"{name} entries must be finite")
    if np.any(out < 0):
        raise ValueError(f"{name} entries must be nonnegative")
    return out


def is_positive(a: np.ndarray) -> bool:
    return bool(np.all(np.asarray(a) > 0))


def _require_square(a, name: str = "matrix") -> np.ndarray:
    a = as_matrix(a, name)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    return a


def identity(n: int) -> np.ndarray:
    """Tropical identity matrix: unit diagonal, zero elsewhere."""
    return np.eye(n)


def trop_matmul(a, b) -> np.ndarray:
    """Tropical product (AB)_ij = max_k a_ik * b_kj; b may be a vector."""
    a = as_matrix(a, "left operand")
    b = np.array(b, dtype=float)
    if b.ndim == 1:
        if a.shape[1] != b.shape[0]:
            raise DimensionMismatchError(
                f"cannot multiply {a.shape} by vector of length {b.shape[0]}"
            )
        return (a * b[None, :]).max(axis=1)
    if b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    return (a[:, :, None] * b[None, :, :]).max(axis=1)


def conjugate(x) -> np.ndarray:
    """Entrywise multiplicative conjugate of a vector: 1/x_i, with zeros fixed."""
    x = as_vector(x)
    if not x.any():
        raise ValueError("conjugate of the zero vector is undefined")
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = 1.0 / x[pos]
    return out


def conjugate_transpose(a) -> np.ndarray:
    """Multiplicative conjugate transpose: entry (i, j) is 1/a_ji, zeros fixed."""
    a = as_matrix(a)
    if not a.any():
        raise ValueError("conjugate transpose of the zero matrix is undefined")
    t = a.T
    out = np.zeros_like(t)
    pos = t > 0
    out[pos] = 1.0 / t[pos]
    return out


def trop_power(a, p: int) -> np.ndarray:
    """p-fold tropical matrix power with A^0 = I."""
    a = _require_square(a)
    if p < 0 or int(p) != p:
        raise ValueError(f"power must be a nonnegative integer, got {p}")
    out = identity(a.shape[0])
    for _ in range(int(p)):
        out = trop_matmul(out, a)
    return out


def trop_trace(a) -> float:
    """Tropical trace, the maximum diagonal entry."""
    a = _require_square(a)
    return float(a.diagonal().max())


def tr_sum(a) -> float:
    """Tr(A) = max_{m=1..n} tr(A^m), the best cycle weight over all lengths."""
    a = _require_square(a)
    n = a.shape[0]
    power = a
    best = trop_trace(power)
    for _ in range(n - 1):
        power = trop_matmul(power, a)
        best = max(best, trop_trace(power))
    return best


def spectral_radius(a) -> float:
    """Maximum cycle geometric mean: max_{m=1..n} tr(A^m)^(1/m)."""
    a = _require_square(a)
    n = a.shape[0]
    power = a
    best = trop_trace(power)
    for m in range(2, n + 1):
        power = trop_matmul(power, a)
        best = max(best, trop_trace(power) ** (1.0 / m))
    return best


def kleene_star(a, rel_eq: float = DEFAULT_REL_EQ) -> np.ndarray:
    """Kleene star A* = I ⊕ A ⊕ ... ⊕ A^(n-1), defined when Tr(A) <= 1.

    Raises TrExceedsOneError if Tr(A) > 1 beyond the relative tolerance, since
    the powers would then grow without bound.
    """
    a = _require_square(a)
    total = tr_sum(a)
    if total > 1.0 + rel_eq:
        raise TrExceedsOneError(f"Tr(A) = {total:.6g} exceeds 1; Kleene star diverges")
    n = a.shape[0]
    out = identity(n)
    power = identity(n)
    for _ in range(n - 1):
        power = trop_matmul(power, a)
        out = np.maximum(out, power)
    return out


def quad_form(a, x) -> float:
    """Pseudo-quadratic form x^- A x = max_{i,j} a_ij x_j / x_i for positive x."""
    a = _require_square(a)
    x = as_vector(x, "x")
    if x.shape[0] != a.shape[0]:
        raise DimensionMismatchError(f"vector length {x.shape[0]} does not match {a.shape}")
    if not is_positive(x):
        raise ValueError("x must be entrywise positive")
    return float((a * np.outer(1.0 / x, x)).max())

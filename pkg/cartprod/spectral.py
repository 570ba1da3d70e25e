"""Eigenvalues of real symmetric matrices.

The cyclic Jacobi method works on a private float64 copy of the input and
sweeps over every off-diagonal pair until the off-diagonal Frobenius norm
falls below ``tol * max(||M||_F, 1)``.
"""
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .config import get_config
from .defaults import INERTIA_ZERO_SCALE
from .errors import ConfigError, ConvergenceError, DimensionError, SymmetryError
from .matrix import Matrix


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: Tuple[float, ...]   # sorted descending
    off_diag_norm: float
    sweeps: int

    @property
    def largest(self) -> float:
        return self.eigenvalues[0]

    def to_dict(self) -> dict:
        return {
            "eigenvalues": list(self.eigenvalues),
            "off_diag_norm": self.off_diag_norm,
            "sweeps": self.sweeps,
        }


class InertiaTriple(NamedTuple):
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def order(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus


def real_symmetric_array(M: Matrix, tol: Optional[float] = None) -> np.ndarray:
    """Float64 copy of M, or SymmetryError if M is not finite and real symmetric within tol."""
    M.order()
    tol = get_config().symmetry_tol if tol is None else tol
    data = M.to_numpy()
    if not np.isfinite(data).all():
        raise SymmetryError("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(data))))
    if np.iscomplexobj(data):
        if np.max(np.abs(data.imag)) > tol * scale:
            raise SymmetryError("matrix has non-zero imaginary parts")
        data = data.real
    data = np.array(data, dtype=np.float64)
    if np.max(np.abs(data - data.T)) > tol * scale:
        raise SymmetryError("matrix is not symmetric")
    return data


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    """Apply the plane rotation that zeroes a[p, q] (and a[q, p]) in place."""
    theta = (a[q, q] - a[p, p]) / (2.0 * a[p, q])
    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0


def jacobi_eigenvalues(M: Matrix, tol: Optional[float] = None) -> SpectrumResult:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations."""
    config = get_config()
    tol = config.jacobi_tol if tol is None else tol
    if tol <= 0:
        raise ConfigError(f"tolerance must be positive, got {tol}")

    a = real_symmetric_array(M, config.symmetry_tol)
    n = a.shape[0]
    threshold = tol * max(float(np.linalg.norm(a)), 1.0)

    sweeps = 0
    off = _off_norm(a)
    while off > threshold:
        if sweeps >= config.max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {config.max_sweeps} sweeps (off-diagonal norm {off:.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, p, q)
        sweeps += 1
        off = _off_norm(a)

    eigenvalues = tuple(sorted((float(x) for x in np.diag(a)), reverse=True))
    return SpectrumResult(eigenvalues=eigenvalues, off_diag_norm=off, sweeps=sweeps)


def default_zero_tol(M: Matrix) -> float:
    """1e-7 * order * max|entry|."""
    return INERTIA_ZERO_SCALE * M.order() * M.max_abs()


def inertia_of(eigenvalues, zero_tol: float) -> InertiaTriple:
    plus = sum(1 for x in eigenvalues if x > zero_tol)
    minus = sum(1 for x in eigenvalues if x < -zero_tol)
    return InertiaTriple(plus, len(eigenvalues) - plus - minus, minus)


def inertia(M: Matrix, zero_tol: Optional[float] = None) -> InertiaTriple:
    """(n+, n0, n-) with |lambda| <= zero_tol counted as zero."""
    zero_tol = default_zero_tol(M) if zero_tol is None else zero_tol
    return inertia_of(jacobi_eigenvalues(M).eigenvalues, zero_tol)


def closed_form_eigenvalues(M: Matrix) -> Tuple[float, ...]:
    """
    Eigenvalues of a real symmetric matrix of order 1, 2 or 3 from the
    characteristic polynomial, sorted descending.
    """
    a = real_symmetric_array(M)
    n = a.shape[0]
    if n == 1:
        return (float(a[0, 0]),)
    if n == 2:
        mean = (a[0, 0] + a[1, 1]) / 2.0
        radius = math.hypot((a[0, 0] - a[1, 1]) / 2.0, a[0, 1])
        return (mean + radius, mean - radius)
    if n != 3:
        raise DimensionError(f"closed-form eigenvalues need order <= 3, got {n}")

    p1 = a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2
    if p1 == 0.0:
        return tuple(sorted((float(a[i, i]) for i in range(3)), reverse=True))
    q = (a[0, 0] + a[1, 1] + a[2, 2]) / 3.0
    p2 = sum((a[i, i] - q) ** 2 for i in range(3)) + 2.0 * p1
    p = math.sqrt(p2 / 6.0)
    b = [[(a[i, j] - (q if i == j else 0.0)) / p for j in range(3)] for i in range(3)]
    det_b = (
        b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0])
    )
    r = min(1.0, max(-1.0, det_b / 2.0))
    phi = math.acos(r) / 3.0
    largest = q + 2.0 * p * math.cos(phi)
    smallest = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    middle = 3.0 * q - largest - smallest
    return (largest, middle, smallest)

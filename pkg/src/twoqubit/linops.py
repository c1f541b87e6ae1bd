"""Dense complex linear algebra for the fixed 2x2 and 4x4 matrices used here.

Thin, validated wrappers around LAPACK (via numpy.linalg). Everything
operates on plain complex128 arrays, never mutates its input, and is safe
to call concurrently.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, ValidationError

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_cmat",
    "dagger",
    "frobenius_norm",
    "unitarity_defect",
    "kron",
    "svd4",
    "eig4_unitary",
]


@dataclass(frozen=True)
class Tolerance:
    """Numerical tolerances shared by validation and spectral routines."""

    unitarity_tol: float = 1e-10
    zero_tol: float = 1e-8
    eig_tol: float = 1e-9

    def __post_init__(self):
        for name in ("unitarity_tol", "zero_tol", "eig_tol"):
            if not getattr(self, name) > 0:
                raise ValidationError(f"{name} must be strictly positive")


DEFAULT_TOL = Tolerance()


def as_cmat(m, size: int) -> np.ndarray:
    """Validate ``m`` as a finite size x size complex matrix; return a copy."""
    a = np.array(m, dtype=complex)
    if a.shape != (size, size):
        raise ValidationError(f"expected a {size}x{size} matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValidationError("matrix entries must be finite")
    return a


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose, acting on the last two axes."""
    return np.conj(np.swapaxes(m, -1, -2))


def frobenius_norm(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def unitarity_defect(m: np.ndarray) -> float:
    """Frobenius norm of m^dag m - I."""
    m = np.asarray(m)
    return float(np.linalg.norm(dagger(m) @ m - np.eye(m.shape[-1])))


def kron(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices.

    Row-major qubit ordering: the first factor owns the slow (most
    significant) index, so row/column 2*i + j of the product addresses
    row i of ``a`` and row j of ``b``.
    """
    return np.kron(as_cmat(a, 2), as_cmat(b, 2))


def svd4(m, tol: Tolerance = DEFAULT_TOL):
    """Singular value decomposition of a 4x4 complex matrix.

    Returns ``(s, left, right)`` with ``m = left @ diag(s) @ right.conj().T``
    and ``s`` real, nonnegative, sorted descending.

    Raises:
        NumericalError: if the underlying LAPACK iteration fails to converge.
    """
    a = as_cmat(m, 4)
    try:
        u, s, vh = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"4x4 SVD did not converge: {exc}") from None
    return s, u, dagger(vh)


def eig4_unitary(m, tol: Tolerance = DEFAULT_TOL):
    """Eigendecomposition of a unitary 4x4 matrix.

    Returns ``(phases, vectors)`` where ``phases`` are the eigenphases in
    (-pi, pi] sorted descending and ``vectors[:, k]`` satisfies
    ``m @ v_k = exp(1j * phases[k]) * v_k``.

    Within a degenerate eigenspace the returned basis is arbitrary; only
    the phase multiset is meaningful to callers.

    Raises:
        ValidationError: if ``m`` is not unitary within ``tol.unitarity_tol``.
        NumericalError: if an eigenpair residual exceeds ``tol.eig_tol``.
    """
    a = as_cmat(m, 4)
    defect = unitarity_defect(a)
    if defect > tol.unitarity_tol:
        raise ValidationError(
            f"matrix is not unitary: ||m^dag m - I||_F = {defect:.3e}"
        )
    vals, vecs = np.linalg.eig(a)
    phases = np.angle(vals)
    # np.angle returns [-pi, pi]; fold -pi onto the principal value +pi
    phases = np.where(phases <= -np.pi, phases + 2 * np.pi, phases)
    order = np.argsort(-phases, kind="stable")
    phases = phases[order]
    vecs = vecs[:, order]
    residual = float(
        np.max(np.linalg.norm(a @ vecs - vecs * np.exp(1j * phases), axis=0))
    )
    if residual > tol.eig_tol:
        raise NumericalError(f"eigenpair residual {residual:.3e} exceeds tolerance")
    return phases, vecs

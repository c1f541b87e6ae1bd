"""Operator-Schmidt decomposition of two-qubit gates.

A gate expands as U = sum_l s_l A_l (x) B_l with Hilbert-Schmidt
orthonormal single-qubit factors. The coefficients are obtained
numerically by realigning U into a 4x4 matrix whose singular values are
2 s_l, or analytically from the canonical coordinates via the closed-form
coefficients of the two-sided Pauli expansion. Normalization is chosen so
that sum s_l^2 = 1 for unitaries, making s_l^2 a probability distribution;
its Shannon entropy (base 2) is the Schmidt strength, an entanglement
measure for the operator itself ranging from 0 (local gates) to 2.

The count of nonvanishing coefficients, the Schmidt number, is 1 for local
gates, 2 exactly on the controlled-unitary line, and 4 otherwise; 3 is
impossible.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .canonical import CanonicalPoint
from .errors import SchmidtNumberError, ValidationError
from .gates import Gate, IDENTITY2, SIGMA_X, make_gate
from .linops import DEFAULT_TOL, Tolerance, kron, svd4

__all__ = [
    "SchmidtData",
    "z_from_point",
    "z_from_point_array",
    "schmidt_decompose",
    "schmidt_coefficients_array",
    "schmidt_strength",
    "schmidt_strength_array",
    "schmidt_number_of",
    "schmidt_number_from_coefficients",
    "controlled_unitary_gate",
]


@dataclass(frozen=True)
class SchmidtData:
    """Operator-Schmidt data of a gate.

    ``coefficients`` are the four s_l, descending, with sum s_l^2 = 1.
    ``factors_a[l]`` and ``factors_b[l]`` are Hilbert-Schmidt orthonormal
    2x2 factors; the gate reconstructs as sum_l 2 s_l A_l (x) B_l.
    """

    coefficients: np.ndarray
    factors_a: np.ndarray
    factors_b: np.ndarray
    schmidt_number: int
    strength: float


def z_from_point_array(c: np.ndarray) -> np.ndarray:
    """Closed-form expansion coefficients for coordinate triples (..., 3).

    Returns (..., 4) complex coefficients z_l of the canonical core in the
    basis order (I x I, sx x sx, sy x sy, sz x sz); |z_l| are the Schmidt
    coefficients and sum |z_l|^2 = 1 identically.
    """
    c = np.asarray(c, dtype=float)
    c1, c2, c3 = c[..., 0], c[..., 1], c[..., 2]
    e_plus = np.exp(0.5j * c1)
    e_minus = np.exp(-0.5j * c1)
    cos_diff = np.cos((c3 - c2) / 2)
    cos_sum = np.cos((c3 + c2) / 2)
    sin_diff = np.sin((c3 - c2) / 2)
    sin_sum = np.sin((c3 + c2) / 2)
    return np.stack(
        [
            0.5 * (e_plus * cos_diff + e_minus * cos_sum),
            0.5 * (e_plus * cos_diff - e_minus * cos_sum),
            -0.5j * (e_plus * sin_diff - e_minus * sin_sum),
            0.5j * (e_plus * sin_diff + e_minus * sin_sum),
        ],
        axis=-1,
    )


def z_from_point(c) -> np.ndarray:
    """Expansion coefficients (4 complex values) for one coordinate triple."""
    triple = np.asarray(tuple(c) if isinstance(c, CanonicalPoint) else c, dtype=float)
    if triple.shape != (3,):
        raise ValidationError("expected a coordinate triple [c1, c2, c3]")
    return z_from_point_array(triple)


def _realign(u: np.ndarray) -> np.ndarray:
    """Reshuffle U[(a b), (a' b')] into R[(a a'), (b b')].

    The operator-Schmidt coefficients of U are half the singular values
    of R; the reconstruction test in the suite pins this index convention.
    """
    v = u.reshape(u.shape[:-2] + (2, 2, 2, 2))
    v = np.swapaxes(v, -3, -2)
    return v.reshape(u.shape[:-2] + (4, 4))


def schmidt_coefficients_array(u: np.ndarray) -> np.ndarray:
    """Schmidt coefficients, descending, for a stack of 4x4 unitaries."""
    r = _realign(np.asarray(u, dtype=complex))
    return np.linalg.svd(r, compute_uv=False) / 2.0


def schmidt_strength(s, tol: Tolerance = DEFAULT_TOL) -> float:
    """Shannon entropy (bits) of the distribution s_l^2.

    Uses the 0 log 0 = 0 convention; terms below 1e-300 contribute nothing.

    Raises:
        ValidationError: if the coefficients are negative or sum s_l^2
            differs from 1 by more than 1e-10.
    """
    s = np.asarray(s, dtype=float)
    if np.any(s < -1e-12):
        raise ValidationError("Schmidt coefficients must be nonnegative")
    norm = float(np.sum(s**2))
    if abs(norm - 1.0) > 1e-10:
        raise ValidationError(f"coefficients not normalized: sum s^2 = {norm!r}")
    return float(schmidt_strength_array(s[np.newaxis, :])[0])


def schmidt_strength_array(s: np.ndarray) -> np.ndarray:
    """Vectorized strength for coefficient stacks (..., 4); no validation."""
    p = np.asarray(s, dtype=float) ** 2
    terms = np.where(p > 1e-300, p * np.log2(np.where(p > 1e-300, p, 1.0)), 0.0)
    # + 0.0 turns a signed zero into plain 0.0
    return -np.sum(terms, axis=-1) + 0.0


def schmidt_number_from_coefficients(s, zero_tol: float = 1e-8) -> int:
    """Count the nonvanishing coefficients; the result is 1, 2 or 4.

    A count of 3 is impossible for two-qubit gates, so if it appears the
    count is retried at 10x and 0.1x the tolerance (in that order) and the
    first admissible value wins.

    Raises:
        SchmidtNumberError: if the count is 3 at all three tolerances.
    """
    s = np.asarray(s, dtype=float)
    for t in (zero_tol, 10 * zero_tol, 0.1 * zero_tol):
        n = int(np.sum(s > t))
        if n != 3:
            return n
    raise SchmidtNumberError(
        f"coefficient count is 3 at tolerances around {zero_tol:g}: s = {s.tolist()}"
    )


def schmidt_decompose(g: Gate, tol: Tolerance = DEFAULT_TOL) -> SchmidtData:
    """Operator-Schmidt decomposition via realignment and SVD.

    The left/right singular vectors of the realigned matrix, reshaped to
    2x2, are the factor operators; they come out Hilbert-Schmidt
    orthonormal, so the singular values carry a factor 2 relative to the
    normalized coefficients.
    """
    sigma, left, right = svd4(_realign(g.matrix), tol=tol)
    coefficients = sigma / 2.0
    factors_a = np.ascontiguousarray(left.T.reshape(4, 2, 2))
    factors_b = np.ascontiguousarray(right.conj().T.reshape(4, 2, 2))
    return SchmidtData(
        coefficients=coefficients,
        factors_a=factors_a,
        factors_b=factors_b,
        schmidt_number=schmidt_number_from_coefficients(coefficients, tol.zero_tol),
        strength=schmidt_strength(coefficients, tol),
    )


def schmidt_number_of(g: Gate, tol: Tolerance = DEFAULT_TOL) -> int:
    """Schmidt number of a gate: 1 (local), 2 (controlled unitary) or 4."""
    s = schmidt_coefficients_array(g.matrix)
    return schmidt_number_from_coefficients(s, tol.zero_tol)


def controlled_unitary_gate(p: float) -> Gate:
    """The Schmidt-number-2 normal form sqrt(1-p) I x I + i sqrt(p) sx x sx.

    Every controlled unitary is locally equivalent to this gate for some
    p in [0, 1]; p = sin^2(theta/2) places it at [theta, 0, 0].

    Raises:
        ValidationError: if p is outside [0, 1].
    """
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"p must lie in [0, 1], got {p!r}")
    matrix = np.sqrt(1.0 - p) * kron(IDENTITY2, IDENTITY2) + 1j * np.sqrt(p) * kron(
        SIGMA_X, SIGMA_X
    )
    return make_gate(matrix, name=f"controlled_unitary(p={p:g})")

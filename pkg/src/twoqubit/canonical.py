"""Canonical (Weyl-chamber) coordinates of two-qubit gates.

Every two-qubit gate factors into single-qubit operations sandwiching a
three-parameter core exp(i/2 (c1 XX + c2 YY + c3 ZZ)); the triple
[c1, c2, c3] labels the local equivalence class. The coordinates live on a
3-torus with period pi, and the residual symmetries (coordinate
permutations, and the pair flips [ci, cj, ck] -> [pi - ci, pi - cj, ck])
fold the torus onto a tetrahedral fundamental domain:

    c1 >= c2 >= c3 >= 0,  c1 + c2 <= pi,  and c1 <= pi/2 whenever c3 = 0,

with vertices O = [0,0,0], A1 = [pi,0,0], A2 = [pi/2,pi/2,0] and
A3 = [pi/2,pi/2,pi/2] (Zhang et al., PRA 67, 042313 (2003)). Perfect
entanglers form the polyhedron with vertices L, M, N, P, Q, A2, the
midpoints of the tetrahedron edges plus A2.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ExtractionError, ValidationError
from .gates import (
    Gate,
    IDENTITY2,
    Q_MAGIC,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
)
from .invariants import (
    invariants_from_point_array,
    invariants_from_unitary_array,
)
from .linops import kron

__all__ = [
    "CanonicalPoint",
    "O",
    "A1",
    "A2",
    "A3",
    "L",
    "M",
    "N",
    "P",
    "Q",
    "TETRAHEDRON_VERTICES",
    "POLYHEDRON_VERTICES",
    "PE_HALFSPACES",
    "weyl_reduce",
    "weyl_reduce_array",
    "in_weyl_chamber",
    "canonical_point",
    "canonical_points_array",
    "is_perfect_entangler",
    "schmidt_number_line",
    "canonical_gate",
]

# Mirror rule engages only within floating fuzz of the c3 = 0 base, where
# [c1, c2, 0] and [pi - c1, c2, 0] are the same class. Must stay well below
# any genuine c3 > 0 and small enough to keep invariants unchanged to 1e-12.
_BASE_TOL = 1e-13


@dataclass(frozen=True)
class CanonicalPoint:
    """Coordinates [c1, c2, c3] of a local equivalence class, in radians."""

    c1: float
    c2: float
    c3: float

    def __iter__(self):
        return iter((self.c1, self.c2, self.c3))

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3], dtype=float)

    @property
    def is_chamber_reduced(self) -> bool:
        return in_weyl_chamber(self)


def _point(c) -> CanonicalPoint:
    c1, c2, c3 = (float(v) for v in c)
    return CanonicalPoint(c1, c2, c3)


def _as_triple(c) -> np.ndarray:
    a = np.asarray(tuple(c) if isinstance(c, CanonicalPoint) else c, dtype=float)
    if a.shape != (3,):
        raise ValidationError("expected a coordinate triple [c1, c2, c3]")
    return a


O = CanonicalPoint(0.0, 0.0, 0.0)
A1 = CanonicalPoint(np.pi, 0.0, 0.0)
A2 = CanonicalPoint(np.pi / 2, np.pi / 2, 0.0)
A3 = CanonicalPoint(np.pi / 2, np.pi / 2, np.pi / 2)
# midpoints of tetrahedron edges OA1, A2A1, A1A3, OA3, OA2
L = CanonicalPoint(np.pi / 2, 0.0, 0.0)
M = CanonicalPoint(3 * np.pi / 4, np.pi / 4, 0.0)
N = CanonicalPoint(3 * np.pi / 4, np.pi / 4, np.pi / 4)
P = CanonicalPoint(np.pi / 4, np.pi / 4, np.pi / 4)
Q = CanonicalPoint(np.pi / 4, np.pi / 4, 0.0)

TETRAHEDRON_VERTICES = {"O": O, "A1": A1, "A2": A2, "A3": A3}
POLYHEDRON_VERTICES = {"L": L, "M": M, "N": N, "P": P, "Q": Q, "A2": A2}

# Supporting half-spaces of the perfect-entangler polyhedron, derived once
# from its six vertices: rows (a, b) encode a . c <= b. Facets in order:
# base c3 = 0 (quad L M A2 Q), c3 <= c2 (tri L P N), c2 <= c1 (tri Q P A2),
# c1 + c2 >= pi/2 (tri L Q P), c1 - c2 <= pi/2 (tri L M N),
# c1 + c2 <= pi (tri M N A2), c2 + c3 <= pi/2 (tri P N A2).
PE_HALFSPACES = (
    np.array(
        [
            [0.0, 0.0, -1.0],
            [0.0, -1.0, 1.0],
            [-1.0, 1.0, 0.0],
            [-1.0, -1.0, 0.0],
            [1.0, -1.0, 0.0],
            [1.0, 1.0, 0.0],
            [0.0, 1.0, 1.0],
        ]
    ),
    np.array([0.0, 0.0, 0.0, -np.pi / 2, np.pi / 2, np.pi, np.pi / 2]),
)


def weyl_reduce_array(c: np.ndarray) -> np.ndarray:
    """Fold coordinate triples (..., 3) into the fundamental chamber.

    Applies the period-pi reduction, a descending sort (coordinate
    permutation), at most one pair flip (one suffices after sorting), and
    the base mirror c1 -> pi - c1 when c3 vanishes and c1 > pi/2.
    """
    c = np.mod(np.asarray(c, dtype=float), np.pi)
    c = np.flip(np.sort(c, axis=-1), axis=-1)
    over = c[..., 0] + c[..., 1] > np.pi
    if np.any(over):
        flipped = np.stack(
            [np.pi - c[..., 1], np.pi - c[..., 0], c[..., 2]], axis=-1
        )
        c = np.where(over[..., None], flipped, c)
        c = np.flip(np.sort(c, axis=-1), axis=-1)
    mirror = (c[..., 2] <= _BASE_TOL) & (c[..., 0] > np.pi / 2)
    if np.any(mirror):
        mirrored = np.stack([np.pi - c[..., 0], c[..., 1], c[..., 2]], axis=-1)
        c = np.where(mirror[..., None], mirrored, c)
        c = np.flip(np.sort(c, axis=-1), axis=-1)
    return c


def weyl_reduce(c) -> CanonicalPoint:
    """Reduce an arbitrary coordinate triple into the fundamental chamber.

    Idempotent, and preserves the local invariants to better than 1e-12.
    """
    return _point(weyl_reduce_array(_as_triple(c)))


def in_weyl_chamber(c, tol: float = 1e-12) -> bool:
    """True iff the triple satisfies the fundamental-domain inequalities."""
    c1, c2, c3 = _as_triple(c)
    ordered = c3 >= -tol and c2 >= c3 - tol and c1 >= c2 - tol
    closed = c1 + c2 <= np.pi + tol
    base = c3 > _BASE_TOL or c1 <= np.pi / 2 + tol
    return bool(ordered and closed and base)


# Ordered assignments of three of the four eigenphases of M(U) to the
# combinations (c1+c2-c3, c1-c2+c3, -c1+c2+c3); the fourth is implied.
_PHASE_ASSIGNMENTS = tuple(itertools.permutations(range(4), 3))


def canonical_points_array(u: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Chamber-reduced canonical coordinates for a stack of unitaries.

    ``u`` has shape (..., 4, 4); the result has shape (..., 3).

    The eigenphases of M(U) = U_B^T U_B for the determinant-normalized gate
    equal {c1+c2-c3, c1-c2+c3, -c1+c2+c3, -(c1+c2+c3)} modulo 2pi. Each
    ordered assignment of three phases yields a candidate triple that is
    correct modulo pi per coordinate, so chamber reduction followed by an
    invariant check selects a valid branch. Candidates are tried in a fixed
    lexicographic order and the first invariant-matching one wins.

    Raises:
        ExtractionError: if no candidate reproduces (G1, G2) within ``tol``
            (the message reports the best residual seen).
    """
    u = np.asarray(u, dtype=complex)
    batch = u.shape[:-2]
    det = np.linalg.det(u)
    su = u * np.exp(-1j * np.angle(det) / 4.0)[..., None, None]
    ub = Q_MAGIC.T @ su @ Q_MAGIC
    m = np.swapaxes(ub, -1, -2) @ ub
    phases = np.angle(np.linalg.eigvals(m))

    g1_ref, g2_ref = invariants_from_unitary_array(u)
    g2_ref = g2_ref.real

    out = np.zeros(batch + (3,), dtype=float)
    found = np.zeros(batch, dtype=bool)
    best = np.full(batch, np.inf)
    for i, j, k in _PHASE_ASSIGNMENTS:
        cand = 0.5 * np.stack(
            [
                phases[..., i] + phases[..., j],
                phases[..., i] + phases[..., k],
                phases[..., j] + phases[..., k],
            ],
            axis=-1,
        )
        cand = weyl_reduce_array(cand)
        g1, g2 = invariants_from_point_array(cand)
        residual = np.maximum(np.abs(g1 - g1_ref), np.abs(g2 - g2_ref))
        best = np.minimum(best, residual)
        take = ~found & (residual <= tol)
        if np.any(take):
            out[take] = cand[take]
            found |= take
        if np.all(found):
            break
    if not np.all(found):
        raise ExtractionError(
            "no coordinate candidate reproduced the local invariants; "
            f"best residual {float(np.max(best[~found])):.3e}"
        )
    return out


def canonical_point(g: Gate, tol: float = 1e-8) -> CanonicalPoint:
    """Extract the chamber-reduced canonical coordinates of a gate."""
    return _point(canonical_points_array(g.matrix, tol=tol))


def is_perfect_entangler(c, boundary_tol: float = 1e-10) -> bool:
    """True iff the class can map some product state to a maximally
    entangled state.

    Geometrically: membership in the closed polyhedron L M N P Q A2,
    tested against its supporting half-spaces after chamber reduction.
    Boundary points (CNOT, DCNOT, ...) count as inside.
    """
    reduced = weyl_reduce_array(_as_triple(c))
    a, b = PE_HALFSPACES
    return bool(np.all(reduced @ a.T <= b + boundary_tol))


def is_perfect_entangler_array(c: np.ndarray, boundary_tol: float = 1e-10) -> np.ndarray:
    """Vectorized perfect-entangler test for chamber-reduced triples (..., 3)."""
    a, b = PE_HALFSPACES
    return np.all(np.asarray(c) @ a.T <= b + boundary_tol, axis=-1)


def schmidt_number_line(c, tol: float = 1e-9) -> bool:
    """True iff the class lies on the controlled-unitary line [theta, 0, 0].

    These are exactly the classes with Schmidt number at most 2; after
    reduction the line is c2 = c3 = 0.
    """
    reduced = weyl_reduce_array(_as_triple(c))
    return bool(reduced[1] <= tol and reduced[2] <= tol)


_XX = kron(SIGMA_X, SIGMA_X)
_YY = kron(SIGMA_Y, SIGMA_Y)
_ZZ = kron(SIGMA_Z, SIGMA_Z)
_II = kron(IDENTITY2, IDENTITY2)


def canonical_gate(c, name: str | None = None) -> Gate:
    """The canonical core exp(i/2 (c1 XX + c2 YY + c3 ZZ)) as a Gate.

    The three factors commute and each squares to the identity, so the
    exponential is assembled in closed form.
    """
    triple = _as_triple(c)
    u = _II
    for angle, pauli2 in zip(triple, (_XX, _YY, _ZZ)):
        u = u @ (np.cos(angle / 2) * _II + 1j * np.sin(angle / 2) * pauli2)
    return Gate(matrix=u, name=name)

"""The fifteen named edges of the chamber tetrahedron and the
perfect-entangler polyhedron.

Each edge is a one-parameter family of canonical points together with
closed-form Schmidt coefficients. Sweeps always compute coefficients
through the expansion-coefficient engine (z_from_point); the closed forms
are kept only as an independent oracle, checked by :func:`verify_tables`.
"""
from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .canonical import (
    CanonicalPoint,
    is_perfect_entangler_array,
    weyl_reduce_array,
)
from .errors import ValidationError
from .invariants import invariants_from_point_array
from .schmidt import schmidt_strength_array, z_from_point_array
from .svgplot import line_plot

__all__ = [
    "EdgeSpec",
    "SweepRow",
    "EdgeCheck",
    "TableReport",
    "edge",
    "edge_names",
    "sweep",
    "sweep_csv",
    "verify_tables",
    "FIGURES",
    "emit_figure_data",
    "figure_svg",
]

_PI = np.pi
_C8 = np.cos(_PI / 8)
_S8 = np.sin(_PI / 8)


@dataclass(frozen=True)
class EdgeSpec:
    """One named edge: endpoints, parameterization and coefficient oracle."""

    name: str
    start: str
    end: str
    param_range: tuple[float, float]
    point_fn: Callable[[np.ndarray], np.ndarray]
    closed_form_s: Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class SweepRow:
    """One grid point of an edge sweep; all fields mutually consistent."""

    param: float
    point: CanonicalPoint
    s: tuple[float, float, float, float]
    strength: float
    g1: complex
    g2: float
    is_pe: bool


def _points(*coords) -> np.ndarray:
    """Stack coordinate expressions (scalars or arrays) into (..., 3)."""
    coords = np.broadcast_arrays(*[np.asarray(c, dtype=float) for c in coords])
    return np.stack(coords, axis=-1)


def _coeffs(*values) -> np.ndarray:
    values = np.broadcast_arrays(*[np.asarray(v, dtype=float) for v in values])
    return np.stack(values, axis=-1)


def _tetrahedron_edges() -> list[EdgeSpec]:
    return [
        EdgeSpec(
            "OA1", "O", "A1", (0.0, _PI),
            lambda t: _points(t, 0.0 * t, 0.0 * t),
            lambda t: _coeffs(np.cos(t / 2), np.sin(t / 2), 0.0 * t, 0.0 * t),
        ),
        EdgeSpec(
            "OA2", "O", "A2", (0.0, _PI / 2),
            lambda t: _points(t, t, 0.0 * t),
            lambda t: _coeffs(
                np.cos(t / 2) ** 2,
                np.sin(t) / 2,
                np.sin(t) / 2,
                np.sin(t / 2) ** 2,
            ),
        ),
        EdgeSpec(
            "A2A1", "A2", "A1", (0.0, _PI / 2),
            lambda t: _points(_PI / 2 + t, _PI / 2 - t, 0.0 * t),
            lambda t: _coeffs(
                np.cos(t) / 2,
                (1 + np.sin(t)) / 2,
                (1 - np.sin(t)) / 2,
                np.cos(t) / 2,
            ),
        ),
        EdgeSpec(
            "A2A3", "A2", "A3", (0.0, _PI / 2),
            lambda t: _points(_PI / 2 + 0.0 * t, _PI / 2 + 0.0 * t, t),
            lambda t: _coeffs(
                0.5 + 0.0 * t, 0.5 + 0.0 * t, 0.5 + 0.0 * t, 0.5 + 0.0 * t
            ),
        ),
        EdgeSpec(
            "OA3", "O", "A3", (0.0, 1.0),
            lambda t: _points(_PI * t / 2, _PI * t / 2, _PI * t / 2),
            lambda t: _coeffs(
                np.sqrt(1 + 3 * np.cos(_PI * t / 2) ** 2) / 2,
                np.sin(_PI * t / 2) / 2,
                np.sin(_PI * t / 2) / 2,
                np.sin(_PI * t / 2) / 2,
            ),
        ),
        EdgeSpec(
            "A1A3", "A1", "A3", (0.0, 1.0),
            lambda t: _points(_PI - _PI * t / 2, _PI * t / 2, _PI * t / 2),
            lambda t: _coeffs(
                np.sin(_PI * t / 2) / 2,
                np.sqrt(1 + 3 * np.cos(_PI * t / 2) ** 2) / 2,
                np.sin(_PI * t / 2) / 2,
                np.sin(_PI * t / 2) / 2,
            ),
        ),
    ]


def _polyhedron_edges() -> list[EdgeSpec]:
    return [
        EdgeSpec(
            "LQ", "L", "Q", (0.0, _PI / 4),
            lambda t: _points(_PI / 2 - t, t, 0.0 * t),
            lambda t: _coeffs(
                (np.cos(t / 2) ** 2 + np.sin(t) / 2) / np.sqrt(2),
                (np.cos(t / 2) ** 2 - np.sin(t) / 2) / np.sqrt(2),
                (np.sin(t / 2) ** 2 + np.sin(t) / 2) / np.sqrt(2),
                (np.sin(t) / 2 - np.sin(t / 2) ** 2) / np.sqrt(2),
            ),
        ),
        EdgeSpec(
            "LM", "L", "M", (0.0, _PI / 4),
            lambda t: _points(_PI / 2 + t, t, 0.0 * t),
            lambda t: _coeffs(
                (np.cos(t / 2) ** 2 - np.sin(t) / 2) / np.sqrt(2),
                (np.cos(t / 2) ** 2 + np.sin(t) / 2) / np.sqrt(2),
                (np.sin(t) / 2 - np.sin(t / 2) ** 2) / np.sqrt(2),
                (np.sin(t / 2) ** 2 + np.sin(t) / 2) / np.sqrt(2),
            ),
        ),
        EdgeSpec(
            "A2M", "A2", "M", (0.0, _PI / 4),
            lambda t: _points(_PI / 2 + t, _PI / 2 - t, 0.0 * t),
            lambda t: _coeffs(
                np.cos(t) / 2,
                (1 + np.sin(t)) / 2,
                (1 - np.sin(t)) / 2,
                np.cos(t) / 2,
            ),
        ),
        EdgeSpec(
            "A2Q", "A2", "Q", (0.0, _PI / 4),
            lambda t: _points(_PI / 2 - t, _PI / 2 - t, 0.0 * t),
            lambda t: _coeffs(
                (1 + np.sin(t)) / 2,
                np.cos(t) / 2,
                np.cos(t) / 2,
                (1 - np.sin(t)) / 2,
            ),
        ),
        EdgeSpec(
            "QP", "Q", "P", (0.0, _PI / 4),
            lambda t: _points(_PI / 4 + 0.0 * t, _PI / 4 + 0.0 * t, t),
            lambda t: _coeffs(
                np.sqrt(_C8**4 * np.cos(t / 2) ** 2 + _S8**4 * np.sin(t / 2) ** 2),
                1 / (2 * np.sqrt(2)) + 0.0 * t,
                1 / (2 * np.sqrt(2)) + 0.0 * t,
                np.sqrt(_S8**4 * np.cos(t / 2) ** 2 + _C8**4 * np.sin(t / 2) ** 2),
            ),
        ),
        EdgeSpec(
            "MN", "M", "N", (0.0, _PI / 4),
            lambda t: _points(3 * _PI / 4 + 0.0 * t, _PI / 4 + 0.0 * t, t),
            lambda t: _coeffs(
                1 / (2 * np.sqrt(2)) + 0.0 * t,
                np.sqrt(_C8**4 * np.cos(t / 2) ** 2 + _S8**4 * np.sin(t / 2) ** 2),
                np.sqrt(_S8**4 * np.cos(t / 2) ** 2 + _C8**4 * np.sin(t / 2) ** 2),
                1 / (2 * np.sqrt(2)) + 0.0 * t,
            ),
        ),
        EdgeSpec(
            "PN", "P", "N", (0.0, _PI / 2),
            lambda t: _points(_PI / 4 + t, _PI / 4 + 0.0 * t, _PI / 4 + 0.0 * t),
            lambda t: _coeffs(
                np.sqrt(
                    _C8**4 * np.cos(_PI / 8 + t / 2) ** 2
                    + _S8**4 * np.sin(_PI / 8 + t / 2) ** 2
                ),
                np.sqrt(
                    _S8**4 * np.cos(_PI / 8 + t / 2) ** 2
                    + _C8**4 * np.sin(_PI / 8 + t / 2) ** 2
                ),
                1 / (2 * np.sqrt(2)) + 0.0 * t,
                1 / (2 * np.sqrt(2)) + 0.0 * t,
            ),
        ),
        EdgeSpec(
            "LN", "L", "N", (0.0, _PI / 4),
            lambda t: _points(_PI / 2 + t, t, t),
            lambda t: _coeffs(
                np.sqrt(1 + np.cos(t) ** 2 - np.sin(2 * t)) / 2,
                np.sqrt(1 + np.cos(t) ** 2 + np.sin(2 * t)) / 2,
                np.sin(t) / 2,
                np.sin(t) / 2,
            ),
        ),
        EdgeSpec(
            "A2P", "A2", "P", (0.0, _PI / 4),
            lambda t: _points(_PI / 2 - t, _PI / 2 - t, t),
            lambda t: _coeffs(
                np.sqrt(1 + np.sin(t) ** 2 + np.sin(2 * t)) / 2,
                np.cos(t) / 2,
                np.cos(t) / 2,
                np.sqrt(1 + np.sin(t) ** 2 - np.sin(2 * t)) / 2,
            ),
        ),
    ]


TETRAHEDRON_EDGES = tuple(e.name for e in _tetrahedron_edges())
POLYHEDRON_EDGES = tuple(e.name for e in _polyhedron_edges())

_EDGES: dict[str, EdgeSpec] = {
    e.name: e for e in _tetrahedron_edges() + _polyhedron_edges()
}


def edge_names() -> tuple[str, ...]:
    return tuple(_EDGES)


def edge(name: str) -> EdgeSpec:
    """Look up an edge by name (6 tetrahedron + 9 polyhedron edges).

    Raises:
        ValidationError: for an unknown name; the message lists valid names.
    """
    try:
        return _EDGES[name]
    except KeyError:
        raise ValidationError(
            f"unknown edge {name!r}; valid names: {', '.join(_EDGES)}"
        ) from None


def _grid(spec: EdgeSpec, n_points: int) -> np.ndarray:
    if n_points < 2:
        raise ValidationError("n_points must be at least 2")
    lo, hi = spec.param_range
    return np.linspace(lo, hi, n_points)


def sweep(name: str, n_points: int) -> list[SweepRow]:
    """Evaluate an edge on an endpoint-inclusive uniform parameter grid.

    Coefficients come from the expansion-coefficient engine, not from the
    closed-form table; rows carry point, sorted coefficients, strength,
    invariants and the perfect-entangler flag.
    """
    spec = edge(name)
    params = _grid(spec, n_points)
    points = spec.point_fn(params)
    s = np.flip(np.sort(np.abs(z_from_point_array(points)), axis=-1), axis=-1)
    strengths = schmidt_strength_array(s)
    g1, g2 = invariants_from_point_array(points)
    pe = is_perfect_entangler_array(weyl_reduce_array(points))
    return [
        SweepRow(
            param=float(params[i]),
            point=CanonicalPoint(*(float(v) for v in points[i])),
            s=tuple(float(v) for v in s[i]),
            strength=float(strengths[i]),
            g1=complex(g1[i]),
            g2=float(g2[i]),
            is_pe=bool(pe[i]),
        )
        for i in range(n_points)
    ]


def _fmt(x: float) -> str:
    return f"{x:.15g}"


def sweep_csv(name: str, n_points: int) -> str:
    """CSV rendering of a sweep: 15 significant digits, LF line endings."""
    rows = sweep(name, n_points)
    buf = io.StringIO()
    buf.write("param,c1,c2,c3,s1,s2,s3,s4,strength,g1_re,g1_im,g2,is_pe\n")
    for r in rows:
        fields = (
            [r.param, r.point.c1, r.point.c2, r.point.c3]
            + list(r.s)
            + [r.strength, r.g1.real, r.g1.imag, r.g2]
        )
        buf.write(",".join(_fmt(v) for v in fields))
        buf.write(",true\n" if r.is_pe else ",false\n")
    return buf.getvalue()


@dataclass(frozen=True)
class EdgeCheck:
    """Closed-form-vs-engine deviation for one edge."""

    name: str
    max_deviation: float
    worst_param: float


@dataclass(frozen=True)
class TableReport:
    checks: tuple[EdgeCheck, ...]
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(c.max_deviation <= self.tolerance for c in self.checks)

    @property
    def max_deviation(self) -> float:
        return max(c.max_deviation for c in self.checks)


def verify_tables(n_points: int, tolerance: float = 1e-10) -> TableReport:
    """Compare engine coefficients against every closed form on a grid.

    For each edge and grid parameter the sorted engine coefficients are
    checked against the sorted closed-form values; the report carries the
    per-edge maximum absolute deviation and where it occurred.
    """
    checks = []
    for name in edge_names():
        spec = edge(name)
        params = _grid(spec, n_points)
        engine = np.flip(
            np.sort(np.abs(z_from_point_array(spec.point_fn(params))), axis=-1),
            axis=-1,
        )
        table = np.flip(np.sort(spec.closed_form_s(params), axis=-1), axis=-1)
        dev = np.max(np.abs(engine - table), axis=-1)
        worst = int(np.argmax(dev))
        checks.append(
            EdgeCheck(
                name=name,
                max_deviation=float(dev[worst]),
                worst_param=float(params[worst]),
            )
        )
    return TableReport(checks=tuple(checks), tolerance=tolerance)


# Figure ids -> the curves they carry, in caption order. Each curve is
# (edge name, parameter range); OA1 is restricted to its first half, the
# other half being its mirror image.
FIGURES: dict[str, tuple[tuple[str, tuple[float, float]], ...]] = {
    "fig2": (("OA1", (0.0, _PI / 2)), ("OA2", (0.0, _PI / 2))),
    "fig3a": (("OA3", (0.0, 1.0)),),
    "fig3b": (("A2A1", (0.0, _PI / 2)),),
    "fig4a": (("A2Q", (0.0, _PI / 4)), ("A2P", (0.0, _PI / 4))),
    "fig4b": (("LQ", (0.0, _PI / 4)), ("LN", (0.0, _PI / 4))),
    "fig5a": (("QP", (0.0, _PI / 4)),),
    "fig5b": (("PN", (0.0, _PI / 2)),),
}


def _figure_series(figure: str, n_points: int):
    try:
        curves = FIGURES[figure]
    except KeyError:
        raise ValidationError(
            f"unknown figure {figure!r}; valid ids: {', '.join(FIGURES)}"
        ) from None
    if n_points < 2:
        raise ValidationError("n_points must be at least 2")
    series = []
    params = None
    for name, (lo, hi) in curves:
        spec = edge(name)
        params = np.linspace(lo, hi, n_points)
        s = np.abs(z_from_point_array(spec.point_fn(params)))
        series.append((name, params, schmidt_strength_array(s)))
    return params, series


def emit_figure_data(figure: str, n_points: int) -> str:
    """CSV for one strength figure: param column plus one strength column
    per curve, in caption order. Curves within a figure share their
    parameter grid."""
    params, series = _figure_series(figure, n_points)
    buf = io.StringIO()
    buf.write("param," + ",".join(name for name, _, _ in series) + "\n")
    for i in range(len(params)):
        row = [params[i]] + [vals[i] for _, _, vals in series]
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def figure_svg(figure: str, n_points: int) -> str:
    """SVG line plot of the same data emit_figure_data produces."""
    _, series = _figure_series(figure, n_points)
    return line_plot(
        [(name, params, vals) for name, params, vals in series],
        title=figure,
        xlabel="parameter (rad)",
        ylabel="Schmidt strength",
    )


def edge_svg(name: str, n_points: int) -> str:
    """SVG line plot of one edge's strength profile."""
    rows = sweep(name, n_points)
    params = np.array([r.param for r in rows])
    vals = np.array([r.strength for r in rows])
    return line_plot(
        [(name, params, vals)],
        title=f"edge {name}",
        xlabel="parameter (rad)",
        ylabel="Schmidt strength",
    )

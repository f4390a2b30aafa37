"""Geometry of tropical column spans.

Tools for working with the solution cones produced by the solvers: the
Hilbert ratio that measures how strongly a score vector separates its largest
and smallest components, collinearity and tropical-dependence reduction of
generator sets, and 2-D sections of three-row spans by the plane x_3 = 1 for
plotting.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_REL_EQ, as_matrix, as_vector, is_positive, scalar_eq

__all__ = [
    "SectionPlot",
    "hilbert_seminorm",
    "is_collinear",
    "collinear_classes",
    "reduce_generators",
    "tropical_segment",
    "section_at_unit_last_coord",
]


@dataclass
class SectionPlot:
    """Polyline data for a span section: vertices, segments, and point labels."""

    points: list[tuple[float, float]] = field(default_factory=list)
    segments: list[tuple[tuple[float, float], tuple[float, float]]] = field(default_factory=list)
    labels: list[str] = field(default_factory=list)


def hilbert_seminorm(x) -> float:
    """Contrast ratio (max_i x_i) / (min_j x_j) of a positive vector.

    This is the exponential of the Hilbert (range) seminorm; the logarithm is
    omitted since it is monotone and only ratios are ever compared.
    """
    x = as_vector(x, "x")
    if not is_positive(x):
        raise ValueError("x must be entrywise positive")
    return float(x.max() / x.min())


def is_collinear(x, y, rel_eq: float = DEFAULT_REL_EQ) -> bool:
    """True when positive vectors x and y differ by a single positive factor."""
    x = as_vector(x, "x")
    y = as_vector(y, "y")
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    if not (is_positive(x) and is_positive(y)):
        raise ValueError("vectors must be entrywise positive")
    ratio = x / y
    return scalar_eq(float(ratio.max()), float(ratio.min()), rel_eq)


def _collinear_nonneg(x: np.ndarray, y: np.ndarray, rel_eq: float) -> bool:
    # Collinearity for nonnegative vectors: matching zero patterns and a
    # constant ratio on the support.
    px, py = x > 0, y > 0
    if not np.array_equal(px, py):
        return False
    if not px.any():
        return True
    ratio = x[px] / y[py]
    return scalar_eq(float(ratio.max()), float(ratio.min()), rel_eq)


def collinear_classes(s, rel_eq: float = DEFAULT_REL_EQ) -> list[np.ndarray]:
    """First-occurrence representatives of the collinearity classes of the columns."""
    s = as_matrix(s, "S")
    reps: list[np.ndarray] = []
    for j in range(s.shape[1]):
        col = s[:, j]
        if not any(_collinear_nonneg(col, rep, rel_eq) for rep in reps):
            reps.append(col)
    return reps


def _depends_on(col: np.ndarray, others: np.ndarray, rel_eq: float) -> bool:
    # Residuation test: the best subinvariant coefficients are
    # y_j = min_i col_i / others_ij, and col lies in the span exactly when
    # the combination others @ y climbs back up to col.
    coeff = (col[:, None] / others).min(axis=0)
    recon = (others * coeff[None, :]).max(axis=1)
    return all(scalar_eq(float(r), float(c), rel_eq) for r, c in zip(recon, col))


def reduce_generators(s, rel_eq: float = DEFAULT_REL_EQ) -> np.ndarray:
    """Drop redundant columns of a positive generator matrix, span preserved.

    Collinear duplicates go first (first occurrence wins), then any column
    that is tropically dependent on the remaining ones is removed via the
    residuation criterion.
    """
    s = as_matrix(s, "S")
    if not is_positive(s):
        raise ValueError("S must be entrywise positive")
    kept = []
    for j in range(s.shape[1]):
        if not any(is_collinear(s[:, j], s[:, i], rel_eq) for i in kept):
            kept.append(j)
    for j in list(kept):
        others = [i for i in kept if i != j]
        if others and _depends_on(s[:, j], s[:, others], rel_eq):
            kept.remove(j)
    return s[:, kept]


def tropical_segment(
    u: tuple[float, float], v: tuple[float, float], rel_eq: float = DEFAULT_REL_EQ
) -> list[tuple[float, float]]:
    """Vertices of the tropical segment between two points of the x_3 = 1 plane.

    The segment is the section of the span of (u, 1) and (v, 1); it runs from
    u to the coordinatewise join u ⊕ v and on to v, so it has at most one
    breakpoint.
    """
    join = (max(u[0], v[0]), max(u[1], v[1]))
    path = [u]
    if not _points_close(join, u, rel_eq) and not _points_close(join, v, rel_eq):
        path.append(join)
    path.append(v)
    return path


def _points_close(a: tuple[float, float], b: tuple[float, float], rel_eq: float) -> bool:
    return scalar_eq(a[0], b[0], rel_eq) and scalar_eq(a[1], b[1], rel_eq)


def section_at_unit_last_coord(s, rel_eq: float = DEFAULT_REL_EQ) -> SectionPlot:
    """Section of the span of a positive 3-row matrix by the plane x_3 = 1.

    Each generator is normalized to last coordinate 1 and projected to its
    first two coordinates; the section polyline then chains tropical segments
    between adjacent generators, recording any breakpoints as extra vertices.
    """
    s = as_matrix(s, "S")
    if s.shape[0] != 3:
        raise ValueError(f"section requires a 3-row matrix, got {s.shape[0]} rows")
    if not is_positive(s):
        raise ValueError("S must be entrywise positive")

    normalized = s / s[2, :][None, :]
    points: list[tuple[float, float]] = []
    for j in range(normalized.shape[1]):
        pt = (float(normalized[0, j]), float(normalized[1, j]))
        if not any(_points_close(pt, q, rel_eq) for q in points):
            points.append(pt)
    points.sort()

    plot = SectionPlot()
    for i, pt in enumerate(points):
        plot.points.append(pt)
        plot.labels.append(f"g{i + 1}")
    for u, v in zip(points, points[1:]):
        path = tropical_segment(u, v, rel_eq)
        for a, b in zip(path, path[1:]):
            plot.segments.append((a, b))
        if len(path) == 3:
            plot.points.append(path[1])
            plot.labels.append("bend")
    return plot

"""Closed-form tropical optimization solvers.

Four problems over positive vectors x, all solved exactly in the max-times
semiring:

* minimize x^- A x                      (optimal value: the spectral radius)
* minimize max_k w_k x^- A_k x          (same, on the weighted max-combination)
* maximize q^- x (Ax)^- p               (optimal value Delta = q^- A^- p)
* minimize q^- x x^- p  s.t.  Ax <= x   (optimal value delta = q^- A* p)

Each solver returns a SolutionCone: the optimal value together with a
generator matrix whose tropical column span (for the maximization problem, the
union of per-witness-pair spans) is the full solution set.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import (
    DEFAULT_REL_EQ,
    NoPositiveSolutionError,
    as_matrix,
    as_vector,
    conjugate,
    identity,
    is_positive,
    kleene_star,
    scalar_eq,
    spectral_radius,
    tr_sum,
    trop_matmul,
)
from .geometry import _collinear_nonneg, collinear_classes

__all__ = [
    "SolutionCone",
    "solve_subeigen",
    "min_pseudo_quadratic",
    "min_weighted_pseudo_quadratic",
    "max_ratio",
    "max_hilbert_over_span",
    "min_hilbert_constrained",
    "min_hilbert_over_kleene_cone",
]


@dataclass
class SolutionCone:
    """Optimal value plus generators of the solution set.

    For the minimization problems every x = generators @ u with u > 0 attains
    the optimum.  For the maximization problems the solution set is the union
    of the spans of the per-pair ``blocks``; ``generators`` concatenates them
    with collinear duplicates removed.
    """

    optimum: float
    generators: np.ndarray
    witness_pairs: list[tuple[int, int]] | None = None
    blocks: list[np.ndarray] = field(default_factory=list)
    combined_matrix: np.ndarray | None = None


def solve_subeigen(a, rel_eq: float = DEFAULT_REL_EQ) -> SolutionCone:
    """All positive solutions of Ax <= x, as the span of the Kleene star columns.

    The cone's ``optimum`` carries Tr(A), the feasibility certificate: positive
    solutions exist exactly when it does not exceed 1.
    """
    a = as_matrix(a)
    total = tr_sum(a)
    if total > 1.0 + rel_eq:
        raise NoPositiveSolutionError(
            f"Tr(A) = {total:.6g} exceeds 1; Ax <= x has no positive solution"
        )
    return SolutionCone(optimum=total, generators=kleene_star(a, rel_eq))


def min_pseudo_quadratic(a, rel_eq: float = DEFAULT_REL_EQ) -> SolutionCone:
    """Minimize x^- A x over positive x; minimizers are (lambda^-1 A)* u."""
    a = as_matrix(a)
    lam = spectral_radius(a)
    if lam <= 0.0:
        raise ValueError("spectral radius is zero; the objective is unbounded below")
    return SolutionCone(optimum=lam, generators=kleene_star(a / lam, rel_eq))


def min_weighted_pseudo_quadratic(
    matrices, weights, rel_eq: float = DEFAULT_REL_EQ
) -> SolutionCone:
    """Minimize max_k w_k x^- A_k x via the combined matrix B = max_k w_k A_k."""
    mats = [as_matrix(m, f"matrix {k}") for k, m in enumerate(matrices)]
    w = as_vector(weights, "weights")
    if len(mats) != w.shape[0]:
        raise ValueError(f"{len(mats)} matrices but {w.shape[0]} weights")
    if not is_positive(w):
        raise ValueError("weights must be positive")
    shape = mats[0].shape
    if shape[0] != shape[1] or any(m.shape != shape for m in mats):
        raise ValueError("matrices must all be square and of equal size")
    combined = np.maximum.reduce([wk * m for wk, m in zip(w, mats)])
    cone = min_pseudo_quadratic(combined, rel_eq)
    cone.combined_matrix = combined
    return cone


def _witness_block(a: np.ndarray, k: int, l: int) -> np.ndarray:
    # I ⊕ A_lk^- A: the identity with row k replaced by a_lj / a_lk.
    block = identity(a.shape[1])
    block[k] = np.maximum(block[k], a[l] / a[l, k])
    return block


def max_ratio(a, p, q, rel_eq: float = DEFAULT_REL_EQ) -> SolutionCone:
    """Maximize q^- x (Ax)^- p for positive A, nonzero p, positive q.

    The optimum is Delta = q^- A^- p.  Zero components of p are eliminated
    together with their rows of A before solving; reported row indices refer
    to the original matrix.  All (k, l) index pairs attaining Delta are
    returned, each with its generator block I ⊕ A_lk^- A.
    """
    a = as_matrix(a)
    p = as_vector(p, "p")
    q = as_vector(q, "q")
    if p.shape[0] != a.shape[0] or q.shape[0] != a.shape[1]:
        raise ValueError(
            f"shape mismatch: A is {a.shape}, p has length {p.shape[0]}, "
            f"q has length {q.shape[0]}"
        )
    if not is_positive(q):
        raise ValueError("q must be entrywise positive")
    if not p.any():
        raise ValueError("p must be nonzero")
    rows = np.flatnonzero(p > 0)
    sub = a[rows]
    if not is_positive(sub):
        raise ValueError("A must be entrywise positive on the rows kept by p")

    # values[l, k] = q_k^{-1} a_lk^{-1} p_l on the reduced problem
    values = (p[rows, None] / sub) / q[None, :]
    delta = float(values.max())
    pairs: list[tuple[int, int]] = []
    blocks: list[np.ndarray] = []
    for k in range(sub.shape[1]):
        for li, l in enumerate(rows):
            if scalar_eq(values[li, k], delta, rel_eq):
                pairs.append((k, int(l)))
                blocks.append(_witness_block(sub, k, li))
    generators = _concat_noncollinear(blocks, rel_eq)
    return SolutionCone(
        optimum=delta, generators=generators, witness_pairs=pairs, blocks=blocks
    )


def _concat_noncollinear(blocks: list[np.ndarray], rel_eq: float) -> np.ndarray:
    columns: list[np.ndarray] = []
    for block in blocks:
        for j in range(block.shape[1]):
            col = block[:, j]
            if not any(_collinear_nonneg(col, c, rel_eq) for c in columns):
                columns.append(col)
    return np.column_stack(columns)


def _blocks_equivalent(x: list[np.ndarray], y: list[np.ndarray], rel_eq: float) -> bool:
    if len(x) != len(y):
        return False
    matched = [False] * len(y)
    for xi in x:
        hit = False
        for j, yj in enumerate(y):
            if not matched[j] and _collinear_nonneg(xi, yj, rel_eq):
                matched[j] = True
                hit = True
                break
        if not hit:
            return False
    return True


def max_hilbert_over_span(s, rel_eq: float = DEFAULT_REL_EQ) -> SolutionCone:
    """Maximize the Hilbert ratio 1^T y y^- 1 over the tropical span of S.

    Specialization of max_ratio with q^- = 1^T S and p = 1, mapped back into
    the span: the optimum is Delta = 1^T S S^- 1, witnessed by the pairs
    (k, l) with 1^T s_k / s_lk = Delta, and each pair contributes the span
    block S (I ⊕ S_lk^- S).  Pairs whose blocks span the same set of rays are
    merged into a single representative.
    """
    s = as_matrix(s, "S")
    if not is_positive(s):
        raise ValueError("S must be entrywise positive")
    col_max = s.max(axis=0)
    values = col_max[None, :] / s
    delta = float(values.max())

    raw: list[tuple[tuple[int, int], list[np.ndarray]]] = []
    for k in range(s.shape[1]):
        for l in range(s.shape[0]):
            if scalar_eq(values[l, k], delta, rel_eq):
                mapped = trop_matmul(s, _witness_block(s, k, l))
                rays = collinear_classes(mapped, rel_eq)
                raw.append(((k, l), rays))

    # Distinct pairs can witness the same solution rays; keep one per ray set,
    # preferring the pair whose generator column has the smallest maximum.
    kept: list[tuple[tuple[int, int], list[np.ndarray]]] = []
    for (k, l), rays in sorted(
        raw, key=lambda item: (col_max[item[0][0]], item[0][0], item[0][1])
    ):
        if not any(_blocks_equivalent(rays, other, rel_eq) for _, other in kept):
            kept.append(((k, l), rays))
    kept.sort(key=lambda item: item[0])

    pairs = [pair for pair, _ in kept]
    blocks = [np.column_stack(rays) for _, rays in kept]
    generators = _concat_noncollinear(blocks, rel_eq)
    return SolutionCone(
        optimum=delta, generators=generators, witness_pairs=pairs, blocks=blocks
    )


def min_hilbert_constrained(a, p, q, rel_eq: float = DEFAULT_REL_EQ) -> SolutionCone:
    """Minimize q^- x x^- p subject to Ax <= x; requires Tr(A) <= 1.

    The optimum is delta = q^- A* p and the minimizers form the single span
    (delta^-1 p q^- ⊕ A)* u with u > 0.
    """
    a = as_matrix(a)
    p = as_vector(p, "p")
    q = as_vector(q, "q")
    n = a.shape[0]
    if a.shape[0] != a.shape[1] or p.shape[0] != n or q.shape[0] != n:
        raise ValueError("A must be square with p, q of matching length")
    if not is_positive(q):
        raise ValueError("q must be entrywise positive")
    if not p.any():
        raise ValueError("p must be nonzero")
    star = kleene_star(a, rel_eq)  # raises TrExceedsOneError when infeasible
    delta = float((star * np.outer(conjugate(q), p)).max())
    rank_one = np.outer(p, conjugate(q)) / delta
    generators = kleene_star(np.maximum(rank_one, a), rel_eq)
    return SolutionCone(optimum=delta, generators=generators)


def min_hilbert_over_kleene_cone(a, rel_eq: float = DEFAULT_REL_EQ) -> SolutionCone:
    """Minimize the Hilbert ratio over the cone x = (lambda^-1 A)* u, u > 0."""
    a = as_matrix(a)
    lam = spectral_radius(a)
    if lam <= 0.0:
        raise ValueError("spectral radius is zero; the Kleene cone is undefined")
    ones = np.ones(a.shape[0])
    return min_hilbert_constrained(a / lam, ones, ones, rel_eq)

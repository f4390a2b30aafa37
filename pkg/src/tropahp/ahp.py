"""Multi-criteria ranking pipeline over pairwise comparison matrices.

The pipeline runs three steps: derive the cone of criterion weights from the
criteria comparison matrix by log-Chebyshev approximation, combine the
per-criterion alternative matrices into a single weighted matrix and solve the
minimax approximation for the cone of score vectors, then pick out the most
and least differentiating score vectors by maximizing and minimizing the
Hilbert ratio over that cone.  When the weight cone has more than one
essential generator, the most- and least-differentiating branches each choose
their own weight vector from the cone.

A classic weighted-sum run based on Perron eigenvectors is provided for
comparison only.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .core import (
    Tolerance,
    as_matrix,
    as_vector,
    is_positive,
    kleene_star,
    scalar_eq,
    spectral_radius,
)
from .geometry import reduce_generators
from .optimize import (
    max_hilbert_over_span,
    min_hilbert_over_kleene_cone,
    min_pseudo_quadratic,
)

__all__ = [
    "DecisionProblem",
    "ValidationResult",
    "WeightCone",
    "Ranking",
    "FixedWeightSolution",
    "SolveReport",
    "validate_reciprocal",
    "consistency_index",
    "derive_weight_cone",
    "assemble_combined",
    "rank",
    "combine_rankings",
    "solve_fixed_weights",
    "solve",
    "classic_ahp_baseline",
]

STRICT = "≻"  # ≻
WEAK = "⪰"  # ⪰
TIE = "≡"  # ≡
CONFLICT = "≷"  # ≷


@dataclass(frozen=True)
class DecisionProblem:
    """Labeled criteria matrix plus one alternatives matrix per criterion."""

    criteria_labels: tuple[str, ...]
    alternative_labels: tuple[str, ...]
    criteria_matrix: np.ndarray
    alternative_matrices: tuple[np.ndarray, ...]

    @classmethod
    def create(cls, criteria_labels, alternative_labels, criteria_matrix,
               alternative_matrices) -> "DecisionProblem":
        problem = cls(
            criteria_labels=tuple(str(c) for c in criteria_labels),
            alternative_labels=tuple(str(a) for a in alternative_labels),
            criteria_matrix=as_matrix(criteria_matrix, "criteria matrix"),
            alternative_matrices=tuple(
                as_matrix(m, f"alternative matrix {k + 1}")
                for k, m in enumerate(alternative_matrices)
            ),
        )
        problem.validate()
        return problem

    @property
    def n_criteria(self) -> int:
        return len(self.criteria_labels)

    @property
    def n_alternatives(self) -> int:
        return len(self.alternative_labels)

    def validate(self, rel_eq: float = Tolerance().rel_eq) -> None:
        m, n = self.n_criteria, self.n_alternatives
        if m < 1:
            raise ValueError("at least one criterion is required")
        if n < 2:
            raise ValueError("ranking needs at least two alternatives")
        if self.criteria_matrix.shape != (m, m):
            raise ValueError(
                f"criteria matrix is {self.criteria_matrix.shape}, expected {(m, m)}"
            )
        if len(self.alternative_matrices) != m:
            raise ValueError(
                f"{len(self.alternative_matrices)} alternative matrices for {m} criteria"
            )
        result = validate_reciprocal(self.criteria_matrix, rel_eq)
        if not result.ok:
            raise ValueError(f"criteria matrix: {result.message}")
        for k, mat in enumerate(self.alternative_matrices):
            if mat.shape != (n, n):
                raise ValueError(
                    f"alternative matrix {k + 1} is {mat.shape}, expected {(n, n)}"
                )
            result = validate_reciprocal(mat, rel_eq)
            if not result.ok:
                raise ValueError(f"alternative matrix {k + 1}: {result.message}")


@dataclass(frozen=True)
class ValidationResult:
    """Outcome of a reciprocity check, with the first violating position."""

    ok: bool
    message: str = ""
    position: tuple[int, int] | None = None


def validate_reciprocal(matrix, rel_eq: float = Tolerance().rel_eq) -> ValidationResult:
    """Check that a square matrix is positive with unit diagonal and a_ij a_ji = 1."""
    m = as_matrix(matrix)
    if m.shape[0] != m.shape[1]:
        return ValidationResult(False, f"matrix is not square: {m.shape}")
    for i in range(m.shape[0]):
        for j in range(m.shape[1]):
            if m[i, j] <= 0:
                return ValidationResult(
                    False, f"entry ({i + 1}, {j + 1}) is not positive", (i, j)
                )
    for i in range(m.shape[0]):
        if not scalar_eq(m[i, i], 1.0, rel_eq):
            return ValidationResult(
                False, f"diagonal entry ({i + 1}, {i + 1}) = {m[i, i]:.6g} is not 1", (i, i)
            )
    for i in range(m.shape[0]):
        for j in range(i + 1, m.shape[1]):
            if not scalar_eq(m[i, j] * m[j, i], 1.0, rel_eq):
                return ValidationResult(
                    False,
                    f"entries ({i + 1}, {j + 1}) and ({j + 1}, {i + 1}) are not "
                    f"reciprocal: {m[i, j]:.6g} * {m[j, i]:.6g} != 1",
                    (i, j),
                )
    return ValidationResult(True)


def consistency_index(matrix, rel_eq: float = Tolerance().rel_eq) -> float:
    """Spectral radius of a reciprocal matrix; equals 1 exactly when consistent."""
    result = validate_reciprocal(matrix, rel_eq)
    if not result.ok:
        raise ValueError(result.message)
    return spectral_radius(matrix)


@dataclass(frozen=True)
class WeightCone:
    """All optimal criterion-weight vectors, as a reduced tropical span.

    ``generators`` columns are normalized to maximum entry 1;
    ``source_columns`` records which Kleene star column each one came from, so
    the star's own scaling (unit entry at the source index) can be recovered.
    """

    lambda_c: float
    generators: np.ndarray
    source_columns: tuple[int, ...]

    @property
    def essential_dim(self) -> int:
        return self.generators.shape[1]

    def canonical_generators(self) -> np.ndarray:
        """Generators rescaled back to raw Kleene star columns."""
        cols = [
            self.generators[:, j] / self.generators[src, j]
            for j, src in enumerate(self.source_columns)
        ]
        return np.column_stack(cols)


def derive_weight_cone(criteria_matrix, rel_eq: float = Tolerance().rel_eq) -> WeightCone:
    """Weight cone (lambda^-1 C)* of the criteria matrix, reduced and normalized."""
    c = as_matrix(criteria_matrix, "criteria matrix")
    result = validate_reciprocal(c, rel_eq)
    if not result.ok:
        raise ValueError(result.message)
    lam = spectral_radius(c)
    star = kleene_star(c / lam, rel_eq)
    reduced, kept = _reduce_with_indices(star, rel_eq)
    normalized = reduced / reduced.max(axis=0)[None, :]
    return WeightCone(lambda_c=lam, generators=normalized, source_columns=tuple(kept))


def _reduce_with_indices(s: np.ndarray, rel_eq: float) -> tuple[np.ndarray, list[int]]:
    reduced = reduce_generators(s, rel_eq)
    kept: list[int] = []
    for j in range(reduced.shape[1]):
        for i in range(s.shape[1]):
            if i not in kept and np.array_equal(s[:, i], reduced[:, j]):
                kept.append(i)
                break
    return reduced, kept


def assemble_combined(weights, matrices) -> np.ndarray:
    """Entrywise maximum of the weighted alternative matrices, b_ij = max_k w_k a_ij^(k)."""
    w = as_vector(weights, "weights")
    mats = [as_matrix(m, f"matrix {k + 1}") for k, m in enumerate(matrices)]
    if len(mats) != w.shape[0]:
        raise ValueError(f"{w.shape[0]} weights for {len(mats)} matrices")
    if not is_positive(w):
        raise ValueError("weights must be positive")
    return np.maximum.reduce([wk * m for wk, m in zip(w, mats)])


@dataclass(frozen=True)
class Ranking:
    """Alternatives grouped from best to worst, ties within tie_tol collapsed."""

    groups: tuple[tuple[int, ...], ...]
    vector: np.ndarray

    def position(self, index: int) -> int:
        for g, group in enumerate(self.groups):
            if index in group:
                return g
        raise KeyError(index)

    def render(self, labels) -> str:
        parts = []
        for group in self.groups:
            names = sorted(labels[i] for i in group)
            parts.append(f" {TIE} ".join(names))
        return f" {STRICT} ".join(parts)


def rank(x, tie_tol: float = Tolerance().tie_tol) -> Ranking:
    """Rank by descending score, grouping scores within tie_tol of the group leader."""
    x = as_vector(x, "x")
    if not is_positive(x):
        raise ValueError("score vector must be entrywise positive")
    scores = x / x.max()
    order = sorted(range(len(scores)), key=lambda i: (-scores[i], i))
    groups: list[list[int]] = []
    leader = None
    for i in order:
        if leader is None or scores[i] < leader * (1.0 - tie_tol):
            groups.append([i])
            leader = scores[i]
        else:
            groups[-1].append(i)
    return Ranking(groups=tuple(tuple(g) for g in groups), vector=scores)


def _pairwise_relation(rankings, a: int, b: int) -> str:
    above = below = equal = False
    for r in rankings:
        pa, pb = r.position(a), r.position(b)
        if pa < pb:
            above = True
        elif pa > pb:
            below = True
        else:
            equal = True
    if above and below:
        return CONFLICT
    if above:
        return STRICT if not equal else WEAK
    if below:
        return ("<" + STRICT) if not equal else ("<" + WEAK)
    return TIE


def combine_rankings(rankings, labels) -> str:
    """Merge rankings into one order: ≻ if strict everywhere, ⪰ if also tied somewhere.

    When two rankings disagree on the direction of a pair there is no linear
    order; the pairwise relations are listed instead.
    """
    rankings = list(rankings)
    if not rankings:
        raise ValueError("no rankings to combine")
    n = len(labels)
    relations = {}
    conflict = False
    for a in range(n):
        for b in range(a + 1, n):
            rel = _pairwise_relation(rankings, a, b)
            relations[(a, b)] = rel
            if rel == CONFLICT:
                conflict = True
    if conflict:
        parts = []
        for (a, b), rel in sorted(relations.items()):
            if rel.startswith("<"):
                parts.append(f"{labels[b]} {rel[1:]} {labels[a]}")
            elif rel == CONFLICT:
                parts.append(f"{labels[a]} {CONFLICT} {labels[b]}")
            else:
                parts.append(f"{labels[a]} {rel} {labels[b]}")
        return "; ".join(parts)

    def cmp(a: int, b: int) -> int:
        if a == b:
            return 0
        rel = relations[(a, b)] if a < b else relations[(b, a)]
        flipped = a > b
        if rel == TIE:
            return 0
        ahead = not rel.startswith("<")
        if flipped:
            ahead = not ahead
        return -1 if ahead else 1

    order = sorted(range(n), key=functools.cmp_to_key(cmp))
    groups: list[list[int]] = [[order[0]]]
    symbols: list[str] = []
    for prev, nxt in zip(order, order[1:]):
        rel = relations[(prev, nxt)] if prev < nxt else relations[(nxt, prev)]
        rel = rel.lstrip("<")
        if rel == TIE:
            groups[-1].append(nxt)
        else:
            symbols.append(rel)
            groups.append([nxt])
    parts = [f" {TIE} ".join(sorted(labels[i] for i in g)) for g in groups]
    out = parts[0]
    for sym, part in zip(symbols, parts[1:]):
        out += f" {sym} {part}"
    return out


@dataclass
class FixedWeightSolution:
    """Everything the pipeline derives for one fixed weight vector."""

    weights: np.ndarray
    combined_matrix: np.ndarray
    mu: float
    priority_generators: np.ndarray
    delta_max: float
    witness_pairs: list[tuple[int, int]]
    most_vectors: list[np.ndarray]
    most_blocks: list[np.ndarray]
    most_rankings: list[Ranking]
    delta_min: float
    least_generators: np.ndarray
    least_vectors: list[np.ndarray]
    least_rankings: list[Ranking]


def _normalized_columns(matrix: np.ndarray) -> list[np.ndarray]:
    return [matrix[:, j] / matrix[:, j].max() for j in range(matrix.shape[1])]


def solve_fixed_weights(problem: DecisionProblem, weights,
                        tol: Tolerance = Tolerance()) -> FixedWeightSolution:
    """Run the minimax approximation and both Hilbert branches at fixed weights."""
    w = as_vector(weights, "weights")
    combined = assemble_combined(w, problem.alternative_matrices)
    base = min_pseudo_quadratic(combined, tol.rel_eq)
    priority = reduce_generators(base.generators, tol.rel_eq)

    most = max_hilbert_over_span(priority, tol.rel_eq)
    most_vectors = _normalized_columns(most.generators)
    least_cone = min_hilbert_over_kleene_cone(combined, tol.rel_eq)
    least_generators = reduce_generators(least_cone.generators, tol.rel_eq)
    least_vectors = _normalized_columns(least_generators)

    return FixedWeightSolution(
        weights=w,
        combined_matrix=combined,
        mu=base.optimum,
        priority_generators=priority,
        delta_max=most.optimum,
        witness_pairs=list(most.witness_pairs or []),
        most_vectors=most_vectors,
        most_blocks=list(most.blocks),
        most_rankings=[rank(v, tol.tie_tol) for v in most_vectors],
        delta_min=least_cone.optimum,
        least_generators=least_generators,
        least_vectors=least_vectors,
        least_rankings=[rank(v, tol.tie_tol) for v in least_vectors],
    )


@dataclass
class SolveReport:
    """Full pipeline output: weight cone, both branches, orders, diagnostics."""

    problem: DecisionProblem
    tolerance: Tolerance
    weight_cone: WeightCone
    weight_search: str
    most: FixedWeightSolution
    least: FixedWeightSolution
    most_order: str
    least_order: str
    combined_order: str
    consistency: dict
    baseline: Ranking | None = None
    baseline_vector: np.ndarray | None = None


# ---------------------------------------------------------------------------
# Weight search over the cone
# ---------------------------------------------------------------------------

def _batch_tropical_matmul(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return (x[:, :, :, None] * y[:, None, :, :]).max(axis=2)


def _batch_objectives(stacked: np.ndarray, wgrid: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Hilbert bounds (delta_max, delta_min) for every candidate weight row.

    For each weight vector w the combined matrix B(w) is formed, its spectral
    radius mu and the Kleene star G = (mu^-1 B)* are computed, and the two
    objectives follow from G alone: delta_min is its largest entry and
    delta_max the largest columnwise max/min ratio.
    """
    n = stacked.shape[1]
    combined = (wgrid[:, :, None, None] * stacked[None, :, :, :]).max(axis=1)
    power = combined
    radius = power.diagonal(axis1=1, axis2=2).max(axis=1)
    for m in range(2, n + 1):
        power = _batch_tropical_matmul(power, combined)
        radius = np.maximum(radius, power.diagonal(axis1=1, axis2=2).max(axis=1) ** (1.0 / m))
    scaled = combined / radius[:, None, None]
    star = np.maximum(np.eye(n)[None, :, :], scaled)
    power = scaled
    for _ in range(n - 2):
        power = _batch_tropical_matmul(power, scaled)
        star = np.maximum(star, power)
    delta_min = star.max(axis=(1, 2))
    col_max = star.max(axis=1)
    col_min = star.min(axis=1)
    delta_max = (col_max / col_min).max(axis=1)
    return delta_max, delta_min


def _pair_sweep_candidates(g0: np.ndarray, g1: np.ndarray, matrices,
                           grid_points: int) -> list[np.ndarray]:
    """Weight candidates along the 2-generator slice w(t) = g0 ⊕ t g1.

    Breakpoints are the ratios where two weighted entries of the combined
    matrix cross, i.e. solutions of w_k(t) a_ij^(k) = w_k'(t) a_ij^(k'); the
    sweep visits every breakpoint, the geometric midpoints of adjacent ones,
    and a geometric safety grid across the whole range.
    """
    ratios: set[float] = set()
    for k in range(len(g0)):
        ratios.add(g0[k] / g1[k])
    for mat in matrices:
        flat = np.asarray(mat).ravel()
        for entry in flat:
            consts = g0 * entry
            coefs = g1 * entry
            for c in consts:
                for s in coefs:
                    ratios.add(c / s)
    ts = sorted(r for r in ratios if r > 0 and np.isfinite(r))
    candidates = list(ts)
    for lo, hi in zip(ts, ts[1:]):
        candidates.append(float(np.sqrt(lo * hi)))
    lo, hi = ts[0] / 8.0, ts[-1] * 8.0
    candidates.extend(np.geomspace(lo, hi, grid_points).tolist())
    return [np.maximum(g0, t * g1) for t in sorted(set(candidates))]


def _grid_axes(g0: np.ndarray, others: list[np.ndarray], matrices,
               grid_points: int) -> list[np.ndarray]:
    entries = np.concatenate([np.asarray(m).ravel() for m in matrices])
    spread = entries.max() / entries.min()
    axes = []
    for g in others:
        ratio = g0 / g
        axes.append(np.geomspace(ratio.min() / spread, ratio.max() * spread, grid_points))
    return axes


def _weight_grid(canonical: np.ndarray, axes: list[np.ndarray]) -> np.ndarray:
    g0 = canonical[:, 0]
    mesh = np.meshgrid(*axes, indexing="ij")
    flat = [m.ravel() for m in mesh]
    wgrid = np.broadcast_to(g0, (flat[0].size, g0.size)).copy()
    for axis_vals, g in zip(flat, canonical[:, 1:].T):
        wgrid = np.maximum(wgrid, axis_vals[:, None] * g[None, :])
    return wgrid


def _pick_candidate(values: np.ndarray, maximize: bool, rel_eq: float) -> int:
    """Earliest candidate within rel_eq of the optimum.

    Optima are typically attained on whole regions of the cone, so many
    candidates tie up to floating noise; preferring the earliest keeps the
    choice deterministic and lands on a pure generator whenever one is
    optimal.
    """
    if maximize:
        cutoff = values.max() * (1.0 - rel_eq)
        return int(np.argmax(values >= cutoff))
    cutoff = values.min() * (1.0 + rel_eq)
    return int(np.argmax(values <= cutoff))


def _search_weights(problem: DecisionProblem, cone: WeightCone, tol: Tolerance,
                    grid_points: int) -> tuple[np.ndarray, np.ndarray, str]:
    """Pick the weight vectors maximizing delta_max and minimizing delta_min."""
    canonical = cone.canonical_generators()
    dim = cone.essential_dim
    if dim == 1:
        w = canonical[:, 0]
        return w, w, "exact"

    stacked = np.stack(problem.alternative_matrices)
    pures = [canonical[:, j] for j in range(dim)]

    if dim == 2:
        candidates = pures + _pair_sweep_candidates(
            canonical[:, 0], canonical[:, 1], problem.alternative_matrices, grid_points
        )
        wgrid = np.vstack(candidates)
        delta_max, delta_min = _batch_objectives(stacked, wgrid)
        return (
            wgrid[_pick_candidate(delta_max, True, tol.rel_eq)],
            wgrid[_pick_candidate(delta_min, False, tol.rel_eq)],
            "exact",
        )

    if dim == 3:
        axes = _grid_axes(canonical[:, 0], [canonical[:, 1], canonical[:, 2]],
                          problem.alternative_matrices, grid_points)
        wgrid = np.vstack([np.vstack(pures), _weight_grid(canonical, axes)])
        delta_max, delta_min = _batch_objectives(stacked, wgrid)
        best_most = _refine_once(canonical, axes, stacked, grid_points,
                                 wgrid, delta_max, True, tol.rel_eq)
        best_least = _refine_once(canonical, axes, stacked, grid_points,
                                  wgrid, delta_min, False, tol.rel_eq)
        return best_most, best_least, "sampled"

    # Four or more essential generators: sweep every 2-generator slice.
    candidates = list(pures)
    for a in range(dim):
        for b in range(a + 1, dim):
            candidates.extend(
                _pair_sweep_candidates(canonical[:, a], canonical[:, b],
                                       problem.alternative_matrices, grid_points)
            )
    wgrid = np.vstack(candidates)
    delta_max, delta_min = _batch_objectives(stacked, wgrid)
    return (
        wgrid[_pick_candidate(delta_max, True, tol.rel_eq)],
        wgrid[_pick_candidate(delta_min, False, tol.rel_eq)],
        "sampled",
    )


def _refine_once(canonical, axes, stacked, grid_points, wgrid, objective,
                 maximize: bool, rel_eq: float) -> np.ndarray:
    pure_count = canonical.shape[1]
    idx = _pick_candidate(objective, maximize, rel_eq)
    best_val = objective[idx]
    best_w = wgrid[idx]
    if idx < pure_count:
        return best_w
    flat = idx - pure_count
    sizes = [len(a) for a in axes]
    coords = np.unravel_index(flat, sizes)
    local_axes = []
    for axis, c in zip(axes, coords):
        lo = axis[max(c - 1, 0)]
        hi = axis[min(c + 1, len(axis) - 1)]
        local_axes.append(np.geomspace(lo, hi, grid_points))
    local = _weight_grid(canonical, local_axes)
    delta_max, delta_min = _batch_objectives(stacked, local)
    values = delta_max if maximize else delta_min
    j = _pick_candidate(values, maximize, rel_eq)
    improved = (values[j] > best_val * (1.0 + rel_eq)) if maximize \
        else (values[j] < best_val * (1.0 - rel_eq))
    return local[j] if improved else best_w


def solve(problem: DecisionProblem, tol: Tolerance = Tolerance(),
          grid_points: int = 200, baseline: bool = False,
          weights=None) -> SolveReport:
    """Full pipeline: weight cone, branch weight choice, both Hilbert branches.

    Passing an explicit ``weights`` vector skips the cone search and runs both
    branches at those weights (used by what-if queries).
    """
    problem.validate(tol.rel_eq)
    cone = derive_weight_cone(problem.criteria_matrix, tol.rel_eq)
    if weights is not None:
        w_most = w_least = as_vector(weights, "weights")
        mode = "fixed"
    else:
        w_most, w_least, mode = _search_weights(problem, cone, tol, grid_points)
    most = solve_fixed_weights(problem, w_most, tol)
    if np.array_equal(w_most, w_least):
        least = most
    else:
        least = solve_fixed_weights(problem, w_least, tol)

    labels = problem.alternative_labels
    most_order = combine_rankings(most.most_rankings, labels)
    least_order = combine_rankings(least.least_rankings, labels)
    combined = combine_rankings(most.most_rankings + least.least_rankings, labels)

    consistency = {
        "criteria": float(np.log(cone.lambda_c)),
        "alternatives": [
            float(np.log(spectral_radius(mat))) for mat in problem.alternative_matrices
        ],
    }

    report = SolveReport(
        problem=problem,
        tolerance=tol,
        weight_cone=cone,
        weight_search=mode,
        most=most,
        least=least,
        most_order=most_order,
        least_order=least_order,
        combined_order=combined,
        consistency=consistency,
    )
    if baseline:
        ranking, vector = classic_ahp_baseline(problem, tol)
        report.baseline = ranking
        report.baseline_vector = vector
    return report


# ---------------------------------------------------------------------------
# Classic eigenvector baseline
# ---------------------------------------------------------------------------

def _perron_vector(matrix: np.ndarray, residual: float = 1e-12,
                   max_iter: int = 10_000) -> np.ndarray:
    x = np.full(matrix.shape[0], 1.0 / matrix.shape[0])
    for _ in range(max_iter):
        y = matrix @ x
        lam = y.sum()
        if np.abs(y - lam * x).max() <= residual * lam:
            return y / lam
        x = y / lam
    raise RuntimeError("power iteration did not converge")


def classic_ahp_baseline(problem: DecisionProblem,
                         tol: Tolerance = Tolerance()) -> tuple[Ranking, np.ndarray]:
    """Weighted sum of per-criterion Perron score vectors, for comparison only."""
    problem.validate(tol.rel_eq)
    weights = _perron_vector(problem.criteria_matrix)
    scores = np.zeros(problem.n_alternatives)
    for w, mat in zip(weights, problem.alternative_matrices):
        scores = scores + w * _perron_vector(mat)
    return rank(scores, tol.tie_tol), scores / scores.max()

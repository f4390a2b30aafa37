"""scikit-learn compatible wrapper around the solve pipeline.

The ranker follows estimator conventions (constructor stores parameters
verbatim, ``fit`` computes trailing-underscore attributes, ``get_params`` and
``clone`` work), so it can sit inside tooling that expects the sklearn API.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .ahp import DecisionProblem, solve
from .core import Tolerance

__all__ = ["TropicalAHPRanker"]


class TropicalAHPRanker(BaseEstimator):
    """Rank alternatives from pairwise comparison matrices.

    Parameters
    ----------
    rel_eq : float
        Relative tolerance for scalar equality inside the solvers.
    tie_tol : float
        Relative tolerance under which two normalized scores count as tied.
    grid_points : int
        Resolution of the weight-cone search when it is not one-dimensional.
    baseline : bool
        Also compute the classic eigenvector ranking for comparison.
    """

    def __init__(self, rel_eq: float = 1e-9, tie_tol: float = 1e-7,
                 grid_points: int = 200, baseline: bool = False):
        self.rel_eq = rel_eq
        self.tie_tol = tie_tol
        self.grid_points = grid_points
        self.baseline = baseline

    def fit(self, X, y=None):
        """Solve the decision problem in X.

        X is either a DecisionProblem or a (criteria_matrix, alternative_matrices)
        pair; in the latter case criteria and alternatives get generic labels.
        """
        problem = self._as_problem(X)
        tol = Tolerance(rel_eq=self.rel_eq, tie_tol=self.tie_tol)
        report = solve(problem, tol, grid_points=self.grid_points,
                       baseline=self.baseline)
        self.report_ = report
        self.weight_cone_ = report.weight_cone
        self.delta_max_ = report.most.delta_max
        self.delta_min_ = report.least.delta_min
        self.most_vectors_ = [np.array(v) for v in report.most.most_vectors]
        self.least_vectors_ = [np.array(v) for v in report.least.least_vectors]
        self.combined_order_ = report.combined_order
        self.baseline_order_ = (
            report.baseline.render(problem.alternative_labels)
            if report.baseline is not None else None
        )
        return self

    @staticmethod
    def _as_problem(X) -> DecisionProblem:
        if isinstance(X, DecisionProblem):
            return X
        try:
            criteria_matrix, alternative_matrices = X
        except (TypeError, ValueError) as exc:
            raise TypeError(
                "X must be a DecisionProblem or a "
                "(criteria_matrix, alternative_matrices) pair"
            ) from exc
        m = len(alternative_matrices)
        n = len(np.asarray(alternative_matrices[0]))
        return DecisionProblem.create(
            [f"criterion {k + 1}" for k in range(m)],
            [f"alternative {i + 1}" for i in range(n)],
            criteria_matrix,
            alternative_matrices,
        )

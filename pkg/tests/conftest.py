import itertools
from pathlib import Path

import numpy as np
import pytest

from tropahp import load_matrix, load_problem

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

LAMBDA_VAC = 5.0 ** 0.75
MU_VAC = 2.0 * 5.0 ** 0.625 * 7.0 ** 0.5
LAMBDA_SCH = 3.0 ** 0.5 * 5.0 ** 0.25


@pytest.fixture(scope="session")
def vacation_problem():
    return load_problem(FIXTURES / "vacation.json")


@pytest.fixture(scope="session")
def school_problem():
    return load_problem(FIXTURES / "school.json")


@pytest.fixture(scope="session")
def c_vacation():
    return load_matrix(FIXTURES / "c_vacation.json")


@pytest.fixture(scope="session")
def c_school():
    return load_matrix(FIXTURES / "c_school.json")


@pytest.fixture(scope="session")
def a_ex1():
    return load_matrix(FIXTURES / "a_ex1.json")


@pytest.fixture(scope="session")
def a_ex2():
    return load_matrix(FIXTURES / "a_ex2.json")


def vacation_combined_matrix():
    lam = LAMBDA_VAC
    return np.array([
        [lam, 7 * lam**2 / 5, 7 * lam**2 / 5, 9],
        [25 / lam, lam, 6, 3 * lam],
        [4 * lam, 2 * lam, lam, 3 * lam],
        [3 * lam, 7 * lam**2 / 5, 7 * lam**2 / 5, lam],
    ])


def vacation_priority_span():
    lam, mu = LAMBDA_VAC, MU_VAC
    return np.array([
        [1, mu / (4 * lam), 3 / 4],
        [3 * lam / mu, 1, 3 * lam / mu],
        [4 * lam / mu, 1, 3 * lam / mu],
        [1, mu / (4 * lam), 1],
    ])


def random_positive_matrix(rng, n, low=0.2, high=5.0):
    return np.exp(rng.uniform(np.log(low), np.log(high), size=(n, n)))


def random_reciprocal_matrix(rng, n, spread=9.0):
    m = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            v = np.exp(rng.uniform(-np.log(spread), np.log(spread)))
            m[i, j] = v
            m[j, i] = 1.0 / v
    return m


def brute_force_cycle_mean(a):
    """Max geometric mean over all index tuples (i_1 .. i_k), k = 1..n."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    best = 0.0
    for k in range(1, n + 1):
        for cycle in itertools.product(range(n), repeat=k):
            weight = 1.0
            for s in range(k):
                weight *= a[cycle[s], cycle[(s + 1) % k]]
            best = max(best, weight ** (1.0 / k))
    return best


def floyd_warshall_closure(a):
    """All-pairs best-path closure of I ⊕ A, an independent Kleene star oracle."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    d = np.maximum(np.eye(n), a)
    for k in range(n):
        d = np.maximum(d, np.outer(d[:, k], d[k, :]))
    return d

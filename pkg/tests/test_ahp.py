import numpy as np
import pytest

from tropahp import (
    DecisionProblem,
    assemble_combined,
    classic_ahp_baseline,
    combine_rankings,
    consistency_index,
    derive_weight_cone,
    hilbert_seminorm,
    quad_form,
    rank,
    solve,
    solve_fixed_weights,
    spectral_radius,
    trop_matmul,
    validate_reciprocal,
)

from conftest import (
    LAMBDA_SCH,
    LAMBDA_VAC,
    MU_VAC,
    random_reciprocal_matrix,
    vacation_combined_matrix,
)


def consistent_matrix(x):
    x = np.asarray(x, dtype=float)
    return np.outer(x, 1.0 / x)


def make_problem(c, mats, crit=None, alts=None):
    m, n = len(mats), len(np.asarray(mats[0]))
    return DecisionProblem.create(
        crit or [f"c{k}" for k in range(m)],
        alts or [chr(ord("A") + i) for i in range(n)],
        c,
        mats,
    )


# ---------------------------------------------------------------------------
# validation and consistency
# ---------------------------------------------------------------------------

def test_validate_reciprocal(c_vacation):
    assert validate_reciprocal(c_vacation).ok
    bad = validate_reciprocal(np.array([[1.0, 2.0], [3.0, 1.0]]))
    assert not bad.ok
    assert bad.position == (0, 1)
    assert "2" in bad.message and "3" in bad.message


def test_validate_reciprocal_identity_and_positivity():
    assert validate_reciprocal(np.ones((4, 4))).ok  # all-ones is trivially consistent
    zeroed = np.ones((3, 3))
    zeroed[0, 2] = 0.0
    assert not validate_reciprocal(zeroed).ok


def test_validate_reciprocal_diagonal():
    m = np.array([[2.0, 1.0], [1.0, 1.0]])
    result = validate_reciprocal(m)
    assert not result.ok and result.position == (0, 0)


def test_consistency_index(c_vacation, c_school):
    rng = np.random.default_rng(40)
    x = np.exp(rng.uniform(-1, 1, size=5))
    assert consistency_index(consistent_matrix(x)) == pytest.approx(1.0, rel=1e-12)
    assert consistency_index(c_vacation) == pytest.approx(LAMBDA_VAC, rel=1e-12)
    assert consistency_index(c_school) == pytest.approx(LAMBDA_SCH, rel=1e-12)
    with pytest.raises(ValueError):
        consistency_index(np.array([[1.0, 2.0], [3.0, 1.0]]))


# ---------------------------------------------------------------------------
# weight cone
# ---------------------------------------------------------------------------

def test_derive_weight_cone_vacation(c_vacation):
    cone = derive_weight_cone(c_vacation)
    assert cone.lambda_c == pytest.approx(LAMBDA_VAC, rel=1e-12)
    # the star has two essential columns: the self-loop at the last criterion
    # breaks the column collinearity of the cycle pattern
    assert cone.essential_dim == 2
    for j in range(cone.essential_dim):
        g = cone.generators[:, j]
        assert g.max() == pytest.approx(1.0, rel=1e-12)
        assert quad_form(c_vacation, g) == pytest.approx(cone.lambda_c, rel=1e-9)
    raw = cone.canonical_generators()[:, 0]
    lam = LAMBDA_VAC
    assert np.allclose(raw, [1, 5 / lam, lam**2 / 5, lam, 3 / lam], rtol=1e-12)


def test_derive_weight_cone_school(c_school):
    cone = derive_weight_cone(c_school)
    assert cone.essential_dim == 3
    for j in range(3):
        assert quad_form(c_school, cone.generators[:, j]) == pytest.approx(
            cone.lambda_c, rel=1e-9
        )


def test_derive_weight_cone_consistent():
    rng = np.random.default_rng(41)
    x = np.exp(rng.uniform(-1, 1, size=4))
    cone = derive_weight_cone(consistent_matrix(x))
    assert cone.essential_dim == 1
    ratio = cone.generators[:, 0] / x
    assert ratio.max() == pytest.approx(ratio.min(), rel=1e-9)


# ---------------------------------------------------------------------------
# combined matrix
# ---------------------------------------------------------------------------

def test_assemble_combined_vacation(vacation_problem):
    lam = LAMBDA_VAC
    w = np.array([1.0, 5 / lam, lam**2 / 5, lam, 3 / lam])
    combined = assemble_combined(w, vacation_problem.alternative_matrices)
    assert np.allclose(combined, vacation_combined_matrix(), rtol=1e-12)


def test_assemble_combined_single():
    rng = np.random.default_rng(42)
    a = random_reciprocal_matrix(rng, 3)
    assert np.array_equal(assemble_combined([1.0], [a]), a)


def test_assemble_combined_school(school_problem):
    lam = LAMBDA_SCH
    w = np.array([lam, 3 / lam, 3 / 7, 1.0, lam**2 / 3, 3 / lam])
    combined = assemble_combined(w, school_problem.alternative_matrices)
    expected = np.array([[lam, 9, 7], [3 * lam, lam, 3 * lam], [2 * lam, 5, lam]])
    assert np.allclose(combined, expected, rtol=1e-12)


def test_assemble_combined_length_mismatch():
    with pytest.raises(ValueError):
        assemble_combined([1.0, 2.0], [np.ones((2, 2))])


# ---------------------------------------------------------------------------
# ranking
# ---------------------------------------------------------------------------

def test_rank_vacation_tie_groups():
    ranking = rank(np.array([1.0, 0.9244, 0.9244, 1.0]))
    assert ranking.groups == ((0, 3), (1, 2))
    assert ranking.render(("S", "Q", "D", "C")) == "C ≡ S ≻ D ≡ Q"


def test_rank_constant_vector():
    assert rank(np.ones(4)).groups == ((0, 1, 2, 3),)


def test_rank_school_tie():
    ranking = rank(np.array([1.0, 0.9292, 1.0]))
    assert ranking.groups == ((0, 2), (1,))
    assert ranking.render(("A", "B", "C")) == "A ≡ C ≻ B"


def test_rank_scale_invariance():
    rng = np.random.default_rng(43)
    x = np.exp(rng.uniform(-1, 1, size=5))
    assert rank(x).groups == rank(7.3 * x).groups


def test_combine_rankings_identical():
    r = rank(np.array([1.0, 0.5, 0.25]))
    labels = ("A", "B", "C")
    assert combine_rankings([r, r], labels) == r.render(labels)


def test_combine_rankings_vacation():
    labels = ("S", "Q", "D", "C")
    rankings = [
        rank(np.array([1.0, 0.6933, 0.9244, 1.0])),
        rank(np.array([0.75, 0.6933, 0.6933, 1.0])),
        rank(np.array([1.0, 0.9244, 0.9244, 1.0])),
    ]
    assert combine_rankings(rankings, labels) == "C ⪰ S ≻ D ⪰ Q"


def test_combine_rankings_school_least():
    labels = ("A", "B", "C")
    rankings = [
        rank(np.array([1.0, 0.9292, 0.9292])),
        rank(np.array([1.0, 0.9292, 1.0])),
    ]
    assert combine_rankings(rankings, labels) == "A ⪰ C ⪰ B"


def test_combine_rankings_conflict_lists_pairs():
    labels = ("A", "B")
    rankings = [rank(np.array([1.0, 0.5])), rank(np.array([0.5, 1.0]))]
    out = combine_rankings(rankings, labels)
    assert "≷" in out


# ---------------------------------------------------------------------------
# pipeline
# ---------------------------------------------------------------------------

def test_solve_fixed_weights_vacation(vacation_problem):
    lam = LAMBDA_VAC
    w = np.array([1.0, 5 / lam, lam**2 / 5, lam, 3 / lam])
    fx = solve_fixed_weights(vacation_problem, w)
    assert fx.mu == pytest.approx(MU_VAC, rel=1e-12)
    assert fx.delta_max == pytest.approx(MU_VAC / (3 * lam), rel=1e-12)
    assert fx.delta_min == pytest.approx(MU_VAC / (4 * lam), rel=1e-12)
    most = sorted(tuple(np.round(v, 4)) for v in fx.most_vectors)
    assert most == [
        (0.75, 0.6933, 0.6933, 1.0),
        (1.0, 0.6933, 0.9244, 1.0),
    ]
    least = [tuple(np.round(v, 4)) for v in fx.least_vectors]
    assert least == [(1.0, 0.9244, 0.9244, 1.0)]


def test_solve_fixed_weights_school_high_music_region(school_problem):
    cone = derive_weight_cone(school_problem.criteria_matrix)
    w = cone.canonical_generators()[:, 2]  # generator with the large last weight
    fx = solve_fixed_weights(school_problem, w)
    assert fx.delta_max == pytest.approx((9 * LAMBDA_SCH / 8) ** 0.5, rel=1e-9)
    assert [tuple(np.round(v, 4)) for v in fx.most_vectors] == [(1.0, 0.8787, 0.5858)]


def test_solve_fixed_weights_consistent_identical_matrices():
    rng = np.random.default_rng(44)
    x = np.exp(rng.uniform(-1, 1, size=3))
    a = consistent_matrix(x)
    problem = make_problem(consistent_matrix([2.0, 1.0]), [a, a])
    fx = solve_fixed_weights(problem, np.array([1.0, 1.0]))
    target = hilbert_seminorm(x)
    assert fx.delta_max == pytest.approx(target, rel=1e-9)
    assert fx.delta_min == pytest.approx(target, rel=1e-9)
    assert fx.priority_generators.shape[1] == 1


def test_solve_vacation_report(vacation_problem):
    report = solve(vacation_problem)
    assert report.weight_search == "exact"
    assert report.most.mu == pytest.approx(MU_VAC, rel=1e-9)
    assert report.combined_order == "C ⪰ S ≻ D ⪰ Q"


def test_solve_school_report(school_problem):
    report = solve(school_problem)
    assert report.weight_search == "sampled"
    assert report.most_order == "A ≻ B ≻ C"
    assert report.least_order == "A ⪰ C ⪰ B"
    assert report.most.delta_max == pytest.approx((9 * LAMBDA_SCH / 8) ** 0.5, rel=1e-9)
    assert report.least.delta_min == pytest.approx(3 ** 0.25 * 5 ** -0.125, rel=1e-9)


def test_solve_single_criterion_matches_fixed():
    rng = np.random.default_rng(45)
    a = random_reciprocal_matrix(rng, 4)
    problem = make_problem(np.ones((1, 1)), [a])
    report = solve(problem)
    fx = solve_fixed_weights(problem, np.ones(1))
    assert report.most.delta_max == fx.delta_max
    assert report.least.delta_min == fx.delta_min
    assert report.weight_search == "exact"


def test_solve_explicit_weights_flagged_fixed(vacation_problem):
    w = np.array([1.0, 1.0, 1.0, 1.0, 1.0])
    report = solve(vacation_problem, weights=w)
    assert report.weight_search == "fixed"
    assert np.array_equal(report.most.weights, w)


def test_solve_rejects_tiny_problems():
    with pytest.raises(ValueError):
        make_problem(np.ones((1, 1)), [np.ones((1, 1))])


def test_scale_invariance_of_rankings(vacation_problem):
    # a scaled comparison matrix is no longer reciprocal, so the invariance is
    # checked below validation, at the fixed-weight pipeline level
    lam = LAMBDA_VAC
    w = np.array([1.0, 5 / lam, lam**2 / 5, lam, 3 / lam])
    scaled_problem = DecisionProblem(
        vacation_problem.criteria_labels,
        vacation_problem.alternative_labels,
        vacation_problem.criteria_matrix,
        tuple(
            7.0 * m if k == 2 else m
            for k, m in enumerate(vacation_problem.alternative_matrices)
        ),
    )
    base = solve_fixed_weights(vacation_problem, w)
    scaled = solve_fixed_weights(scaled_problem, w)
    assert [r.groups for r in base.most_rankings] == [
        r.groups for r in scaled.most_rankings
    ]
    assert [r.groups for r in base.least_rankings] == [
        r.groups for r in scaled.least_rankings
    ]
    assert scaled.mu >= base.mu  # the optimum itself may rescale


def test_membership_of_reported_vectors(vacation_problem):
    report = solve(vacation_problem)
    for branch in (report.most, report.least):
        scaled = branch.combined_matrix / branch.mu
        vectors = (
            branch.most_vectors if branch is report.most else branch.least_vectors
        )
        for x in vectors:
            assert np.all(trop_matmul(scaled, x) <= x * (1 + 1e-9))


def test_hilbert_values_of_reported_vectors(vacation_problem):
    report = solve(vacation_problem)
    for x in report.most.most_vectors:
        assert hilbert_seminorm(x) == pytest.approx(report.most.delta_max, rel=1e-9)
    for x in report.least.least_vectors:
        assert hilbert_seminorm(x) == pytest.approx(report.least.delta_min, rel=1e-9)
    rng = np.random.default_rng(46)
    span = report.most.priority_generators
    for _ in range(100):
        u = np.exp(rng.uniform(-2, 2, size=span.shape[1]))
        value = hilbert_seminorm(trop_matmul(span, u))
        assert report.least.delta_min * (1 - 1e-9) <= value
        assert value <= report.most.delta_max * (1 + 1e-9)


def test_weighted_objective_grid_oracle():
    # two-criterion, three-alternative problems have a rank-one weight cone,
    # so mu must equal the brute-force minimum of the weighted objective
    rng = np.random.default_rng(47)
    grid = np.geomspace(0.01, 100.0, 160)
    log_step = np.log(grid[1] / grid[0])
    for _ in range(3):
        c = random_reciprocal_matrix(rng, 2)
        mats = [random_reciprocal_matrix(rng, 3) for _ in range(2)]
        problem = make_problem(c, mats)
        cone = derive_weight_cone(c)
        assert cone.essential_dim == 1
        w = cone.canonical_generators()[:, 0]
        combined = assemble_combined(w, mats)
        mu = spectral_radius(combined)
        xs = np.stack(np.meshgrid(grid, grid, [1.0], indexing="ij"), axis=-1).reshape(-1, 3)
        ratios = xs[:, None, :] / xs[:, :, None]
        vals = (combined[None, :, :] * ratios).max(axis=(1, 2))
        assert abs(np.log(vals.min()) - np.log(mu)) <= 2 * log_step


def test_solve_with_four_dimensional_weight_cone():
    # this 6-criteria matrix has four essential weight generators, so the
    # branch search runs on sampled 2-generator slices
    c = np.array([
        [1, 7, 1 / 7, 5, 1 / 7, 1],
        [1 / 7, 1, 5, 1 / 3, 1 / 3, 1 / 3],
        [7, 1 / 5, 1, 3, 1 / 5, 9],
        [1 / 5, 3, 1 / 3, 1, 1 / 2, 1],
        [7, 3, 5, 2, 1, 1],
        [1, 3, 1 / 9, 1, 1, 1],
    ])
    cone = derive_weight_cone(c)
    assert cone.essential_dim == 4

    rng = np.random.default_rng(49)
    mats = [random_reciprocal_matrix(rng, 3) for _ in range(6)]
    problem = make_problem(c, mats)
    report = solve(problem)
    assert report.weight_search == "sampled"

    # each branch must do at least as well as every pure generator
    for j in range(cone.essential_dim):
        w = cone.canonical_generators()[:, j]
        fx = solve_fixed_weights(problem, w)
        assert report.most.delta_max >= fx.delta_max * (1 - 1e-9)
        assert report.least.delta_min <= fx.delta_min * (1 + 1e-9)
    for x in report.most.most_vectors:
        assert hilbert_seminorm(x) == pytest.approx(report.most.delta_max, rel=1e-9)
    for x in report.least.least_vectors:
        assert hilbert_seminorm(x) == pytest.approx(report.least.delta_min, rel=1e-9)


# ---------------------------------------------------------------------------
# classic baseline
# ---------------------------------------------------------------------------

def test_baseline_vacation(vacation_problem):
    ranking, _ = classic_ahp_baseline(vacation_problem)
    assert ranking.render(vacation_problem.alternative_labels) == \
        "S ≻ D ≻ C ≻ Q"


def test_baseline_school(school_problem):
    ranking, _ = classic_ahp_baseline(school_problem)
    assert ranking.render(school_problem.alternative_labels) == "B ≻ A ≻ C"


def test_baseline_agrees_on_consistent_identical():
    rng = np.random.default_rng(48)
    x = np.exp(rng.uniform(-1, 1, size=4))
    a = consistent_matrix(x)
    problem = make_problem(consistent_matrix([1.0, 2.0]), [a, a])
    baseline, _ = classic_ahp_baseline(problem)
    report = solve(problem)
    assert baseline.groups == report.most.most_rankings[0].groups

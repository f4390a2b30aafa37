import numpy as np
import pytest

from tropahp import (
    hilbert_seminorm,
    is_collinear,
    kleene_star,
    min_hilbert_over_kleene_cone,
    reduce_generators,
    section_at_unit_last_coord,
    trop_matmul,
    tropical_segment,
)

from conftest import (
    LAMBDA_SCH,
    LAMBDA_VAC,
    MU_VAC,
    vacation_combined_matrix,
    vacation_priority_span,
)


def test_hilbert_seminorm_examples():
    assert hilbert_seminorm(np.array([2.0, 2.0, 2.0])) == 1.0
    x2 = np.array([1.0, 4 * LAMBDA_VAC / MU_VAC, 4 * LAMBDA_VAC / MU_VAC, 1.0])
    assert hilbert_seminorm(x2) == pytest.approx(MU_VAC / (4 * LAMBDA_VAC), rel=1e-12)
    assert hilbert_seminorm(x2) == pytest.approx(1.0818, rel=1e-4)
    rng = np.random.default_rng(30)
    x = np.exp(rng.uniform(-1, 1, size=5))
    assert hilbert_seminorm(0.01 * x) == pytest.approx(hilbert_seminorm(x), rel=1e-12)
    with pytest.raises(ValueError):
        hilbert_seminorm(np.array([1.0, 0.0]))


def test_hilbert_seminorm_at_least_one():
    rng = np.random.default_rng(31)
    for _ in range(50):
        x = np.exp(rng.uniform(-2, 2, size=4))
        value = hilbert_seminorm(x)
        assert value >= 1.0
        if value == pytest.approx(1.0, rel=1e-9):
            assert x.max() == pytest.approx(x.min(), rel=1e-9)


def test_is_collinear_examples():
    assert is_collinear(np.array([1.0, 2.0]), np.array([3.0, 6.0]))
    assert not is_collinear(np.array([1.0, 2.0]), np.array([2.0, 1.0]))
    span = kleene_star(vacation_combined_matrix() / MU_VAC)
    assert is_collinear(span[:, 0], span[:, 2])
    with pytest.raises(ValueError):
        is_collinear(np.ones(2), np.ones(3))


def test_is_collinear_equivalence_relation():
    rng = np.random.default_rng(32)
    tol = 1e-14
    vectors = [np.exp(rng.uniform(-1, 1, size=4)) for _ in range(6)]
    vectors += [2.5 * vectors[0], 0.3 * vectors[1]]
    for x in vectors:
        assert is_collinear(x, x, tol)
        for y in vectors:
            assert is_collinear(x, y, tol) == is_collinear(y, x, tol)
            for z in vectors:
                if is_collinear(x, y, tol) and is_collinear(y, z, tol):
                    assert is_collinear(x, z, 10 * tol)


def test_reduce_generators_vacation_span():
    span = kleene_star(vacation_combined_matrix() / MU_VAC)
    reduced = reduce_generators(span)
    assert reduced.shape == (4, 3)
    assert np.allclose(reduced, vacation_priority_span(), rtol=1e-12)


def test_reduce_generators_school_weight_cone(c_school):
    star = kleene_star(c_school / LAMBDA_SCH)
    reduced = reduce_generators(star)
    assert reduced.shape[1] == 3


def test_reduce_generators_drops_dependent_column():
    rng = np.random.default_rng(33)
    base = np.exp(rng.uniform(-1, 1, size=(4, 2)))
    dependent = np.maximum(0.8 * base[:, 0], 1.3 * base[:, 1])
    s = np.column_stack([base[:, 0], dependent, base[:, 1]])
    reduced = reduce_generators(s)
    assert reduced.shape[1] == 2
    # span is preserved: points of the original span stay reproducible
    for _ in range(100):
        u = np.exp(rng.uniform(-1, 1, size=3))
        x = trop_matmul(s, u)
        coeff = (x[:, None] / reduced).min(axis=0)
        assert np.allclose(trop_matmul(reduced, coeff), x, rtol=1e-9)


def test_reduce_generators_rejects_nonpositive():
    with pytest.raises(ValueError):
        reduce_generators(np.array([[1.0, 0.0], [1.0, 1.0]]))


def test_tropical_segment_straight_and_bent():
    straight = tropical_segment((0.75, 1.0), (1.0, 4 / 3))
    assert straight == [(0.75, 1.0), (1.0, 4 / 3)]
    bent = tropical_segment((2.0, 0.5), (0.5, 2.0))
    assert bent == [(2.0, 0.5), (2.0, 2.0), (0.5, 2.0)]


def test_section_example1_minimum(a_ex1):
    cone = min_hilbert_over_kleene_cone(a_ex1)
    reduced = reduce_generators(cone.generators)
    plot = section_at_unit_last_coord(reduced)
    assert sorted(plot.points) == [
        (0.75, 1.0),
        (1.0, pytest.approx(4 / 3, rel=1e-12)),
    ]
    assert len(plot.segments) == 1


def test_section_example2_minimum(a_ex2):
    cone = min_hilbert_over_kleene_cone(a_ex2)
    reduced = reduce_generators(cone.generators)
    plot = section_at_unit_last_coord(reduced)
    assert plot.points == [(1.0, 1.0)]
    assert plot.segments == []


def test_section_single_generator():
    plot = section_at_unit_last_coord(np.array([[2.0], [0.7], [1.0]]))
    assert plot.points == [(2.0, 0.7)]
    assert plot.labels == ["g1"]


def test_section_requires_three_rows():
    with pytest.raises(ValueError):
        section_at_unit_last_coord(np.ones((4, 2)))


def test_section_records_breakpoints():
    s = np.array([[2.0, 0.5], [0.5, 2.0], [1.0, 1.0]])
    plot = section_at_unit_last_coord(s)
    assert (2.0, 2.0) in plot.points
    assert len(plot.segments) == 2


def test_reduce_generators_random_span_roundtrip():
    rng = np.random.default_rng(34)
    for _ in range(20):
        s = np.exp(rng.uniform(-1, 1, size=(4, 6)))
        reduced = reduce_generators(s)
        for _ in range(5):
            u = np.exp(rng.uniform(-1, 1, size=reduced.shape[1]))
            x = trop_matmul(reduced, u)
            coeff = (x[:, None] / s).min(axis=0)
            assert np.allclose(trop_matmul(s, coeff), x, rtol=1e-9)

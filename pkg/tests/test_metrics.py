from fractions import Fraction

import pytest

from src.analyzers.arrangement import sign_vector
from src.analyzers.metrics import (
    add_elementary_splits,
    all_splits,
    compose,
    elementary_split,
    free_sum,
    inverse,
    is_strict,
    path_metric,
    permute,
    random_rational_metric,
    random_strict_metric,
    shift,
    split_metric,
    strictify,
    validate,
)
from src.errors import InvalidMetricError, MetricParseError, ZeroDistanceError
from src.models.metric import Metric, MetricClass, Split, pair_index, pairs


def test_pair_index_follows_lexicographic_order():
    for position, (i, j) in enumerate(pairs(5)):
        assert pair_index(5, i, j) == position
        assert pair_index(5, j, i) == position


def test_pair_index_rejects_diagonal():
    with pytest.raises(ValueError):
        pair_index(4, 2, 2)


def test_from_row_infers_size():
    m = Metric.from_row(["1", "2", "3/2"])
    assert m.n == 3
    assert m[1, 3] == 2
    assert m[3, 2] == Fraction(3, 2)


def test_from_row_rejects_partial_triangle():
    with pytest.raises(MetricParseError):
        Metric.from_row([1, 2, 3, 4])


def test_from_matrix_checks_symmetry_and_diagonal():
    with pytest.raises(MetricParseError):
        Metric.from_matrix([[0, 1], [2, 0]])
    with pytest.raises(MetricParseError):
        Metric.from_matrix([[1, 1], [1, 0]])


def test_from_dict_rejects_wrong_length():
    with pytest.raises(MetricParseError):
        Metric.from_dict({"n": 4, "d": ["1", "2"]})


def test_to_dict_writes_rational_strings():
    m = Metric.from_values(3, ["1/2", 1, "3/2"])
    assert m.to_dict() == {"n": 3, "d": ["1/2", "1", "3/2"]}


def test_validate_classes():
    assert validate(Metric.constant(4)) is MetricClass.STRICT
    assert validate(path_metric(3)) is MetricClass.METRIC
    assert validate(split_metric(4, Split.of(4, {1, 2}))) is MetricClass.PSEUDOMETRIC
    assert validate(Metric.from_values(3, [1, 1, 3])) is MetricClass.NOT_PSEUDOMETRIC
    assert validate(Metric.from_values(3, [1, -1, 1])) is MetricClass.NOT_PSEUDOMETRIC


def test_split_canonical_form_and_label():
    s = Split.of(5, {3, 4})
    assert s.part_a == frozenset({1, 2, 5})
    assert s.part_b == frozenset({3, 4})
    assert s.label() == "125|34"
    assert s.separates(1, 3)
    assert not s.separates(3, 4)


def test_all_splits_count():
    for n in range(2, 7):
        assert len(list(all_splits(n))) == 2 ** (n - 1) - 1


def test_elementary_split_values():
    m = elementary_split(4, 2)
    assert m[1, 2] == 1 and m[2, 4] == 1
    assert m[1, 3] == 0 and m[3, 4] == 0


def test_path_metric():
    m = path_metric(3)
    assert m.n == 4
    assert m[1, 4] == 3
    assert m[2, 3] == 1
    with pytest.raises(ValueError):
        path_metric(0)


def test_free_sum_glues_last_point_to_first():
    m1 = Metric.from_values(3, [3, 4, 5])
    glued = free_sum(m1, path_metric(2).scaled(2))
    assert glued.n == 5
    assert glued[1, 2] == 3
    assert glued[3, 5] == 4
    assert glued[1, 5] == m1[1, 3] + 4
    assert glued[2, 4] == m1[2, 3] + 2


def test_free_sum_needs_positive_glue_distances():
    with pytest.raises(ZeroDistanceError):
        free_sum(split_metric(3, Split.of(3, {1, 3})), path_metric(1))


def test_permute_and_inverse():
    m = random_strict_metric(5, scale=10)
    sigma = (3, 1, 2, 5, 4)
    moved = permute(m, sigma)
    assert moved[sigma[0], sigma[1]] == m[1, 2]
    assert permute(moved, inverse(sigma)) == m
    assert compose(sigma, inverse(sigma)) == (1, 2, 3, 4, 5)


def test_permute_rejects_non_permutation():
    with pytest.raises(ValueError):
        permute(Metric.constant(3), (1, 1, 2))


def test_strictify_keeps_sign_vector():
    m = path_metric(3)
    strict = strictify(m)
    assert is_strict(strict)
    assert sign_vector(strict) == sign_vector(m)


def test_strictify_shifts_pseudometrics_by_one(rng):
    split = split_metric(4, Split.of(4, {1, 2}))
    assert strictify(split) == Metric.from_values(4, [1, 2, 2, 2, 2, 1])
    m = random_strict_metric(4, rng)
    assert strictify(m) is m


def test_strictify_rejects_broken_triangles():
    with pytest.raises(InvalidMetricError):
        strictify(Metric.from_values(3, [1, 1, 5]))
    with pytest.raises(InvalidMetricError):
        strictify(Metric.from_values(3, [-1, 1, 1]))


def test_elementary_splits_move_along_lineality(rng):
    m = random_strict_metric(5, rng)
    moved = add_elementary_splits(m, [1, "1/2", 3, 0, 2])
    assert sign_vector(moved) == sign_vector(m)
    assert shift(m, 2) == add_elementary_splits(m, [1] * 5)


def test_random_metrics_are_strict(rng):
    for n in range(3, 7):
        assert is_strict(random_strict_metric(n, rng))
        assert is_strict(random_rational_metric(n, rng))


def test_free_sum_with_a_path_can_be_built_one_edge_at_a_time(decomposable_pair):
    rho = decomposable_pair[0]
    step = path_metric(1).scaled(12)
    assert free_sum(rho, path_metric(2).scaled(12)) == free_sum(free_sum(rho, step), step)

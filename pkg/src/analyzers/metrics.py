"""Construction, validation and transformation of finite metrics."""
import random
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence, Tuple

from ..errors import InvalidMetricError, ZeroDistanceError
from ..models.metric import Metric, MetricClass, Split, pairs
from .exactnum import RatLike, to_rat

Permutation = Tuple[int, ...]


def validate(m: Metric) -> MetricClass:
    """
    Classify a symmetric function with zero diagonal.

    Args:
        m: Metric to classify

    Returns:
        NOT_PSEUDOMETRIC if a value is negative or a triangle inequality fails,
        PSEUDOMETRIC if valid with some zero distance, METRIC if all distances
        are positive, STRICT if moreover every triangle inequality is strict
    """
    if any(v < 0 for v in m.values):
        return MetricClass.NOT_PSEUDOMETRIC
    strict = True
    for i, j, k in combinations(range(1, m.n + 1), 3):
        a, b, c = m[i, j], m[j, k], m[i, k]
        # each side against the other two
        for side, rest in ((c, a + b), (a, b + c), (b, a + c)):
            if side > rest:
                return MetricClass.NOT_PSEUDOMETRIC
            if side == rest:
                strict = False
    if any(v == 0 for v in m.values):
        return MetricClass.PSEUDOMETRIC
    return MetricClass.STRICT if strict else MetricClass.METRIC


def is_metric(m: Metric) -> bool:
    return validate(m) in (MetricClass.METRIC, MetricClass.STRICT)


def is_strict(m: Metric) -> bool:
    return validate(m) is MetricClass.STRICT


def split_metric(n: int, s: Split) -> Metric:
    """The split pseudometric: 0 within parts, 1 across."""
    return Metric(n, tuple(Fraction(int(s.separates(i, j))) for i, j in pairs(n)))


def elementary_split(n: int, i: int) -> Metric:
    """The split separating point i from the rest."""
    return split_metric(n, Split.of(n, {i}))


def all_splits(n: int) -> Iterable[Split]:
    """All 2^(n-1) - 1 splits of [n], ordered by size of the part containing 1."""
    others = range(2, n + 1)
    for size in range(0, n - 1):
        for extra in combinations(others, size):
            yield Split(n=n, part_a=frozenset((1,) + extra))


def path_metric(k: int) -> Metric:
    """The metric |i - j| on k + 1 points along a path."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return Metric(k + 1, tuple(Fraction(j - i) for i, j in pairs(k + 1)))


def free_sum(m1: Metric, m2: Metric) -> Metric:
    """
    Glue two metrics at a point.

    The last point n of m1 is identified with the first point of m2, whose
    points are renumbered n, n+1, ..., n+k.

    Args:
        m1: metric on [n]
        m2: metric on k + 1 points

    Returns:
        Metric on n + k points with cross distances m1(i, n) + m2(n, j)
    """
    n, k = m1.n, m2.n - 1
    if any(m1[i, n] == 0 for i in range(1, n)) or any(m2[1, j] == 0 for j in range(2, k + 2)):
        raise ZeroDistanceError("free sum needs positive distances to the glue point")

    def distance(i: int, j: int) -> Fraction:
        if j <= n:
            return m1[i, j]
        if i >= n:
            return m2[i - n + 1, j - n + 1]
        return m1[i, n] + m2[1, j - n + 1]

    return Metric(n + k, tuple(distance(i, j) for i, j in pairs(n + k)))


def inverse(sigma: Permutation) -> Permutation:
    result = [0] * len(sigma)
    for position, image in enumerate(sigma, start=1):
        result[image - 1] = position
    return tuple(result)


def compose(tau: Permutation, sigma: Permutation) -> Permutation:
    """tau after sigma, as image tuples on 1..n."""
    return tuple(tau[s - 1] for s in sigma)


def permute(m: Metric, sigma: Permutation) -> Metric:
    """
    Relabel a metric: d'(i, j) = d(sigma^-1(i), sigma^-1(j)).

    Args:
        m: Metric on [n]
        sigma: permutation as the tuple (sigma(1), ..., sigma(n))
    """
    if sorted(sigma) != list(range(1, m.n + 1)):
        raise ValueError(f"{sigma} is not a permutation of [{m.n}]")
    back = inverse(sigma)
    return Metric(m.n, tuple(m[back[i - 1], back[j - 1]] for i, j in pairs(m.n)))


def symmetric_group(n: int) -> Iterable[Permutation]:
    return permutations(range(1, n + 1))


def add_elementary_splits(m: Metric, weights: Sequence[RatLike]) -> Metric:
    """Move a metric along the lineality space by sum of weights[i] times the i-th elementary split."""
    if len(weights) != m.n:
        raise ValueError(f"need {m.n} weights")
    w = [to_rat(x) for x in weights]
    return Metric(m.n, tuple(v + w[i - 1] + w[j - 1] for (i, j), v in m.items()))


def shift(m: Metric, c: RatLike) -> Metric:
    """Add c to every off-diagonal entry."""
    step = to_rat(c)
    return Metric(m.n, tuple(v + step for v in m.values))


def strictify(m: Metric) -> Metric:
    """
    Smallest integer shift that makes a pseudometric strict.

    Adding c to every distance is a move along the lineality space (half the
    sum of all elementary splits), so the sign vector does not change. Any
    c >= 1 already makes every triangle strict.

    Raises:
        InvalidMetricError: if m is not a pseudometric
    """
    validity = validate(m)
    if validity is MetricClass.NOT_PSEUDOMETRIC:
        raise InvalidMetricError("only a pseudometric can be shifted to a strict metric")
    if validity is MetricClass.STRICT:
        return m
    return shift(m, 1)


def random_strict_metric(n: int, rng: Optional[random.Random] = None, scale: int = 20) -> Metric:
    """Integer metric with values in [scale, 2*scale - 1]; every triangle is strict."""
    rng = rng or random.Random()
    return Metric.from_values(n, [rng.randrange(scale, 2 * scale) for _ in pairs(n)])


def random_rational_metric(n: int, rng: Optional[random.Random] = None, scale: int = 20) -> Metric:
    """Rational strict metric with values in [scale, 2*scale) and small denominators."""
    rng = rng or random.Random()
    values = [scale + Fraction(rng.randrange(0, 6 * scale), 6) for _ in pairs(n)]
    return Metric(n, tuple(values))

"""Metric classes: tree-like, Kalmanson, split decomposition and the six-point condition."""
import logging
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, List, Optional, Tuple

from ..errors import InternalDisagreementError, TooLargeError
from ..models.decomposition import ClassReport, SplitDecomposition
from ..models.metric import Metric, Split
from .metrics import all_splits, split_metric

logger = logging.getLogger(__name__)

MAX_KALMANSON_POINTS = 8


def isolation_index(m: Metric, a_side: Iterable[int], b_side: Iterable[int]) -> Fraction:
    """
    Isolation index of two point sets.

    Half the minimum, over a, a' in A and b, b' in B (repeats allowed), of
    max{a'b + b'a, a'b' + ab, aa' + bb'} - (aa' + bb').

    Args:
        m: symmetric function with zero diagonal
        a_side: nonempty set A
        b_side: nonempty set B

    Returns:
        The index; 0 when A and B overlap
    """
    a_points = sorted(set(a_side))
    b_points = sorted(set(b_side))
    if not a_points or not b_points:
        raise ValueError("both sides must be nonempty")
    if set(a_points) & set(b_points):
        return Fraction(0)
    best: Optional[Fraction] = None
    for a in a_points:
        for a2 in a_points:
            for b in b_points:
                for b2 in b_points:
                    base = m[a, a2] + m[b, b2]
                    value = max(m[a2, b] + m[b2, a], m[a2, b2] + m[a, b], base) - base
                    if best is None or value < best:
                        best = value
    return best / 2


def split_index(m: Metric, s: Split) -> Fraction:
    return isolation_index(m, s.part_a, s.part_b)


def split_decompose(m: Metric) -> SplitDecomposition:
    """
    Split decomposition of a symmetric function.

    Every split with positive isolation index is kept with that index as its
    weight; whatever remains is the residual.

    Raises:
        InternalDisagreementError: if the residual still carries a split
    """
    summands: List[Tuple[Split, Fraction]] = []
    residual = m
    for s in all_splits(m.n):
        weight = split_index(m, s)
        if weight > 0:
            summands.append((s, weight))
            residual = residual - split_metric(m.n, s).scaled(weight)
    leftover = [s.label() for s in all_splits(m.n) if split_index(residual, s) > 0]
    if leftover:
        raise InternalDisagreementError(f"residual is not split-prime: {', '.join(leftover)}")
    logger.debug("split decomposition: %d splits, residual zero: %s", len(summands), residual.is_zero())
    return SplitDecomposition(summands=tuple(summands), residual=residual)


def five_point_criterion(m: Metric) -> bool:
    """
    Decomposability test on quintuples of distinct points.

    alpha{t,u},{v,w} <= alpha{t,x},{v,w} + alpha{t,u},{v,x} for all distinct t, u, v, w, x.
    """
    for t, u, v, w, x in permutations(range(1, m.n + 1), 5):
        left = isolation_index(m, (t, u), (v, w))
        if left > isolation_index(m, (t, x), (v, w)) + isolation_index(m, (t, u), (v, x)):
            return False
    return True


def is_totally_split_decomposable(m: Metric) -> bool:
    """
    True iff the split decomposition has zero residual.

    Raises:
        InternalDisagreementError: if the five-point criterion disagrees
    """
    by_residual = split_decompose(m).is_total
    by_quintuples = five_point_criterion(m)
    if by_residual != by_quintuples:
        raise InternalDisagreementError(
            f"residual test says {by_residual}, five-point test says {by_quintuples}"
        )
    return by_residual


def _four_point(m: Metric, i: int, j: int, k: int, l: int) -> bool:
    return m[i, j] + m[k, l] <= max(m[i, k] + m[j, l], m[i, l] + m[j, k])


def is_tree_like(m: Metric) -> bool:
    """Four-point condition: of the three pair sums of each quadruple, the largest is attained twice."""
    for quad in combinations(range(1, m.n + 1), 4):
        i, j, k, l = quad
        sums = sorted([m[i, j] + m[k, l], m[i, k] + m[j, l], m[i, l] + m[j, k]])
        if sums[1] != sums[2]:
            return False
    return True


def cyclic_orders(n: int) -> Iterable[Tuple[int, ...]]:
    """Cyclic orders of [n] up to rotation and reflection: 1 first, second entry below the last."""
    if n < 3:
        yield tuple(range(1, n + 1))
        return
    for rest in permutations(range(2, n + 1)):
        if rest[0] < rest[-1]:
            yield (1,) + rest


def respects_order(m: Metric, order: Tuple[int, ...]) -> bool:
    """Kalmanson inequalities for every four positions p < q < r < s of the order."""
    for p, q, r, s in combinations(range(len(order)), 4):
        i, j, k, l = order[p], order[q], order[r], order[s]
        diagonal = m[i, k] + m[j, l]
        if m[i, j] + m[k, l] > diagonal or m[i, l] + m[j, k] > diagonal:
            return False
    return True


def is_kalmanson(m: Metric) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """
    Search for a cyclic order in which m is circular-decomposable.

    Returns:
        (True, witness order) or (False, None)

    Raises:
        TooLargeError: for more than 8 points
    """
    if m.n > MAX_KALMANSON_POINTS:
        raise TooLargeError(f"Kalmanson search is limited to {MAX_KALMANSON_POINTS} points")
    for order in cyclic_orders(m.n):
        if respects_order(m, order):
            return True, order
    return False, None


def six_point_condition(m: Metric) -> bool:
    """
    Every 6-subset has a pair i, j satisfying the four-point inequality against
    all pairs k, l of the remaining four points.
    """
    for subset in combinations(range(1, m.n + 1), 6):
        found = False
        for i, j in combinations(subset, 2):
            rest = [x for x in subset if x not in (i, j)]
            if all(_four_point(m, i, j, k, l) for k, l in combinations(rest, 2)):
                found = True
                break
        if not found:
            return False
    return True


def is_consistent(m: Metric) -> bool:
    """Totally split-decomposable and satisfying the six-point condition."""
    return is_totally_split_decomposable(m) and six_point_condition(m)


def classify(m: Metric) -> ClassReport:
    """Run every class predicate on m."""
    notes: List[str] = []
    try:
        kalmanson, order = is_kalmanson(m)
    except TooLargeError as e:
        kalmanson, order = None, None
        notes.append(str(e))
    decomposition = split_decompose(m)
    return ClassReport(
        tree_like=is_tree_like(m),
        kalmanson=kalmanson,
        kalmanson_order=order,
        totally_split_decomposable=is_totally_split_decomposable(m),
        six_point=six_point_condition(m),
        decomposition=decomposition,
        notes=notes,
    )

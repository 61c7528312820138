"""Regular subdivisions and tight-span types via the second hypersimplex."""
import logging
from fractions import Fraction
from typing import FrozenSet, Hashable, List, Optional, Sequence, Tuple

from ..errors import DegenerateError
from ..models.metric import Metric, pairs
from ..models.polytope import VPolytope
from ..models.subdivision import RegularSubdivision
from .exactnum import RatLike, affine_rank, dot, to_rat
from .metrics import symmetric_group
from .polytope import hull_facets

logger = logging.getLogger(__name__)


def regular_subdivision(
    config: Sequence[Sequence[RatLike]],
    heights: Sequence[RatLike],
    labels: Optional[Sequence[Hashable]] = None,
) -> RegularSubdivision:
    """
    Lower-hull subdivision of a lifted configuration.

    Args:
        config: distinct points in R^d
        heights: one height per point
        labels: point labels, defaulting to 1..len(config)

    Returns:
        RegularSubdivision whose cells are the point sets of lower facets of
        the lifted hull

    Raises:
        DegenerateError: if the configuration is a single point
    """
    points = tuple(tuple(to_rat(x) for x in p) for p in config)
    lifts = tuple(to_rat(h) for h in heights)
    names = tuple(labels) if labels is not None else tuple(range(1, len(points) + 1))
    if len(lifts) != len(points) or len(names) != len(points):
        raise ValueError("config, heights and labels must have the same length")
    if len(set(points)) != len(points):
        raise ValueError("config points must be distinct")

    base_dim = affine_rank(points)
    if base_dim <= 0:
        raise DegenerateError("a single point has no subdivision")

    lifted = VPolytope.from_points([p + (h,) for p, h in zip(points, lifts)])
    hull = hull_facets(lifted)
    if hull.dim == base_dim:
        # heights are affine on the configuration
        return RegularSubdivision(
            labels=names, points=points, heights=lifts, maximal_cells=(frozenset(names),)
        )

    lower = [f for f in hull.facets if f.normal[-1] < 0]
    cells = sorted(
        ((frozenset(names[i] for i in f.points), (f.normal, f.offset)) for f in lower),
        key=lambda item: sorted(item[0]),
    )
    logger.debug("subdivision: %d points, %d maximal cells", len(points), len(cells))
    return RegularSubdivision(
        labels=names,
        points=points,
        heights=lifts,
        maximal_cells=tuple(cell for cell, _ in cells),
        supports=tuple(support for _, support in cells),
    )


def _support_height(support: Tuple[Tuple[int, ...], Fraction], point: Sequence[Fraction]) -> Fraction:
    normal, offset = support
    return (offset - dot(normal[:-1], point)) / normal[-1]


def interiors_disjoint(sub: RegularSubdivision) -> bool:
    """
    Check that distinct maximal cells do not overlap.

    At the barycenter of a cell its own supporting hyperplane must lie strictly
    above every other cell's, since the lower envelope is the maximum of the
    supporting affine functions and meets each one only on its cell.
    """
    if sub.is_trivial():
        return True
    position = {label: p for label, p in zip(sub.labels, sub.points)}
    for c, cell in enumerate(sub.maximal_cells):
        members = [position[label] for label in cell]
        barycenter = tuple(sum(coords) / len(members) for coords in zip(*members))
        own = _support_height(sub.supports[c], barycenter)
        for d, support in enumerate(sub.supports):
            if d != c and _support_height(support, barycenter) >= own:
                return False
    return True


def covers_points(sub: RegularSubdivision) -> bool:
    covered = set().union(*sub.maximal_cells)
    return covered == set(sub.labels)


def hypersimplex_labels(n: int) -> List[Tuple[int, int]]:
    return pairs(n)


def hypersimplex_type(m: Metric) -> RegularSubdivision:
    """
    Subdivision of the second hypersimplex dual to the tight span of m.

    Points e_i + e_j are lifted to -m(i, j): a tight-span face x_i + x_j >= m(i, j)
    supports the lifted points from above, which is a lower face for the
    negated heights.
    """
    labels = hypersimplex_labels(m.n)
    config = []
    for i, j in labels:
        point = [0] * m.n
        point[i - 1] = 1
        point[j - 1] = 1
        config.append(point)
    return regular_subdivision(config, [-m[i, j] for i, j in labels], labels)


def _relabel(cells: FrozenSet[FrozenSet[Tuple[int, int]]], sigma: Tuple[int, ...]):
    return frozenset(
        frozenset(tuple(sorted((sigma[i - 1], sigma[j - 1]))) for i, j in cell) for cell in cells
    )


def same_tight_span_type(m1: Metric, m2: Metric, up_to_symmetry: bool = False) -> bool:
    """
    Compare the labeled hypersimplex subdivisions of two metrics.

    With up_to_symmetry, m1's cells may first be relabeled by any permutation.
    """
    if m1.n != m2.n:
        raise ValueError("metrics must live on the same number of points")
    first = hypersimplex_type(m1).cell_set()
    second = hypersimplex_type(m2).cell_set()
    if first == second:
        return True
    if not up_to_symmetry:
        return False
    return any(_relabel(first, sigma) == second for sigma in symmetric_group(m1.n))

"""KRW polytopes, admissible graphs and face-count formulas."""
import logging
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from ..errors import InternalDisagreementError, NotStrictError, ZeroDistanceError
from ..models.graph import DirectedGraph, Edge
from ..models.metric import Metric
from ..models.polytope import KrwPolytope, VPolytope
from ..models.subdivision import RegularSubdivision
from .arrangement import arrangement
from .metrics import is_strict
from .polytope import face_lattice, hull_facets
from .tightspan import regular_subdivision

logger = logging.getLogger(__name__)

ORIGIN = (0, 0)


def vertex_labels(n: int) -> List[Edge]:
    """Ordered pairs (i, j), i != j, in lexicographic order."""
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]


def krw_point(n: int, i: int, j: int, distance: Fraction) -> Tuple[Fraction, ...]:
    point = [Fraction(0)] * n
    point[i - 1] = 1 / distance
    point[j - 1] = -1 / distance
    return tuple(point)


def build_krw(m: Metric) -> KrwPolytope:
    """
    Build the KRW polytope of a metric.

    Args:
        m: Metric with all off-diagonal values positive

    Returns:
        KrwPolytope with hull and face lattice

    Raises:
        ZeroDistanceError: if some distance is zero
    """
    if any(v <= 0 for v in m.values):
        raise ZeroDistanceError("the KRW polytope needs positive distances")
    labels = vertex_labels(m.n)
    polytope = VPolytope.from_points([krw_point(m.n, i, j, m[i, j]) for i, j in labels])
    hull = hull_facets(polytope)
    lattice = face_lattice(hull)
    logger.debug("KRW(%d points): f-vector %s", m.n, lattice.f_vector)
    return KrwPolytope(
        metric=m, vertex_labels=tuple(labels), polytope=polytope, hull=hull, lattice=lattice
    )


def _breaks(m: Metric, sequence: Sequence[Edge]) -> bool:
    k = len(sequence)
    left = sum(m[x, y] for x, y in sequence)
    right = sum(m[sequence[i][0], sequence[(i + 1) % k][1]] for i in range(k))
    return left > right


def _violated_from(m: Metric, start: Edge, pool: Sequence[Edge]) -> bool:
    """True iff some array starting with ``start`` and using edges of ``pool`` fails the inequality."""

    def extend(sequence: List[Edge], sources: FrozenSet[int], targets: FrozenSet[int]) -> bool:
        if len(sequence) >= 2 and _breaks(m, sequence):
            return True
        for edge in pool:
            x, y = edge
            if x in sources or y in targets:
                continue
            if extend(sequence + [edge], sources | {x}, targets | {y}):
                return True
        return False

    return extend([start], frozenset((start[0],)), frozenset((start[1],)))


def is_admissible(m: Metric, g: DirectedGraph) -> bool:
    """
    Check the cyclic inequalities of a directed graph.

    Every array (x1, y1), ..., (xk, yk) of edges with distinct sources and
    distinct targets must satisfy sum m(x_i, y_i) <= sum m(x_i, y_(i+1)).
    Rotations are tested once by starting each array at its first edge in
    sorted order.
    """
    edges = g.sorted_edges()
    return not any(
        _violated_from(m, edge, edges[position + 1:]) for position, edge in enumerate(edges)
    )


def admissible_graphs(m: Metric) -> List[DirectedGraph]:
    """All admissible graphs of a strict metric, the empty graph included."""
    if not is_strict(m):
        raise NotStrictError("admissible graphs are enumerated for strict metrics only")
    labels = vertex_labels(m.n)
    found: List[Tuple[Edge, ...]] = []

    def grow(chosen: List[Edge], sources: FrozenSet[int], targets: FrozenSet[int], start: int):
        found.append(tuple(chosen))
        for position in range(start, len(labels)):
            x, y = labels[position]
            # strict metrics admit no directed path through three vertices
            if x in targets or y in sources:
                continue
            if _violated_from(m, (x, y), chosen):
                continue
            grow(chosen + [(x, y)], sources | {x}, targets | {y}, position + 1)

    grow([], frozenset(), frozenset(), 0)
    return [DirectedGraph.from_edges(m.n, edges) for edges in found]


def facet_graphs(m: Metric) -> Set[DirectedGraph]:
    """
    Maximal admissible graphs of a strict metric.

    Raises:
        NotStrictError: if m is not strict
    """
    graphs = admissible_graphs(m)
    labels = vertex_labels(m.n)
    maximal: Set[DirectedGraph] = set()
    for g in graphs:
        chosen = g.sorted_edges()
        extendable = any(
            edge not in g.edges
            and edge[0] not in g.targets
            and edge[1] not in g.sources
            and not _violated_from(m, edge, chosen)
            for edge in labels
        )
        if not extendable:
            maximal.add(g)
    return maximal


def facet_graph_check(m: Metric, krw: Optional[KrwPolytope] = None) -> bool:
    """True iff the maximal admissible graphs are exactly the hull's facet labels."""
    krw = krw or build_krw(m)
    hull_graphs = {DirectedGraph.from_edges(m.n, labels) for labels in krw.facet_labels()}
    agree = facet_graphs(m) == hull_graphs
    if not agree:
        logger.warning("facet graphs disagree with the hull on %d points", m.n)
    return agree


def is_generic(m: Metric) -> bool:
    """
    True iff every matching problem on 2k distinct points has a unique optimum.

    Raises:
        NotStrictError: if m is not strict
    """
    if not is_strict(m):
        raise NotStrictError("genericity is defined for strict metrics")
    points = range(1, m.n + 1)
    for k in range(2, m.n // 2 + 1):
        for xs in combinations(points, k):
            rest = [p for p in points if p not in xs]
            for ys in combinations(rest, k):
                costs = sorted(sum(m[x, y] for x, y in zip(xs, order)) for order in permutations(ys))
                if costs[0] == costs[1]:
                    return False
    return True


def generic_face_count(points: int, m: int) -> int:
    """
    Multinomial (n+m)! / (m! m! (n-m)!) with n = points - 1.

    For m >= 1 this counts (m-1)-dimensional faces of a generic KRW polytope.
    """
    n = points - 1
    if not 0 <= m <= n:
        raise ValueError(f"m must lie in [0, {n}]")
    return factorial(n + m) // (factorial(m) ** 2 * factorial(n - m))


def r_k(m: Metric, k: int) -> int:
    """
    Number of hyperplanes of cycle length 2k containing the flat X_m.

    X_m is the intersection of all hyperplanes through m, so a hyperplane
    contains it exactly when it passes through m.
    """
    space = arrangement(m.n)
    return sum(1 for index in space.containing(m) if space.hyperplanes[index].k == k)


def f01_strict(m: Metric) -> Tuple[int, int]:
    """
    Vertex and edge counts of the KRW polytope of a strict metric, by formula.

    Cross-checked against the hull for up to six points.

    Raises:
        NotStrictError: if m is not strict
        InternalDisagreementError: if formula and hull differ
    """
    if not is_strict(m):
        raise NotStrictError("the face-count formulas hold for strict metrics")
    points = m.n
    if points < 3:
        raise ValueError("need at least 3 points")
    f0 = points * (points - 1)
    f1 = factorial(points + 1) // (4 * factorial(points - 3)) - 2 * r_k(m, 2)
    if points <= 6:
        hull_counts = build_krw(m).f_vector[:2]
        if hull_counts != (f0, f1):
            raise InternalDisagreementError(
                f"formula gives {(f0, f1)}, hull gives {hull_counts}"
            )
    return f0, f1


def root_subdivision(m: Metric) -> RegularSubdivision:
    """Subdivision of {e_i - e_j} and the origin, lifted to m(i, j) and 0."""
    labels = vertex_labels(m.n)
    config = []
    for i, j in labels:
        point = [0] * m.n
        point[i - 1] = 1
        point[j - 1] = -1
        config.append(point)
    config.append([0] * m.n)
    heights = [m[i, j] for i, j in labels] + [0]
    return regular_subdivision(config, heights, labels + [ORIGIN])


def _antipode(label: Edge) -> Edge:
    return label if label == ORIGIN else (label[1], label[0])


def root_subdivision_check(m: Metric) -> bool:
    """
    True iff the root subdivision's cells are the KRW facets coned to the origin,
    and the subdivision is centrally symmetric.
    """
    cells = root_subdivision(m).cell_set()
    krw = build_krw(m)
    expected = frozenset(labels | {ORIGIN} for labels in krw.facet_point_labels())
    mirrored = frozenset(frozenset(_antipode(x) for x in cell) for cell in cells)
    return cells == expected and mirrored == cells


def quadrilateral_facet_count(krw: KrwPolytope) -> int:
    return sum(1 for facet in krw.lattice.facets if len(facet) == 4)

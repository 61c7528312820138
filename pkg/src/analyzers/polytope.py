"""Exact convex hulls, face lattices and f-vectors.

``hull_facets`` hands the configuration, projected onto the coordinates of its
affine hull, to the Parma Polyhedra Library and reads back the minimized
constraints and generators. ``scan_facets`` is the plain subset scan; it is
slow but independent and the tests compare the two.
"""
import logging
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

import ppl

from ..errors import DegenerateError
from ..models.polytope import Facet, FaceLattice, Hull, HullStats, Point, VPolytope
from .exactnum import (
    Echelon,
    affine_normal,
    affine_rank,
    dot,
    primitive,
)

logger = logging.getLogger(__name__)


class _Projection:
    """Coordinate projection of a configuration onto its affine hull."""

    def __init__(self, points: Sequence[Point]):
        self.unique: List[Point] = []
        self.members: List[List[int]] = []
        seen: Dict[Point, int] = {}
        for index, p in enumerate(points):
            if p not in seen:
                seen[p] = len(self.unique)
                self.unique.append(p)
                self.members.append([])
            self.members[seen[p]].append(index)

        width = len(points[0])
        base = self.unique[0]
        basis = Echelon(width)
        for p in self.unique[1:]:
            basis.add([x - b for x, b in zip(p, base)])
        self.dim = basis.rank
        self.pivots = sorted(basis.pivots)
        self.ambient_dim = width
        self.projected: List[Point] = [tuple(p[c] for c in self.pivots) for p in self.unique]

    def lift(self, normal: Sequence[int]) -> Tuple[int, ...]:
        lifted = [0] * self.ambient_dim
        for value, column in zip(normal, self.pivots):
            lifted[column] = value
        return tuple(lifted)


def _ppl_polyhedron(points: Sequence[Point], dim: int) -> ppl.C_Polyhedron:
    gs = ppl.Generator_System()
    variables = [ppl.Variable(i) for i in range(dim)]
    for point in points:
        denominator = lcm(*(x.denominator for x in point))
        expression = sum(
            (int(x * denominator) * v for x, v in zip(point, variables)), ppl.Linear_Expression()
        )
        gs.insert(ppl.point(expression, denominator))
    return ppl.C_Polyhedron(gs)


def _outward(coefficients: Sequence[int], inhomogeneous: int) -> Tuple[Tuple[int, ...], Fraction]:
    """Turn a.y + b >= 0 into a primitive outward normal and its offset."""
    normal = primitive([-c for c in coefficients])
    k = next(i for i, c in enumerate(coefficients) if c)
    return normal, Fraction(inhomogeneous) * normal[k] / -coefficients[k]


def hull_facets(p: VPolytope) -> Hull:
    """
    Compute the facets and vertices of a V-polytope.

    Args:
        p: VPolytope, possibly not full-dimensional

    Returns:
        Hull with outward primitive facet normals in the ambient coordinates,
        sorted by incident vertex sets

    Raises:
        DegenerateError: if all points coincide
    """
    projection = _Projection(p.points)
    r = projection.dim
    if r == 0:
        raise DegenerateError("all points coincide; the hull has no facets")
    q = projection.projected
    poly = _ppl_polyhedron(q, r)

    planes = []
    for constraint in poly.minimized_constraints():
        # the projection is full-dimensional, so every constraint is an inequality
        coefficients = [int(c) for c in constraint.coefficients()]
        if not any(coefficients):
            continue
        planes.append(_outward(coefficients, int(constraint.inhomogeneous_term())))
    corners = {
        tuple(Fraction(int(c), int(g.divisor())) for c in g.coefficients())
        for g in poly.minimized_generators()
        if g.is_point()
    }
    vertex_ids = {u for u, point in enumerate(q) if point in corners}
    stats = HullStats(unique_points=len(q), affine_dim=r, constraints=len(planes))

    facets = []
    for normal, offset in planes:
        on_facet = [u for u, point in enumerate(q) if dot(normal, point) == offset]
        facets.append(Facet(
            normal=projection.lift(normal),
            offset=offset,
            vertices=frozenset(projection.members[u][0] for u in on_facet if u in vertex_ids),
            points=frozenset(i for u in on_facet for i in projection.members[u]),
        ))
    facets.sort(key=lambda f: sorted(f.vertices))
    logger.debug(
        "hull: %d points, dim %d, %d facets",
        stats.unique_points, stats.affine_dim, stats.constraints,
    )
    return Hull(
        polytope=p,
        dim=r,
        facets=tuple(facets),
        vertices=tuple(sorted(projection.members[u][0] for u in vertex_ids)),
    )


def scan_facets(p: VPolytope) -> Set[Tuple[Tuple[int, ...], Fraction]]:
    """
    Facet hyperplanes by scanning every affinely spanning subset of points.

    Returns:
        Set of (outward normal, offset) pairs in ambient coordinates
    """
    projection = _Projection(p.points)
    r = projection.dim
    if r == 0:
        raise DegenerateError("all points coincide; the hull has no facets")
    q = projection.projected
    found: Set[Tuple[Tuple[int, ...], Fraction]] = set()
    for subset in combinations(range(len(q)), r):
        plane = affine_normal([q[i] for i in subset], r)
        if plane is None:
            continue
        values = [dot(plane.normal, point) - plane.offset for point in q]
        if all(v <= 0 for v in values):
            normal, offset = plane.normal, plane.offset
        elif all(v >= 0 for v in values):
            normal, offset = tuple(-x for x in plane.normal), -plane.offset
        else:
            continue
        found.add((projection.lift(normal), offset))
    return found


def face_lattice(hull: Hull) -> FaceLattice:
    """
    All proper nonempty faces as intersections of facet vertex sets.

    Faces are closed under intersection starting from the facets; each face's
    dimension is the affine rank of its vertices.
    """
    facet_sets = [f.vertices for f in hull.facets]
    universe = sorted(set().union(*facet_sets))
    bit = {v: 1 << k for k, v in enumerate(universe)}
    masks = sorted({sum(bit[v] for v in s) for s in facet_sets})

    faces: Set[int] = set(masks)
    frontier = list(masks)
    while frontier:
        discovered = []
        for face in frontier:
            for facet in masks:
                meet = face & facet
                if meet and meet not in faces:
                    faces.add(meet)
                    discovered.append(meet)
        frontier = discovered

    points = hull.polytope.points
    by_dim: List[List[FrozenSet[int]]] = [[] for _ in range(hull.dim)]
    for mask in faces:
        members = frozenset(v for v in universe if mask & bit[v])
        d = affine_rank([points[v] for v in members])
        by_dim[d].append(members)
    for group in by_dim:
        group.sort(key=sorted)
    return FaceLattice(
        vertex_count=len(universe),
        facets=tuple(sorted(facet_sets, key=sorted)),
        faces_by_dim=tuple(tuple(group) for group in by_dim),
        dim=hull.dim,
    )


def f_vector(lattice: FaceLattice) -> Tuple[int, ...]:
    return lattice.f_vector


def is_simplicial(lattice: FaceLattice) -> bool:
    """True iff every facet has exactly dim vertices."""
    return all(len(f) == lattice.dim for f in lattice.facets)


def euler_characteristic(lattice: FaceLattice) -> int:
    return sum((-1) ** i * count for i, count in enumerate(lattice.f_vector))


def _face_counts_from_empty(lattice: FaceLattice) -> List[int]:
    # index k counts faces of dimension k - 1, starting with the empty face
    return [1] + list(lattice.f_vector)


def free_sum_f_check(l1: FaceLattice, l2: FaceLattice, l12: FaceLattice) -> bool:
    """
    Check the face counts of a free sum against its summands.

    Proper faces of P (+) Q are joins F * G of proper faces (empty face
    included) with dim = dim F + dim G + 1, so the shifted face-count
    polynomials multiply.
    """
    a, b = _face_counts_from_empty(l1), _face_counts_from_empty(l2)
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            product[i + j] += x * y
    return l12.dim == l1.dim + l2.dim and product == _face_counts_from_empty(l12)

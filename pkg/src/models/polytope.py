"""Polytope models: point configurations, hull facets and face lattices."""
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Sequence, Tuple

from ..analyzers.exactnum import RatLike, format_rat, to_rat
from .metric import Metric

Point = Tuple[Fraction, ...]


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a finite point list; duplicates and non-vertices are allowed."""

    ambient_dim: int
    points: Tuple[Point, ...]

    def __post_init__(self):
        for p in self.points:
            if len(p) != self.ambient_dim:
                raise ValueError(f"point {p} is not in R^{self.ambient_dim}")

    @classmethod
    def from_points(cls, points: Sequence[Sequence[RatLike]]) -> 'VPolytope':
        if not points:
            raise ValueError("a polytope needs at least one point")
        converted = tuple(tuple(to_rat(x) for x in p) for p in points)
        return cls(ambient_dim=len(converted[0]), points=converted)


@dataclass(frozen=True)
class Facet:
    """
    One facet of a hull.

    ``normal . x <= offset`` holds on the polytope with equality on the facet.
    ``vertices`` indexes true vertices only; ``points`` indexes every input point
    lying on the facet hyperplane.
    """

    normal: Tuple[int, ...]
    offset: Fraction
    vertices: FrozenSet[int]
    points: FrozenSet[int]


@dataclass(frozen=True)
class Hull:
    """Facet description of a VPolytope."""

    polytope: VPolytope
    dim: int
    facets: Tuple[Facet, ...]
    vertices: Tuple[int, ...]

    def facet_vertex_sets(self) -> List[FrozenSet[int]]:
        return [f.vertices for f in self.facets]

    def to_dict(self) -> dict:
        return {
            'dim': self.dim,
            'facets': [sorted(f.vertices) for f in self.facets],
            'vertices': [[format_rat(x) for x in self.polytope.points[v]] for v in self.vertices],
        }


@dataclass(frozen=True)
class FaceLattice:
    """Proper nonempty faces of a polytope, grouped by dimension."""

    vertex_count: int
    facets: Tuple[FrozenSet[int], ...]
    faces_by_dim: Tuple[Tuple[FrozenSet[int], ...], ...]
    dim: int

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(faces) for faces in self.faces_by_dim)

    def faces(self, dim: int) -> Tuple[FrozenSet[int], ...]:
        return self.faces_by_dim[dim]


@dataclass
class HullStats:
    """Counters collected while running the hull engine."""

    unique_points: int = 0
    affine_dim: int = 0
    constraints: int = 0


@dataclass(frozen=True)
class KrwPolytope:
    """Convex hull of the points (e_i - e_j) / m(i, j), labeled by (i, j)."""

    metric: Metric
    vertex_labels: Tuple[Tuple[int, int], ...]
    polytope: VPolytope
    hull: Hull
    lattice: FaceLattice

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return self.lattice.f_vector

    def vertex_label_set(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset(self.vertex_labels[v] for v in self.hull.vertices)

    def facet_labels(self) -> List[FrozenSet[Tuple[int, int]]]:
        """Vertex labels of each facet."""
        return [frozenset(self.vertex_labels[v] for v in f.vertices) for f in self.hull.facets]

    def facet_point_labels(self) -> List[FrozenSet[Tuple[int, int]]]:
        """Labels of every point on each facet, vertices or not."""
        return [frozenset(self.vertex_labels[v] for v in f.points) for f in self.hull.facets]

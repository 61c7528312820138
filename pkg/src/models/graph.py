"""Directed graphs on [n] attached to faces of KRW polytopes."""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

import networkx as nx

Edge = Tuple[int, int]


@dataclass(frozen=True)
class DirectedGraph:
    """Loop-free directed graph on the points 1..n."""

    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i},{j}) leaves [{self.n}]")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> 'DirectedGraph':
        return cls(n=n, edges=frozenset((int(i), int(j)) for i, j in edges))

    @property
    def sources(self) -> FrozenSet[int]:
        return frozenset(i for i, _ in self.edges)

    @property
    def targets(self) -> FrozenSet[int]:
        return frozenset(j for _, j in self.edges)

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.sorted_edges())
        return graph

    def longest_path_vertices(self) -> int:
        """Vertex count of a longest directed path; 0 for an empty graph, -1 if cyclic."""
        if not self.edges:
            return 0
        graph = self.to_networkx()
        if not nx.is_directed_acyclic_graph(graph):
            return -1
        return nx.dag_longest_path_length(graph) + 1

    def label(self) -> str:
        return " ".join(f"({i},{j})" for i, j in self.sorted_edges())

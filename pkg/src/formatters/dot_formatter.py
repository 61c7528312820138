"""Graphviz DOT export of facet graphs."""
import logging
from pathlib import Path
from typing import Iterable, List, Union

import networkx as nx

from ..models.graph import DirectedGraph

logger = logging.getLogger(__name__)


class DotFormatter:
    """Writes directed graphs in DOT syntax, nodes named by their point."""

    def format(self, graph: DirectedGraph, name: str = "facet") -> str:
        return self.format_networkx(graph.to_networkx(), name)

    def format_networkx(self, graph: nx.DiGraph, name: str) -> str:
        lines = [f"digraph {name}", "{"]
        for node in sorted(graph.nodes()):
            lines.append(f"    p{node} [label=\"{node}\"];")
        for i, j in sorted(graph.edges()):
            lines.append(f"    p{i} -> p{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def write_all(self, graphs: Iterable[DirectedGraph], directory: Union[str, Path]) -> List[Path]:
        """
        Write one DOT file per graph.

        Args:
            graphs: graphs in output order
            directory: created if missing

        Returns:
            Paths written, facet_001.dot onwards
        """
        target = Path(directory)
        target.mkdir(parents=True, exist_ok=True)
        written = []
        for index, graph in enumerate(graphs, start=1):
            path = target / f"facet_{index:03d}.dot"
            path.write_text(self.format(graph, name=f"facet_{index:03d}"))
            written.append(path)
        logger.debug("wrote %d DOT files to %s", len(written), target)
        return written

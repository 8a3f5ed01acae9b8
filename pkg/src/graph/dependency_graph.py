from dataclasses import dataclass
from typing import Tuple

import networkx as nx

from src.core import Matrix, MatrixSet


@dataclass(frozen=True)
class DependencyGraph:
    """Edge i -> j iff some A in Σ has A[i, j] > 0. Loops allowed."""

    dim: int
    adjacency: Tuple[Tuple[bool, ...], ...]

    def edges(self) -> list[Tuple[int, int]]:
        return [(i, j) for i in range(self.dim) for j in range(self.dim) if self.adjacency[i][j]]

    def has_loop(self, vertex: int) -> bool:
        return self.adjacency[vertex][vertex]

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.dim))
        graph.add_edges_from(self.edges())
        return graph


def build_graph(s: MatrixSet) -> DependencyGraph:
    return DependencyGraph(
        dim=s.dim,
        adjacency=tuple(
            tuple(any(m.entries[i][j] > 0 for m in s.matrices) for j in range(s.dim))
            for i in range(s.dim)
        ),
    )


def matrix_graph(m: Matrix) -> DependencyGraph:
    return DependencyGraph(dim=m.dim, adjacency=m.support())

from dataclasses import dataclass
from typing import Optional, Tuple

import networkx as nx

from src.core import Matrix, MatrixSet, multiply
from src.core.scalar import Number, ONE
from src.exceptions import UnreachablePairError
from src.graph.dependency_graph import DependencyGraph, build_graph


@dataclass(frozen=True)
class DistanceTable:
    """delta[i][j] is the unweighted distance i -> j, None when unreachable, delta[i][i] = 0."""

    delta: Tuple[Tuple[Optional[int], ...], ...]

    def __call__(self, i: int, j: int) -> Optional[int]:
        return self.delta[i][j]

    def reachable(self, i: int, j: int) -> bool:
        return self.delta[i][j] is not None


@dataclass(frozen=True)
class WitnessProduct:
    source: int
    target: int
    matrices: Tuple[int, ...]
    value: Number


def distances(g: DependencyGraph) -> DistanceTable:
    lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))

    return DistanceTable(delta=tuple(
        tuple(lengths[i].get(j) for j in range(g.dim))
        for i in range(g.dim)
    ))


def witness_product(s: MatrixSet, i: int, j: int, g: DependencyGraph = None) -> WitnessProduct:
    """
    A positive path product B(i, j) of length delta(i, j).

    Follows the lexicographically smallest shortest path and, on every edge,
    the first matrix of Σ with a positive entry there.
    """
    if i == j:
        return WitnessProduct(source=i, target=j, matrices=(), value=ONE if s.is_exact else 1.0)

    g = g or build_graph(s)
    graph = g.to_networkx()
    to_target = nx.single_source_shortest_path_length(graph.reverse(copy=False), j)

    if i not in to_target:
        raise UnreachablePairError(f"vertex {j} is not reachable from vertex {i}")

    path = [i]
    while path[-1] != j:
        here = path[-1]
        path.append(min(w for w in graph.successors(here) if to_target.get(w) == to_target[here] - 1))

    chosen = []
    for u, v in zip(path, path[1:]):
        chosen.append(next(index for index, m in enumerate(s.matrices) if m.entries[u][v] > 0))

    product: Matrix = s.matrices[chosen[0]]
    for index in chosen[1:]:
        product = multiply(product, s.matrices[index])

    return WitnessProduct(source=i, target=j, matrices=tuple(chosen), value=product.entries[i][j])

from dataclasses import dataclass
from typing import Tuple

import networkx as nx

from src.graph.dependency_graph import DependencyGraph


@dataclass(frozen=True)
class Condensation:
    """
    Strongly connected components of a dependency graph.

    Components are numbered in topological order of the condensation DAG,
    ties broken by the smallest vertex, and each component lists its vertices
    in increasing order. A component is trivial when it is a single vertex
    without a self-loop.
    """

    components: Tuple[Tuple[int, ...], ...]
    component_of: Tuple[int, ...]
    dag_edges: Tuple[Tuple[int, int], ...]
    trivial: Tuple[bool, ...]

    @property
    def size(self) -> int:
        return len(self.components)

    @property
    def is_strongly_connected(self) -> bool:
        return self.size == 1 and not self.trivial[0]

    def successors(self, component: int) -> list[int]:
        return [target for source, target in self.dag_edges if source == component]

    def to_networkx(self) -> nx.DiGraph:
        dag = nx.DiGraph()
        dag.add_nodes_from(range(self.size))
        dag.add_edges_from(self.dag_edges)
        return dag


def scc(g: DependencyGraph) -> Condensation:
    graph = g.to_networkx()

    found = [tuple(sorted(c)) for c in nx.strongly_connected_components(graph)]
    dag = nx.condensation(graph, scc=[set(c) for c in found])

    order = list(nx.lexicographical_topological_sort(dag, key=lambda node: min(found[node])))
    renumber = {old: new for new, old in enumerate(order)}

    components = tuple(found[old] for old in order)
    component_of = [0] * g.dim
    for index, members in enumerate(components):
        for vertex in members:
            component_of[vertex] = index

    dag_edges = tuple(sorted((renumber[u], renumber[v]) for u, v in dag.edges()))
    trivial = tuple(len(members) == 1 and not g.has_loop(members[0]) for members in components)

    return Condensation(
        components=components,
        component_of=tuple(component_of),
        dag_edges=dag_edges,
        trivial=trivial,
    )

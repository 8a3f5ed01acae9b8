from .dependency_graph import DependencyGraph, build_graph, matrix_graph
from .condensation import Condensation, scc
from .distances import DistanceTable, WitnessProduct, distances, witness_product

__all__ = ["DependencyGraph", "build_graph", "matrix_graph", "Condensation", "scc", "DistanceTable",
           "WitnessProduct", "distances", "witness_product"]

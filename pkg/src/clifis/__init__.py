"""Optimal Clifford initial states for transverse-field Ising Hamiltonians.

The best stabilizer state for ``H = -sum_E Z_i Z_j - g sum_V X_i`` on a graph
is found by minimising a submodular set function over vertex subsets; this
package solves that problem exactly and checks the result against brute force
and exact diagonalisation.
"""

from .density import densest_subgraph, extreme_thresholds, two_segmented
from .errors import ConvergenceError, InfeasibleSizeError, InternalCheckError
from .exact import dense_ground_energy, ground_energy, relative_error
from .graphs import Graph, graph_by_id, random_graph, read_graph, write_graph
from .ising import IsingInstance, cost, edge_function, segment_cost
from .stabilizer import StabilizerTableau, build_witness
from .subset_opt import Solver, VertexSetSolution, brute_force_min, mincut_min, min_norm_point_min, solve
from .sweep import SweepConfig, SweepRecord, run_random_study, run_sweep, verify_bundle

__all__ = [
    "ConvergenceError",
    "Graph",
    "InfeasibleSizeError",
    "InternalCheckError",
    "IsingInstance",
    "Solver",
    "StabilizerTableau",
    "SweepConfig",
    "SweepRecord",
    "VertexSetSolution",
    "brute_force_min",
    "build_witness",
    "cost",
    "dense_ground_energy",
    "densest_subgraph",
    "edge_function",
    "extreme_thresholds",
    "graph_by_id",
    "ground_energy",
    "min_norm_point_min",
    "mincut_min",
    "random_graph",
    "read_graph",
    "relative_error",
    "run_random_study",
    "run_sweep",
    "segment_cost",
    "solve",
    "two_segmented",
    "verify_bundle",
    "write_graph",
]

"""Scrambles, carton numbers and neighbouring graph invariants on small multigraphs."""
from .chipfiring import Divisor, dhar_burn, fire_set, gonality_exact, has_positive_rank, q_reduce
from .graph import (MultiGraph, build_graph, cartesian_product, line_graph, smooth_vertex,
                    subdivide_edge)
from .params import (GraphParams, alpha_k, connectivity_params, enumerate_connected_subgraphs,
                     lambda_k, xi_k)
from .families import generate_family
from .scramble import (OrderReport, Scramble, carton_lower_bound, egg_cut_number, hitting_number,
                       is_disjoint, make_scramble, order, pare_to_hitting, prune_nested,
                       scramble_size_lower_bound, subdivision_transfer, uniform_scramble,
                       vertegg_scramble)

__version__ = "0.1.0"

__all__ = [
    "Divisor", "dhar_burn", "fire_set", "gonality_exact", "has_positive_rank", "q_reduce",
    "MultiGraph", "build_graph", "cartesian_product", "line_graph", "smooth_vertex", "subdivide_edge",
    "GraphParams", "alpha_k", "connectivity_params", "enumerate_connected_subgraphs", "lambda_k", "xi_k",
    "generate_family",
    "OrderReport", "Scramble", "carton_lower_bound", "egg_cut_number", "hitting_number", "is_disjoint",
    "make_scramble", "order", "pare_to_hitting", "prune_nested", "scramble_size_lower_bound",
    "subdivision_transfer", "uniform_scramble", "vertegg_scramble",
]

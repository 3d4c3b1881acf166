"""Complete-intersection decisions for toric ideals of graphs."""

from .bands import BandKind, BandLabeling, band_generators, recognize_band
from .budget import Budget, budget_from_env
from .decider import CIReport, DecideOptions, Verdict, decide, degree2_diagnostics, is_ci, prefilter
from .errors import CIToricError, GeneratorCountMismatch, ParseError, PreconditionError, ResourceLimitError
from .fibers import enumerate_fibers, generates_up_to, mu_up_to, oracle_verdict
from .graph import (
    Graph,
    SubgraphView,
    bipartite_components,
    contract_deg2,
    delete_vertices,
    height,
    incidence_matrix,
)
from .io import GraphFormat, parse_graph
from .matrix import determinantal_divisor, integer_rank, is_dominating, verify_fs
from .walk_finder import shortest_even_walk_exact_vertices, walk_oracle
from .walks import Binomial, EvenClosedWalk, WalkShape, binomial_of_walk, classify_walk_shape, exponent_row, membership_check

__all__ = [
    "BandKind",
    "BandLabeling",
    "Binomial",
    "Budget",
    "CIReport",
    "CIToricError",
    "DecideOptions",
    "EvenClosedWalk",
    "GeneratorCountMismatch",
    "Graph",
    "GraphFormat",
    "ParseError",
    "PreconditionError",
    "ResourceLimitError",
    "SubgraphView",
    "Verdict",
    "WalkShape",
    "band_generators",
    "binomial_of_walk",
    "bipartite_components",
    "budget_from_env",
    "classify_walk_shape",
    "contract_deg2",
    "decide",
    "degree2_diagnostics",
    "delete_vertices",
    "determinantal_divisor",
    "enumerate_fibers",
    "exponent_row",
    "generates_up_to",
    "height",
    "incidence_matrix",
    "integer_rank",
    "is_ci",
    "is_dominating",
    "membership_check",
    "mu_up_to",
    "oracle_verdict",
    "parse_graph",
    "prefilter",
    "recognize_band",
    "shortest_even_walk_exact_vertices",
    "verify_fs",
    "walk_oracle",
]

"""Exact cochain-level comparison between simplicial cochains on a barycentric
subdivision and relative Hochschild cochains on an incidence algebra."""

from .scalars import FieldSpec, field_make, parse_field
from .complex import SimplicialComplex, parse_facets, face_leq, poset_elements
from .subdivision import (
    Cochain,
    enumerate_chains,
    restrict,
    simplicial_coboundary,
    simplicial_cup,
    simplicial_brace,
)
from .hochschild import (
    hochschild_coboundary,
    hochschild_cup,
    hochschild_brace,
    incidence_multiply,
)
from .cct import iota, iota_inverse, CheckReport
from .cohomology import betti, coboundary_matrix, BettiTable

__all__ = [
    "FieldSpec", "field_make", "parse_field",
    "SimplicialComplex", "parse_facets", "face_leq", "poset_elements",
    "Cochain", "enumerate_chains", "restrict",
    "simplicial_coboundary", "simplicial_cup", "simplicial_brace",
    "hochschild_coboundary", "hochschild_cup", "hochschild_brace", "incidence_multiply",
    "iota", "iota_inverse", "CheckReport",
    "betti", "coboundary_matrix", "BettiTable",
]

__version__ = "0.1.0"

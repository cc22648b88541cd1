"""Exact solver and exhaustive search for the adventitious-angles problem."""

from .cyclotomic import (
    CycloContext,
    CycloElement,
    galois_map,
    inverse,
    is_in_subfield,
    is_rational,
    is_real,
    lift_to_supfield,
    make_context,
    minimal_polynomial,
)
from .oracle import HPReal, construct, estimate_theta, near_half_step
from .search import Convention, SearchReport, enumerate_triplets, run_search
from .solver import (
    Classification,
    DerivedAngle,
    Triplet,
    certify_theta,
    derive_theta,
    mirror_theta,
    quadling_ratio,
    solve,
    tan_theta_pair,
)
from .trig import cos_of, sin_of, tan_half_via_identity, tan_of

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "Convention",
    "CycloContext",
    "CycloElement",
    "DerivedAngle",
    "HPReal",
    "SearchReport",
    "Triplet",
    "certify_theta",
    "construct",
    "cos_of",
    "derive_theta",
    "enumerate_triplets",
    "estimate_theta",
    "galois_map",
    "inverse",
    "is_in_subfield",
    "is_rational",
    "is_real",
    "lift_to_supfield",
    "make_context",
    "minimal_polynomial",
    "mirror_theta",
    "near_half_step",
    "quadling_ratio",
    "run_search",
    "sin_of",
    "solve",
    "tan_half_via_identity",
    "tan_of",
    "tan_theta_pair",
]

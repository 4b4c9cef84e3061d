"""Exact certification of holomorphic extension from the sphere to the ball.

Boundary data are polynomials in z, conj(z) on the unit sphere of C^n.  Their
moments along the straight discs through the pole ``(0, ..., 0, 1)`` are
computed exactly as residues; all moments vanish iff the data extend
holomorphically, and otherwise a nonzero leading Fourier mode is returned as
a witness.
"""

from .boundary import (
    BPoly2,
    BPolyN,
    Mono2,
    Z1,
    Z1BAR,
    Z2,
    Z2BAR,
    holomorphic_part,
    is_holomorphic,
    normal_form,
    weighted_degree,
)
from .certify import Extends, Obstructed, cascade, certify, leading_asymptotic
from .discs import disc_eval, disc_pullback, disc_pullback_symbolic
from .exact import CircPoly, GComplex, ParamPoly, circ_reduce, param_is_zero, residue
from .expr import ParseError, parse_poly
from .moments import moment, moment_symbolic, moments_vanish, monomial_moment
from .slicer import SlicePlane, certify_nd, slice_certify_all, slice_restrict

__version__ = "0.1.0"

__all__ = [
    "BPoly2", "BPolyN", "Mono2", "Z1", "Z1BAR", "Z2", "Z2BAR",
    "holomorphic_part", "is_holomorphic", "normal_form", "weighted_degree",
    "Extends", "Obstructed", "cascade", "certify", "leading_asymptotic",
    "disc_eval", "disc_pullback", "disc_pullback_symbolic",
    "CircPoly", "GComplex", "ParamPoly", "circ_reduce", "param_is_zero", "residue",
    "ParseError", "parse_poly",
    "moment", "moment_symbolic", "moments_vanish", "monomial_moment",
    "SlicePlane", "certify_nd", "slice_certify_all", "slice_restrict",
]

"""Symmetric tensor-rank decompositions of multiplication in ``F_{q^m}`` and
symmetric rank-metric codes."""

from .decomp import (build_sigma, build_sigma_star, construct, m2_construct,
                     m3_construct, m3_fT, m4_construct, m4_construct_from_table,
                     search, solve_fq_constrained)
from .errors import SymRankError
from .field import GF, OrderedBasis, default_field, trace_dual_basis
from .linpoly import LinPoly, adjoint, is_symmetric, rank_one_symmetric, to_gram
from .multtensor import Certificate, slice_space, verify_certificate
from .reference import known
from .symcodes import SymCode, build_sqmd, min_distance, singleton_bound, strk_exact

__version__ = "0.1.0"

__all__ = [
    "GF", "OrderedBasis", "default_field", "trace_dual_basis",
    "LinPoly", "adjoint", "is_symmetric", "rank_one_symmetric", "to_gram",
    "Certificate", "slice_space", "verify_certificate",
    "build_sigma", "build_sigma_star", "solve_fq_constrained", "construct",
    "m2_construct", "m3_construct", "m3_fT", "m4_construct",
    "m4_construct_from_table", "search",
    "SymCode", "build_sqmd", "min_distance", "singleton_bound", "strk_exact",
    "known", "SymRankError",
]

"""Exact verification engine for symbolic powers of monomial space curves."""

__version__ = "0.1.0"

from .curve import DEFAULT_GRID, Curve, CurveError, CurveParams
from .groebner import QQ, Field, PolyIdeal, reduced_groebner, toric_ideal
from .monomial import INFINITE, MonomialIdeal, quotient_dim
from .orders import BlockOrder, GradedBlockOrder, Lex, WeightedGradedLex
from .poly import Polynomial, parse_polynomial

__all__ = [
    "BlockOrder",
    "Curve",
    "CurveError",
    "CurveParams",
    "DEFAULT_GRID",
    "Field",
    "GradedBlockOrder",
    "INFINITE",
    "Lex",
    "MonomialIdeal",
    "PolyIdeal",
    "Polynomial",
    "QQ",
    "WeightedGradedLex",
    "parse_polynomial",
    "quotient_dim",
    "reduced_groebner",
    "toric_ideal",
]

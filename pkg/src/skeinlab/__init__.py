"""Homflypt polynomials of braid closures via the Hecke algebra, with exact arithmetic."""

__version__ = "0.1.0"

from .braid import BraidWord, parse_braid, render, writhe
from .coeffs import decompose, specialize
from .hecke import homflypt
from .laurent import BiLaurent, LaurentPoly

__all__ = [
    "BraidWord",
    "BiLaurent",
    "LaurentPoly",
    "decompose",
    "homflypt",
    "parse_braid",
    "render",
    "specialize",
    "writhe",
]

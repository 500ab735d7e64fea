"""Combinatorics of level-one cyclotomic KLR algebras of affine type C_l^(1)."""

from .blocks import Decomposition, RepType, classify, decompose
from .cartan import CartanDatum, Weight, cartan
from .partitions import Charge
from .qdim import LaurentPoly, graded_dim, graded_dim_block

__all__ = [
    "CartanDatum",
    "Charge",
    "Decomposition",
    "LaurentPoly",
    "RepType",
    "Weight",
    "cartan",
    "classify",
    "decompose",
    "graded_dim",
    "graded_dim_block",
]
__version__ = "0.1.0"

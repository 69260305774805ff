"""Exact computations with alternating matrices, Lagrangian pairs and their
degeneracy loci."""

from .degeneracy import degeneracy_ideal, symmetric_degeneracy_ideal
from .ideals import Ideal, ideal_codim, ideal_colon, ideal_equal, ideal_member
from .pairs import PairData, common_complement, graph_pair, split_pair
from .pfaffian import pfaffian, sub_pfaffians, submaximal_pfaffian_vector
from .quadform import LagSub, QuadSpace, hyperbolic, is_lagrangian
from .resolutions import (ChainComplex, be_complex, check_exactness, colon_equations,
                          dual_diagram, euler_characteristic, symmetric_codim1_resolution)
from .rings import GF, QQ, LocalRing, PolyRing

__all__ = [
    "GF", "QQ", "PolyRing", "LocalRing",
    "Ideal", "ideal_member", "ideal_equal", "ideal_colon", "ideal_codim",
    "pfaffian", "sub_pfaffians", "submaximal_pfaffian_vector",
    "QuadSpace", "LagSub", "hyperbolic", "is_lagrangian",
    "PairData", "graph_pair", "split_pair", "common_complement",
    "degeneracy_ideal", "symmetric_degeneracy_ideal",
    "ChainComplex", "be_complex", "check_exactness", "dual_diagram",
    "symmetric_codim1_resolution", "colon_equations", "euler_characteristic",
]
__version__ = "0.1.0"

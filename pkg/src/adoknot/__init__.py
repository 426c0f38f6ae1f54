"""ADO (colored Alexander) invariants of knots from braid words.

The invariant is computed as a weighted sum of weight-zero partial traces of
level-N Lawrence representations, in exact arithmetic over Z[xi_N][t^{+-1}].
"""

from .ado import (
    InvariantResult,
    ado_invariant,
    burau_alexander,
    dense_partial_trace_oracle,
    hptr0,
)
from .braid import BraidWord, NotAKnotError, closure_component_count, markov_moves, parse_braid, writhe
from .rings import CycInt, LaurentQS, LaurentXD, SpecLaurent, SpecializationParams
from .verma import DEFAULT_CONVENTION, Convention, braiding_on_pair
from .weightrep import SparseRepMatrix, WeightBasis, enumerate_basis, generator_matrix, rep_matrix

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "Convention",
    "CycInt",
    "DEFAULT_CONVENTION",
    "InvariantResult",
    "LaurentQS",
    "LaurentXD",
    "NotAKnotError",
    "SparseRepMatrix",
    "SpecLaurent",
    "SpecializationParams",
    "WeightBasis",
    "ado_invariant",
    "braiding_on_pair",
    "burau_alexander",
    "closure_component_count",
    "dense_partial_trace_oracle",
    "enumerate_basis",
    "generator_matrix",
    "hptr0",
    "markov_moves",
    "parse_braid",
    "rep_matrix",
    "writhe",
]

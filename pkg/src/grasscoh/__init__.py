"""Exact cohomology rings of classical Grassmannians and their Clifford deformations."""

from .catalog import SpaceSpec, build_ring, euler_characteristic, gaussian_binomial, lookup, lookup_kind
from .errors import (GrasscohError, InvariantViolation, ParseError, PreconditionError, RangeError,
                     ShapeError, SpaceLookupError, UnsupportedCase)
from .exterior import ExteriorDescriptor, ExteriorElement
from .hpq import RingDescriptor, RingElement, basis, multiply, normal_form, poincare_polynomial
from .poly import Polynomial, parse_polynomial
from .schur import Partition, jacobi_trudi, pieri_oracle, schur_multiply
from .squarefree import SquarefreeDescriptor, SquarefreeElement, normal_form_sf
from .tables import multiplication_table

__version__ = "0.1.0"

__all__ = [
    "SpaceSpec", "build_ring", "euler_characteristic", "gaussian_binomial", "lookup", "lookup_kind",
    "GrasscohError", "InvariantViolation", "ParseError", "PreconditionError", "RangeError",
    "ShapeError", "SpaceLookupError", "UnsupportedCase",
    "ExteriorDescriptor", "ExteriorElement",
    "RingDescriptor", "RingElement", "basis", "multiply", "normal_form", "poincare_polynomial",
    "Polynomial", "parse_polynomial",
    "Partition", "jacobi_trudi", "pieri_oracle", "schur_multiply",
    "SquarefreeDescriptor", "SquarefreeElement", "normal_form_sf",
    "multiplication_table",
]

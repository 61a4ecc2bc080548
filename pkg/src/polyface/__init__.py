"""polyface: face lattices of polytopes and pseudomanifolds, face-count
bounds for few vertices, and GF(2) topological checks."""
from .errors import (CycleDetected, FaceNotInComplex, FacetNotSimplex, MalformedLattice, NotBounded,
                     NotComparable, NotGraded, OutOfFormulaRange, ParseError, PolyfaceError,
                     PreconditionViolated, SizeLimit, SpecInvariantViolated, UnknownTheorem)
from .lattice import FVector, GradedLattice, build_from_covers, dual, pyramid
from .reports import CheckReport
from .simplicial import SimplicialComplex
from .specs import parse_spec, realize

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "CycleDetected", "FVector", "FaceNotInComplex", "FacetNotSimplex", "GradedLattice",
    "MalformedLattice", "NotBounded", "NotComparable", "NotGraded", "OutOfFormulaRange", "ParseError",
    "PolyfaceError", "PreconditionViolated", "SimplicialComplex", "SizeLimit", "SpecInvariantViolated",
    "UnknownTheorem", "build_from_covers", "dual", "parse_spec", "pyramid", "realize",
]

"""polefeed: pole placement by dynamic output feedback.

Computes dynamic output-feedback compensators that place the poles of a
linear MIMO plant, by continuation on frequency-domain intersection
conditions, plus the symbolic-numeric kernels this rests on: simultaneous
root finding, approximate GCD, and Smith normal forms of polynomial
matrices.
"""

from .apgcd import BenchReport, GcdResult, gcd_advanced, gcd_bench, gcd_naive
from .errors import (
    DimensionMismatch,
    DuplicateNode,
    DuplicatePoles,
    GcdFailure,
    InconsistentRealization,
    InfiniteCondition,
    MatchingAmbiguity,
    NoConvergence,
    NotProper,
    OverdeterminedProblem,
    ParseError,
    PolefeedError,
    PoleOfCompensator,
    PoleOfPlant,
    ProbeSingular,
    SingularDh,
    SingularMatrix,
    ZeroPolynomial,
)
from .polycore import Poly, RootSet, from_roots, newton_interpolate, roots

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]

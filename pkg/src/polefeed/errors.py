"""Exception types raised across the polefeed package."""

from __future__ import annotations


class PolefeedError(Exception):
    """Base class for all polefeed errors."""


class ZeroPolynomial(PolefeedError):
    """An operation received the zero polynomial where a nonzero one is required."""


class NoConvergence(PolefeedError):
    """An iteration stalled before reaching its tolerance.

    Carries the best iterate and its residuals so callers can inspect
    how close the method got.
    """

    def __init__(self, message, best=None, residuals=None):
        super().__init__(message)
        self.best = best
        self.residuals = residuals


class DuplicateNode(PolefeedError):
    """Interpolation abscissae closer than the separation threshold."""


class MatchingAmbiguity(PolefeedError):
    """Root pairing changes under a small perturbation of the threshold."""


class GcdFailure(PolefeedError):
    """A gcd step inside a matrix reduction failed; carries entry position."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class SingularMatrix(PolefeedError):
    """Polynomial matrix has a numerically zero determinant."""


class DimensionMismatch(PolefeedError):
    """Matrix or pole-list dimensions are inconsistent."""


class PoleOfPlant(PolefeedError):
    """An evaluation point collides with an open-loop plant pole."""


class PoleOfCompensator(PolefeedError):
    """An evaluation point collides with a compensator pole."""


class DuplicatePoles(PolefeedError):
    """Two requested interpolation points are closer than the separation bound."""


class OverdeterminedProblem(PolefeedError):
    """More pole conditions than unknowns; carries the least feasible order."""

    def __init__(self, message, min_q=None):
        super().__init__(message)
        self.min_q = min_q


class NotProper(PolefeedError):
    """Numerator column degree exceeds the matching denominator column degree."""


class SingularDh(PolefeedError):
    """Leading column-coefficient matrix of the denominator is singular."""


class InconsistentRealization(PolefeedError):
    """Coefficient matching left a residual above tolerance."""


class ProbeSingular(PolefeedError):
    """A probe point for a rational evaluation hit a pole of the denominator."""


class InfiniteCondition(PolefeedError):
    """Left and right eigenvectors are numerically orthogonal."""


class ParseError(PolefeedError):
    """A file or CLI argument could not be parsed."""

"""Exceptions raised across the package.

Domain errors (everything except ExpressionSyntaxError) map to CLI exit
status 1; syntax errors map to exit status 2.
"""

from __future__ import annotations


class PolymonError(Exception):
    """Base class for all domain errors."""


class TooFewGenerators(PolymonError):
    """Alphabet size below 2; the structure degenerates there."""


class AlphabetMismatch(PolymonError):
    """Binary operation applied to elements over different alphabets."""


class UnknownLetter(PolymonError):
    """Letter index outside the alphabet."""


class ZeroHasNoDownset(PolymonError):
    """Zero is not a normal form and has no prefix set."""


class ZeroArgument(PolymonError):
    """Operation requires nonzero arguments."""


class KeyMismatch(PolymonError):
    """Witness requested for elements in different R-classes."""


class InfiniteAlphabet(PolymonError):
    """Finite enumeration requested over the countable alphabet."""


class EqualPair(PolymonError):
    """Congruence seed must identify two distinct elements."""


class ZeroTarget(PolymonError):
    """Witness family target must be nonzero."""


class RadiusTooSmall(PolymonError):
    """Ball radius too small to meet the class being counted."""


class SolverBoundError(PolymonError):
    """A solution appeared in the sentinel band above the solver bound.

    This never fires unless the bound argument for the solver is wrong;
    it exists so a bound violation surfaces loudly instead of silently
    truncating the solution set.
    """


class ExpressionSyntaxError(PolymonError):
    """Malformed expression text; carries the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position

"""Library error types.

Every error carries a stable ``code`` equal to its class name so the CLI can
report it without inspecting message text.
"""

from __future__ import annotations


class SteinerError(ValueError):
    """Base class for errors raised by steiner_kit."""

    @property
    def code(self) -> str:
        return type(self).__name__


class BoundarySquareNonzero(SteinerError):
    """The differential of a basis element has a nonzero boundary."""


class AugmentationNonzeroOnBoundary(SteinerError):
    """e∘∂ is nonzero on a dimension-1 basis element."""


class UnknownBasisId(SteinerError):
    """A referenced id is not in the basis of the complex."""


class GradingViolation(SteinerError):
    """A value lives in the wrong dimension."""


class NotHomogeneous(SteinerError):
    """A chain mixes dimensions where one dimension is required."""


class NotCoherent(SteinerError):
    """A chain does not have augmentation 1."""


class CycleDetected(SteinerError):
    """An order relation has a directed cycle."""


class NotCoherentTable(SteinerError):
    """A Steiner table is malformed or does not have augmentation 1."""


class NotComposable(SteinerError):
    """Operands of a composition do not share the required boundary."""


class NothingToDecompose(SteinerError):
    """The cell has composition degree -1."""


class BadIndex(SteinerError):
    """An index or dimension argument is out of range."""


class WordTooLong(SteinerError):
    """A signature word is longer than the simplex dimension."""


class BoundaryMismatch(SteinerError):
    """A morphism does not commute with the differential."""


class AugmentationMismatch(SteinerError):
    """A morphism does not preserve the augmentation."""


class NegativeImage(SteinerError):
    """A morphism sends a basis element outside the positive monoid."""


class MixedComplexError(SteinerError):
    """Basis elements of different complexes were combined."""


class MalformedInput(SteinerError):
    """A JSON document does not have the expected shape."""


class InvariantViolation(SteinerError):
    """An internal invariant of a construction failed."""

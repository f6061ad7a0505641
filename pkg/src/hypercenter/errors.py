"""Exception types shared across the package.

The CLI maps these onto process exit codes, so computational layers
raise them rather than printing.
"""

from __future__ import annotations


class HypercenterError(Exception):
    """Base class for all package-specific failures."""


class InputFormatError(HypercenterError):
    """Instance file could not be parsed or failed validation."""


class MixedCenterUnsupported(HypercenterError):
    """A finite part mixes with the torus in the center.

    Raised when a non-inner coset would contribute central elements
    that are not products of a diagonalizable point and a fixed finite
    element; the standard-subgroup format cannot express those.
    """

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class UndeterminedLimit(HypercenterError):
    """A limit stage could not be certified within the step budget."""


class PreconditionViolated(HypercenterError):
    """An operation's normality or shape preconditions do not hold."""


class NotConnected(PreconditionViolated):
    """Operation requires a connected group (trivial finite part)."""


class ChainNotDescending(HypercenterError):
    """The step operator does not map the start subgroup into itself."""


class NotAscending(HypercenterError):
    """A chain of subgroups fails to ascend."""


class Cancelled(HypercenterError):
    """A long-running computation was stopped by its cancellation check."""

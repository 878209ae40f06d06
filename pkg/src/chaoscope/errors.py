"""Exception hierarchy.

``ChaoscopeError`` is the common base. Argument validation raises
``InvalidArgumentError`` (a ``ValueError``); everything that can fail for
numerical reasons derives from ``NumericError`` so the CLI can map it to a
dedicated exit code.
"""


class ChaoscopeError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(ChaoscopeError, ValueError):
    """A precondition on an argument was violated."""


class NumericError(ChaoscopeError):
    """A numerical procedure failed or left its validity domain."""


class PairingAmbiguousError(NumericError):
    """Adjacent-level pairing gap too large for Kramers deduplication."""

    def __init__(self, index, gap, tolerance):
        self.index = index
        self.gap = gap
        self.tolerance = tolerance
        super().__init__(
            f"pairing-ambiguous: pair at sorted index {index} has gap "
            f"{gap:.3e}, above tolerance {tolerance:.3e}"
        )


class UnfoldingFailedError(NumericError):
    """Staircase polynomial fit is ill conditioned."""


class FitFailedError(NumericError):
    """A parameter fit did not bracket or reach a usable minimum."""


class FitInternalError(NumericError):
    """Internal constraint solve of a fit distribution did not converge."""


class InsufficientDataError(NumericError):
    """Not enough levels/windows/spacings for the requested statistic."""


class PrecisionLossError(NumericError):
    """Quadrature self-estimate exceeded the accuracy budget."""


class NearResonanceError(NumericError):
    """A perturbative energy denominator fell below the resonance guard."""


class DiagonalizationFailedError(NumericError):
    """Dense eigensolver failed; carries the offending configuration."""


class EmptyShellError(NumericError):
    """No accessible initial conditions on the requested energy shell."""


class SingularOrbitError(NumericError):
    """Trajectory approached the collision/coordinate singularity."""

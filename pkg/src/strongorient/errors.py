"""Exception types shared across the library."""


class StrongOrientError(Exception):
    """Base class for all library errors."""


class PreconditionError(StrongOrientError):
    """Input graph violates a documented precondition (names the condition)."""


class InternalError(StrongOrientError):
    """An invariant that should hold for every accepted input was violated."""


class ConflictError(StrongOrientError):
    """An edge was asked to carry both directions.

    Signals that two orientation rules disagree; the pipeline aborts loudly
    rather than overwrite.
    """

    def __init__(self, edge, existing, wanted, stage):
        self.edge = edge
        self.existing = existing
        self.wanted = wanted
        self.stage = stage
        super().__init__(
            f"edge {edge}: already {existing}, stage {stage!r} wants {wanted}"
        )


class NotFound(StrongOrientError):
    """A required mixed walk / cycle does not exist in the current state."""


class InvalidRs(StrongOrientError):
    """The (R, S) pair does not satisfy the two-set orientation preconditions."""


class ConstructionFailure(StrongOrientError):
    """A stage failed; wraps ConflictError / NotFound with stage diagnostics."""

    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage {stage!r} failed: {cause}")


class TooLarge(StrongOrientError):
    """Instance exceeds the exhaustive-search edge cap."""

"""Shared exception types."""


class FormatError(ValueError):
    """Raised on malformed hypergraph or design files."""


class GaveUpError(RuntimeError):
    """A randomized procedure exhausted its retry/resample budget."""


class StuckError(RuntimeError):
    """An augmentation solver could not make progress.

    Diagnostic only: it names the step that failed and can only occur when
    the co-degree hypothesis backing the algorithm does not hold.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason

"""Exception types shared across the engine."""


class RacotError(Exception):
    """Base class for all engine errors."""


class IngestError(RacotError):
    """Malformed corpus input; message names the offending line."""


class ManifestError(RacotError):
    """Missing or version-incompatible on-disk artifact."""


class TemplateError(RacotError):
    """Prompt template problem (unknown id, unbound placeholder)."""


class ParseError(RacotError):
    """Model reply did not match the required structure.

    Carries the raw reply so callers can log or retry generation.
    """

    def __init__(self, message: str, raw: str = ""):
        super().__init__(message)
        self.raw = raw


class TransportError(RacotError):
    """Remote backend failure after bounded retries."""

    def __init__(self, message: str, endpoint: str = "", retryable: bool = False):
        super().__init__(message)
        self.endpoint = endpoint
        self.retryable = retryable


class ScriptMatchError(RacotError):
    """No mock script entry matched the rendered prompt."""


class ScoringError(RacotError):
    """Relevance scorer produced output that cannot be read as a probability."""

    def __init__(self, message: str, raw: str = ""):
        super().__init__(message)
        self.raw = raw


class GenerationError(RacotError):
    """Candidate generation yielded nothing usable."""


class RefinementError(RacotError):
    """Query refinement returned an empty completion."""

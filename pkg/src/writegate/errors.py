"""Domain errors shared across the service.

Every error carries a stable ``code`` (its class name) that is safe to put
on the wire. Raw provider text must never travel inside these messages;
it is logged server-side only.
"""

from __future__ import annotations


class FeedbackError(Exception):
    """Base class for all domain errors."""

    def __init__(self, message: str = ""):
        self.code = type(self).__name__
        self.message = message or self.code
        super().__init__(self.message)


# --- persona engine -------------------------------------------------------

class FileMissing(FeedbackError):
    """Pedagogy guide path does not name a readable file."""


class FileEmpty(FeedbackError):
    """Pedagogy guide file has no content."""


class UnknownPersona(FeedbackError):
    """Persona identifier outside the enumerated set."""


class EmptyEssay(FeedbackError):
    """Essay text is empty after trimming."""


class EmptyQuestion(FeedbackError):
    """Challenge question is empty after trimming."""


class EmptyDefense(FeedbackError):
    """Student defense is empty after trimming. The gating precondition."""


# --- provider boundary ----------------------------------------------------

class NoCredentials(FeedbackError):
    """Neither a user-supplied key nor a configured key is available."""


class AuthRejected(FeedbackError):
    """Provider refused the API key."""


class NetworkFailure(FeedbackError):
    """Provider unreachable or timed out."""


class ProviderError(FeedbackError):
    """Provider answered with a non-success status or unusable payload."""

    def __init__(self, status: int | None = None, message: str = ""):
        self.status = status
        if not message and status is not None:
            message = f"provider returned status {status}"
        super().__init__(message)


# --- structured output ----------------------------------------------------

class ExtractionFailed(FeedbackError):
    """No parsable object could be recovered from the provider text."""


class SchemaViolation(FeedbackError):
    """Extracted object is missing required fields or has empty ones."""

    def __init__(self, missing: list[str] | tuple[str, ...] = (), message: str = ""):
        self.missing = tuple(missing)
        if not message and self.missing:
            message = "missing or empty fields: " + ", ".join(self.missing)
        super().__init__(message)


# --- session export -------------------------------------------------------

class ParseFailure(FeedbackError):
    """Serialized session log is not valid JSON of the expected shape."""


class MalformedLog(FeedbackError):
    """Session log violates its own invariants."""

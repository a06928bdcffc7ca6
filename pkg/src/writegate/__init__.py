"""Writegate: an inquiry-only feedback service for argumentative writing.

The service constrains a language model to ask structured questions about
a student's essay and releases concrete revision suggestions only after
the student submits a written defense.
"""

__version__ = "0.1.0"

from .extraction import (
    ChallengeCard,
    ChallengeFeedback,
    UnlockResult,
    extract_object,
    normalize_for_match,
    validate_challenge,
    validate_unlock,
)
from .gateway import MockProvider, ProviderCredentials, resolve_key
from .personas import (
    PersonaConfig,
    PersonaId,
    assemble_challenge_prompt,
    assemble_unlock_prompt,
    get_persona,
    load_pedagogy_guide,
)
from .service import ServiceConfig, create_app

__all__ = [
    "ChallengeCard",
    "ChallengeFeedback",
    "MockProvider",
    "PersonaConfig",
    "PersonaId",
    "ProviderCredentials",
    "ServiceConfig",
    "UnlockResult",
    "assemble_challenge_prompt",
    "assemble_unlock_prompt",
    "create_app",
    "extract_object",
    "get_persona",
    "load_pedagogy_guide",
    "normalize_for_match",
    "resolve_key",
    "validate_challenge",
    "validate_unlock",
]

"""Raw provider text to validated, typed feedback.

Two-stage extraction (fenced block, then outermost braces), per-persona
schema validation, compat-field population for the generic client path,
and soft linting that warns without rejecting.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .errors import ExtractionFailed, SchemaViolation
from .personas import PersonaConfig, PersonaId

LABEL_FOR_FIELD = {
    "claim_question": "CLAIM",
    "reasoning_question": "REASONING",
    "counterargument_question": "COUNTERARGUMENT",
    "scope_or_implication_question": "SCOPE",
    "clarification_question": "CLARIFICATION",
    "co_construction_question": "CO_CONSTRUCTION",
}

CARD_LABELS = tuple(LABEL_FOR_FIELD.values())

# Opening fence must start a line; interior runs to the next line-initial fence.
_FENCE_RE = re.compile(r"^```json[^\n]*\n(.*?)^```", re.DOTALL | re.MULTILINE)

_QUOTE_TRANSLATION = str.maketrans({
    "“": '"',  # left double
    "”": '"',  # right double
    "„": '"',  # low double
    "‟": '"',  # high reversed double
    "‘": "'",  # left single
    "’": "'",  # right single
    "‚": "'",  # low single
    "‛": "'",  # high reversed single
})

_SENTENCE_END_RE = re.compile(r"[.!?](?=\s|$)")


@dataclass(frozen=True)
class ExtractedObject:
    """Flat name -> text map recovered from provider output."""

    fields: dict[str, str]


@dataclass(frozen=True)
class ChallengeCard:
    label: str
    question: str
    excerpt: str | None = None

    def __post_init__(self):
        if self.label not in CARD_LABELS:
            raise ValueError(f"label {self.label!r} outside the six-value set")
        if not self.question.strip():
            raise ValueError("card question must be non-empty")

    def to_wire(self) -> dict:
        out = {"label": self.label, "question": self.question}
        if self.excerpt is not None:
            out["excerpt"] = self.excerpt
        return out


@dataclass(frozen=True)
class ChallengeFeedback:
    persona: PersonaId
    cards: tuple[ChallengeCard, ...]
    compat: dict[str, str] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    def to_wire(self) -> dict:
        out = {
            "persona": self.persona.value,
            "cards": [card.to_wire() for card in self.cards],
            "warnings": list(self.warnings),
        }
        out.update(self.compat)
        return out


@dataclass(frozen=True)
class UnlockResult:
    suggestion: str
    tip: str

    def to_wire(self) -> dict:
        return {"suggestion": self.suggestion, "tip": self.tip}


def normalize_for_match(text: str) -> str:
    """Whitespace-collapse and straighten quotes for tolerant substring matching."""
    return re.sub(r"\s+", " ", text.translate(_QUOTE_TRANSLATION)).strip()


def extract_object(raw: str) -> ExtractedObject:
    """Recover a flat JSON object from arbitrary provider text.

    Stage 1 parses the interior of a ```json fenced block; stage 2 falls
    back to the span from the first ``{`` to the last ``}``. Values that
    are not flat text are dropped (numbers are stringified); nothing here
    ever aborts on weird input.
    """
    candidates = []
    fenced = _FENCE_RE.search(raw)
    if fenced:
        candidates.append(fenced.group(1))
    start = raw.find("{")
    end = raw.rfind("}")
    if start != -1 and end > start:
        candidates.append(raw[start : end + 1])
    for candidate in candidates:
        try:
            parsed = json.loads(candidate)
        except json.JSONDecodeError:
            continue
        if isinstance(parsed, dict):
            return ExtractedObject(fields=_flatten(parsed))
    raise ExtractionFailed("no parsable object in provider output")


def _flatten(parsed: dict) -> dict[str, str]:
    fields: dict[str, str] = {}
    for name, value in parsed.items():
        if isinstance(value, str):
            fields[str(name)] = value
        elif isinstance(value, (int, float)) and not isinstance(value, bool):
            fields[str(name)] = str(value)
        # nested structures, booleans, and nulls are not flat text: dropped
    return fields


def count_sentences(text: str) -> int:
    """Coarse sentence count: terminators followed by space or end of text."""
    stripped = text.strip()
    if not stripped:
        return 0
    count = len(_SENTENCE_END_RE.findall(stripped))
    if stripped[-1] not in ".!?":
        count += 1
    return count


def validate_challenge(
    obj: ExtractedObject, persona: PersonaConfig, essay: str
) -> ChallengeFeedback:
    """Check the extracted object against the persona schema.

    Missing or empty question fields are a hard error. Excerpts are soft:
    one that cannot be located in the essay (after normalization) is
    dropped with a warning, because the question is the payload and the
    highlight is an enhancement. Over-long questions only warn.
    """
    missing = [
        name for name in persona.question_fields
        if not obj.fields.get(name, "").strip()
    ]
    if missing:
        raise SchemaViolation(missing)

    normalized_essay = normalize_for_match(essay)
    cards = []
    warnings = []
    for name in persona.question_fields:
        question = obj.fields[name].strip()
        excerpt = obj.fields.get(persona.excerpt_field(name), "").strip() or None
        if excerpt is not None and normalize_for_match(excerpt) not in normalized_essay:
            warnings.append(
                f"{persona.excerpt_field(name)} not found in essay; excerpt dropped"
            )
            excerpt = None
        if count_sentences(question) > 3:
            warnings.append(f"{name} exceeds 3 sentences")
        cards.append(
            ChallengeCard(label=LABEL_FOR_FIELD[name], question=question, excerpt=excerpt)
        )

    compat: dict[str, str] = {}
    if persona.id is PersonaId.CONFUSED_READER:
        compat = {
            "claim_question": cards[0].question,
            "reasoning_question": cards[1].question,
        }
    return ChallengeFeedback(
        persona=persona.id,
        cards=tuple(cards),
        compat=compat,
        warnings=tuple(warnings),
    )


def validate_unlock(obj: ExtractedObject) -> UnlockResult:
    """Both fields of the minimal unlock schema must be present and non-empty."""
    missing = [
        name for name in ("suggestion", "tip")
        if not obj.fields.get(name, "").strip()
    ]
    if missing:
        raise SchemaViolation(missing)
    return UnlockResult(
        suggestion=obj.fields["suggestion"].strip(),
        tip=obj.fields["tip"].strip(),
    )

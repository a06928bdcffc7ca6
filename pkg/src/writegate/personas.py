"""Critical personas, the pedagogy guide, and composite-prompt assembly.

All prompt text other than the pedagogy guide lives here as versioned
constants, so ordering and containment checks stay deterministic. The
guide is the single piece of file-loaded context, read once at startup.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Literal

from .errors import (
    EmptyDefense,
    EmptyEssay,
    EmptyQuestion,
    FileEmpty,
    FileMissing,
    UnknownPersona,
)


class PersonaId(str, Enum):
    REVIEWER2 = "reviewer2"
    CONFUSED_READER = "confusedReader"


@dataclass(frozen=True)
class PersonaConfig:
    id: PersonaId
    system_prompt: str
    question_fields: tuple[str, ...]
    question_count: int
    schema_block: str

    def excerpt_field(self, question_field: str) -> str:
        """Parallel optional excerpt field for a question field."""
        return question_field.removesuffix("_question") + "_excerpt"


@dataclass(frozen=True)
class GuideText:
    content: str
    line_count: int


@dataclass(frozen=True)
class PromptText:
    content: str
    phase: Literal["challenge", "unlock"]


REVIEWER2_SYSTEM_PROMPT = """\
You are "Reviewer 2": a high-level academic peer reviewer with deep expertise.
Your Perspective: Expert. You assume the author should be rigorous. You are allergic to logical leaps, weak evidence, and circular reasoning.
Your Task:
1. Ignore prose, grammar, or flow. Focus strictly on the structural integrity of the argument.
2. Identify the single most significant logical "black hole" or theoretical flaw.
3. Pose one sharp, challenging question that forces the author to defend their core thesis.
Tone: Cold, clinical, and intellectually demanding. Do NOT suggest fixes. Do NOT be polite.
4. Ask one claim, one reasoning, one counterargument question, and one scope or implication question."""

CONFUSED_READER_SYSTEM_PROMPT = """\
You are "The Confused Reader": an intelligent outsider reading this essay with no background in its subject.
Your Perspective: Novice. The author knows far more than you, and that gap is exactly what you report on.
Your Task:
1. Notice every place the reading effort spikes: jargon, terms used before they are explained, or jumps between ideas with steps missing.
2. Pinpoint the exact spot where you first felt lost.
3. Ask the writer to walk you through it, the way a genuinely puzzled reader would.
Tone: Honest, curious, slightly frustrated. You refuse to pretend you understood something you did not.
4. Ask one clarification question and one co-construction question inviting the writer to brainstorm alternatives with you."""

TUTOR_SYSTEM_PROMPT = """\
You are a helpful writing tutor sitting down with a student who has just defended a choice in their draft.
The challenge phase is over; the student has done the reflective work, and now you help them fold that reasoning back into the draft.
Read the challenge question, the student's written defense, and the essay, then build on the best idea in the defense instead of substituting your own.
Offer one specific, actionable revision suggestion that uses the student's reasoning, plus one short transferable writing tip.
Keep the tone warm, encouraging, and practical."""

GLOBAL_CONSTRAINTS = """\
Global rules for everything you produce:
- Do NOT rewrite the student's text.
- Do NOT evaluate with words like "unclear", "weak", or "insufficient".
- Avoid yes/no questions.
- Avoid leading the student toward a specific answer.
- Avoid paraphrasing large chunks of the student's text."""

INTERNAL_NOTICE = (
    "The reference guide below is for your internal use only, "
    "do not quote or mention it explicitly."
)

INTERNAL_REASONING_PROTOCOL = """\
Before writing anything, work through these steps silently. None of this reasoning may appear in your output.
1. Argument segmentation: decompose the essay into claims, sub-claims, evidence instances, counterarguments, rebuttals, conclusions, definitions, and normative recommendations.
2. Issue detection: check for overgeneralization, evidence-reasoning gaps, weak counterarguments, conceptual ambiguity, causal leaps, normative claims without value frameworks, and missing implications.
3. Epistemic state classification: infer a holistic characterization of the essay's argumentative state (for example: assertion-heavy, reasoning-light, dialectically shallow, conceptually vague, mechanistically incomplete, normatively under-justified).
4. Trigger prioritization: Rank the top 2-3 issues and question only those, to avoid cognitive overload on the student."""

_SCHEMA_RULES = """\
Every question must stand alone as plain prose with no bullet lists, must not exceed 2-3 sentences, and must not contain concrete suggestions or replacement text.
Each excerpt, when given, must be copied verbatim from the essay so it can be located by exact match. Omit excerpt fields you do not use."""

REVIEWER2_SCHEMA_BLOCK = f"""\
Respond with a single JSON object and nothing else, in exactly this shape:
{{
  "claim_question": "...",
  "reasoning_question": "...",
  "counterargument_question": "...",
  "scope_or_implication_question": "...",
  "claim_excerpt": "OPTIONAL: ...",
  "reasoning_excerpt": "OPTIONAL: ...",
  "counterargument_excerpt": "OPTIONAL: ...",
  "scope_or_implication_excerpt": "OPTIONAL: ..."
}}
{_SCHEMA_RULES}"""

CONFUSED_READER_SCHEMA_BLOCK = f"""\
Respond with a single JSON object and nothing else, in exactly this shape:
{{
  "clarification_question": "...",
  "co_construction_question": "...",
  "clarification_excerpt": "OPTIONAL: ...",
  "co_construction_excerpt": "OPTIONAL: ..."
}}
{_SCHEMA_RULES}"""

UNLOCK_SCHEMA_BLOCK = """\
Respond with a single JSON object and nothing else, in exactly this shape:
{
  "suggestion": "...",
  "tip": "..."
}
The suggestion must be specific enough to act on today; the tip must be one transferable piece of writing advice."""

ESSAY_HEADER = (
    "The student's essay follows. Everything after this line is the essay, reproduced exactly."
)

SEGMENT_SEPARATOR = "\n\n"

PERSONAS: dict[PersonaId, PersonaConfig] = {
    PersonaId.REVIEWER2: PersonaConfig(
        id=PersonaId.REVIEWER2,
        system_prompt=REVIEWER2_SYSTEM_PROMPT,
        question_fields=(
            "claim_question",
            "reasoning_question",
            "counterargument_question",
            "scope_or_implication_question",
        ),
        question_count=4,
        schema_block=REVIEWER2_SCHEMA_BLOCK,
    ),
    PersonaId.CONFUSED_READER: PersonaConfig(
        id=PersonaId.CONFUSED_READER,
        system_prompt=CONFUSED_READER_SYSTEM_PROMPT,
        question_fields=(
            "clarification_question",
            "co_construction_question",
        ),
        question_count=2,
        schema_block=CONFUSED_READER_SCHEMA_BLOCK,
    ),
}


def is_blank(text: str) -> bool:
    """True when text carries no payload: whitespace and control characters only."""
    return all(ch.isspace() or unicodedata.category(ch).startswith("C") for ch in text)


def load_pedagogy_guide(path: Path | str) -> GuideText:
    """Read the guide once at startup. Failure here must abort startup."""
    path = Path(path)
    try:
        content = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise FileMissing(f"pedagogy guide not found at {path}") from None
    except IsADirectoryError:
        raise FileMissing(f"pedagogy guide path {path} is a directory") from None
    if not content.strip():
        raise FileEmpty(f"pedagogy guide at {path} is empty")
    return GuideText(content=content, line_count=len(content.splitlines()))


def get_persona(persona: PersonaId | str | None = None) -> PersonaConfig:
    """Resolve a persona identifier; absent means reviewer2."""
    if persona is None or persona == "":
        return PERSONAS[PersonaId.REVIEWER2]
    try:
        persona_id = PersonaId(persona)
    except ValueError:
        raise UnknownPersona(f"unknown persona {persona!r}") from None
    return PERSONAS[persona_id]


def assemble_challenge_prompt(
    essay: str, persona: PersonaConfig, guide: GuideText
) -> PromptText:
    """Concatenate the six challenge segments in their fixed order.

    Order: persona system prompt, global constraints, internal-notice-prefaced
    guide, internal reasoning protocol, persona schema block, essay verbatim.
    The essay is always the final bytes of the prompt.
    """
    if is_blank(essay):
        raise EmptyEssay("essay is required")
    segments = (
        persona.system_prompt,
        GLOBAL_CONSTRAINTS,
        INTERNAL_NOTICE + "\n" + guide.content,
        INTERNAL_REASONING_PROTOCOL,
        persona.schema_block,
        ESSAY_HEADER + SEGMENT_SEPARATOR + essay,
    )
    return PromptText(content=SEGMENT_SEPARATOR.join(segments), phase="challenge")


def assemble_unlock_prompt(
    essay: str,
    label: str,
    excerpt: str | None,
    question: str,
    defense: str,
) -> PromptText:
    """Build the supportive tutor prompt for the gated suggestion phase.

    The adversarial persona prompts never appear here; the tutor persona is
    a disjoint block of text.
    """
    if is_blank(defense):
        raise EmptyDefense("a written defense is required before suggestions unlock")
    if is_blank(question):
        raise EmptyQuestion("the original challenge question is required")
    if is_blank(essay):
        raise EmptyEssay("essay is required")

    context_lines = []
    if label and not is_blank(label):
        context_lines.append(f"Challenge category: {label}")
    context_lines.append(f"Original challenge question: {question}")
    if excerpt and not is_blank(excerpt):
        context_lines.append(f"Essay passage the question pointed at: {excerpt}")
    context_lines.append(f"The student's written defense: {defense}")

    segments = (
        TUTOR_SYSTEM_PROMPT,
        "\n".join(context_lines),
        UNLOCK_SCHEMA_BLOCK,
        ESSAY_HEADER + SEGMENT_SEPARATOR + essay,
    )
    return PromptText(content=SEGMENT_SEPARATOR.join(segments), phase="unlock")

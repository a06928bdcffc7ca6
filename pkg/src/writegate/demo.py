"""Pre-baked demo data: sample essay, feedback for both personas, and
unlock suggestions for all six question types.

The bundle is built by pushing the raw fixture fields through the real
validators, so it cannot drift out of sync with the schema rules, and it
never touches a provider.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .extraction import (
    ChallengeFeedback,
    ExtractedObject,
    UnlockResult,
    validate_challenge,
    validate_unlock,
)
from .personas import PersonaId, get_persona

DEMO_ESSAY = """\
Driverless Cars Are the Future

Everyone knows that human drivers make mistakes, so driverless cars will always be the safer choice. Last year my uncle got into a fender bender in a parking lot, which shows that people simply cannot be trusted behind the wheel. If every city switches to smart systems, accidents will basically disappear.

Letting computers do the driving leads to faster trips for everybody. The cars talk to each other, so there is never a traffic jam, and nobody wastes time looking for parking. That time adds up to whole days people get back every year.

Some people say hackers could take over the cars, but that will probably be fixed soon. The real point is that smart systems never get tired, never get angry, and never text while driving. A computer does not drink coffee or argue with the radio.

Cities should replace regular cars with driverless ones as fast as possible. Once the smart systems are everywhere, even kids and grandparents will get wherever they need to go. The future is coming either way, so we might as well be the first ones there."""

_REVIEWER2_FIELDS = {
    "claim_question": (
        "Your thesis promises that driverless cars will 'always' be the safer "
        "choice. What evidence carries the weight of 'always' rather than "
        "'usually', and how would the argument change if you claimed less?"
    ),
    "claim_excerpt": "driverless cars will always be the safer choice",
    "reasoning_question": (
        "How does one parking-lot fender bender establish that people in "
        "general cannot be trusted to drive? What links that single story to "
        "the rule you draw from it?"
    ),
    "reasoning_excerpt": (
        "Last year my uncle got into a fender bender in a parking lot, which "
        "shows that people simply cannot be trusted behind the wheel."
    ),
    "counterargument_question": (
        "You give the hacking concern one sentence before setting it aside. "
        "What would the strongest version of that objection say, and how "
        "would your argument answer it?"
    ),
    "counterargument_excerpt": (
        "Some people say hackers could take over the cars, but that will "
        "probably be fixed soon."
    ),
    "scope_or_implication_question": (
        "Your conclusion asks cities to act 'as fast as possible'. Which "
        "kinds of cities, streets, and travellers does your argument actually "
        "cover, and what happens to the ones it leaves out?"
    ),
    "scope_or_implication_excerpt": (
        "Cities should replace regular cars with driverless ones as fast as "
        "possible."
    ),
}

_CONFUSED_READER_FIELDS = {
    "clarification_question": (
        "The essay leans on 'smart systems' in three different places, and I "
        "still do not know what one is. What exactly does the term include, "
        "and what does it leave out?"
    ),
    "clarification_excerpt": "If every city switches to smart systems",
    "co_construction_question": (
        "You write that computer driving leads to faster trips for everybody. "
        "What are two or three different ways that could actually come about, "
        "and which of them does your essay depend on?"
    ),
    "co_construction_excerpt": (
        "Letting computers do the driving leads to faster trips for everybody."
    ),
}

_UNLOCK_FIELDS = {
    "CLAIM": {
        "suggestion": (
            "Soften the thesis from a promise about 'always' to a claim your "
            "evidence can carry: name the specific situations, such as highway "
            "driving or routine commutes, where the safety case is strongest, "
            "and stake your claim there."
        ),
        "tip": (
            "A claim you can fully defend beats a bigger claim you cannot; "
            "precision is persuasive."
        ),
    },
    "REASONING": {
        "suggestion": (
            "Give the fender-bender story a bridge the reader can cross: state "
            "the general pattern first (most crashes trace back to human "
            "error), say where that pattern comes from, and then use your "
            "uncle's story as one illustration of it."
        ),
        "tip": (
            "After each piece of evidence, write one sentence starting with "
            "'This shows...' and check that it really does."
        ),
    },
    "COUNTERARGUMENT": {
        "suggestion": (
            "Give the hacking objection its own paragraph: state it in its "
            "strongest form, concede what is genuinely worrying about it, then "
            "explain the specific safeguards or trade-offs that still favor "
            "your position."
        ),
        "tip": (
            "Treat your opponent's best argument as a guest, not an intruder; "
            "a rebuttal only counts against the strongest version."
        ),
    },
    "SCOPE": {
        "suggestion": (
            "Add a boundary sentence to the conclusion naming where your "
            "recommendation applies first, for example dense cities with "
            "well-mapped streets, and acknowledge the places it does not fit "
            "yet."
        ),
        "tip": "Saying where your argument stops is part of saying what it is.",
    },
    "CLARIFICATION": {
        "suggestion": (
            "Define 'smart systems' the first time the phrase appears: one "
            "sentence on what hardware and software you mean, one on what the "
            "term does not include, then use it the same way everywhere."
        ),
        "tip": (
            "Define a key term once, early, and in your own words; every later "
            "use earns interest on that clarity."
        ),
    },
    "CO_CONSTRUCTION": {
        "suggestion": (
            "Spell out the mechanism behind 'leads to faster trips': pick the "
            "pathway your essay depends on, such as coordinated routing or "
            "fewer crash delays, and walk the reader through it step by step."
        ),
        "tip": (
            "Whenever you write 'leads to', ask yourself 'by what steps?' and "
            "write those steps down."
        ),
    },
}


@dataclass(frozen=True)
class DemoBundle:
    essay: str
    feedback: Mapping[PersonaId, ChallengeFeedback]
    unlocks: Mapping[str, UnlockResult]

    def to_wire(self) -> dict:
        return {
            "essay": self.essay,
            "feedback": {
                persona.value: feedback.to_wire()
                for persona, feedback in self.feedback.items()
            },
            "unlocks": {
                label: result.to_wire() for label, result in self.unlocks.items()
            },
        }


@lru_cache(maxsize=1)
def get_demo_bundle() -> DemoBundle:
    """The static bundle; identical object across calls."""
    feedback = {}
    for persona_id, fields in (
        (PersonaId.REVIEWER2, _REVIEWER2_FIELDS),
        (PersonaId.CONFUSED_READER, _CONFUSED_READER_FIELDS),
    ):
        persona = get_persona(persona_id)
        feedback[persona_id] = validate_challenge(
            ExtractedObject(fields=dict(fields)), persona, DEMO_ESSAY
        )
    unlocks = {
        label: validate_unlock(ExtractedObject(fields=dict(fields)))
        for label, fields in _UNLOCK_FIELDS.items()
    }
    return DemoBundle(
        essay=DEMO_ESSAY,
        feedback=MappingProxyType(feedback),
        unlocks=MappingProxyType(unlocks),
    )

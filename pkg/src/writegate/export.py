"""Session log parsing and the print-ready interaction document.

Everything that came from a student or a model is entity-escaped before it
reaches the document; the output is standalone HTML with inline styles and
no scripts, safe to open from disk.
"""

from __future__ import annotations

import html
import json
from dataclasses import dataclass, field

from .errors import MalformedLog, ParseFailure
from .personas import PersonaId, is_blank

ESSAY_EXCERPT_CHARS = 500
ELLIPSIS = "…"


@dataclass(frozen=True)
class SessionEntry:
    label: str
    question: str
    excerpt: str | None
    defense: str
    suggestion: str
    tip: str
    unlocked_at: str = ""

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "question": self.question,
            "excerpt": self.excerpt,
            "defense": self.defense,
            "suggestion": self.suggestion,
            "tip": self.tip,
            "unlocked_at": self.unlocked_at,
        }


@dataclass(frozen=True)
class SessionLog:
    persona: PersonaId
    essay_excerpt: str
    entries: tuple[SessionEntry, ...]
    total_challenges: int
    unlocked_count: int

    def to_dict(self) -> dict:
        return {
            "persona": self.persona.value,
            "essay_excerpt": self.essay_excerpt,
            "entries": [entry.to_dict() for entry in self.entries],
            "total_challenges": self.total_challenges,
            "unlocked_count": self.unlocked_count,
        }


def make_essay_excerpt(essay: str) -> str:
    """Leading portion of the essay used as the document header."""
    if len(essay) <= ESSAY_EXCERPT_CHARS:
        return essay
    return essay[:ESSAY_EXCERPT_CHARS] + ELLIPSIS


def check_log(log: SessionLog) -> None:
    """Raise MalformedLog on any invariant breach."""
    if log.total_challenges < 0 or log.unlocked_count < 0:
        raise MalformedLog("counts must be non-negative")
    if log.unlocked_count != len(log.entries):
        raise MalformedLog(
            f"unlocked_count {log.unlocked_count} does not match "
            f"{len(log.entries)} entries"
        )
    if log.unlocked_count > log.total_challenges:
        raise MalformedLog("unlocked_count exceeds total_challenges")
    for index, entry in enumerate(log.entries):
        for name in ("question", "defense", "suggestion", "tip"):
            if is_blank(getattr(entry, name)):
                raise MalformedLog(f"entry {index} has an empty {name}")


def parse_session_log(serialized: str | bytes) -> SessionLog:
    """Typed log from UTF-8 JSON; shape errors are ParseFailure, invariant
    breaches are MalformedLog."""
    try:
        data = json.loads(serialized)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseFailure(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseFailure("session log must be a JSON object")

    try:
        persona = PersonaId(data.get("persona"))
    except ValueError:
        raise ParseFailure(f"unknown persona {data.get('persona')!r}") from None

    essay_excerpt = data.get("essay_excerpt", "")
    if not isinstance(essay_excerpt, str):
        raise ParseFailure("essay_excerpt must be text")

    raw_entries = data.get("entries", [])
    if not isinstance(raw_entries, list):
        raise ParseFailure("entries must be a list")
    entries = tuple(_parse_entry(raw, index) for index, raw in enumerate(raw_entries))

    total = data.get("total_challenges", 0)
    unlocked = data.get("unlocked_count", 0)
    for name, value in (("total_challenges", total), ("unlocked_count", unlocked)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ParseFailure(f"{name} must be an integer")

    log = SessionLog(
        persona=persona,
        essay_excerpt=essay_excerpt,
        entries=entries,
        total_challenges=total,
        unlocked_count=unlocked,
    )
    check_log(log)
    return log


def _parse_entry(raw: object, index: int) -> SessionEntry:
    if not isinstance(raw, dict):
        raise ParseFailure(f"entry {index} must be an object")
    texts = {}
    for name in ("label", "question", "defense", "suggestion", "tip"):
        value = raw.get(name, "")
        if not isinstance(value, str):
            raise ParseFailure(f"entry {index} field {name} must be text")
        texts[name] = value
    excerpt = raw.get("excerpt")
    if excerpt is not None and not isinstance(excerpt, str):
        raise ParseFailure(f"entry {index} field excerpt must be text or null")
    unlocked_at = raw.get("unlocked_at", "")
    if not isinstance(unlocked_at, str):
        raise ParseFailure(f"entry {index} field unlocked_at must be text")
    return SessionEntry(excerpt=excerpt, unlocked_at=unlocked_at, **texts)


_PAGE_STYLE = """\
    body { font-family: Georgia, 'Times New Roman', serif; color: #1c1c1c;
           max-width: 46rem; margin: 2rem auto; padding: 0 1rem; line-height: 1.55; }
    h1 { font-size: 1.5rem; border-bottom: 2px solid #1c1c1c; padding-bottom: 0.4rem; }
    .meta { color: #555; font-size: 0.9rem; margin-bottom: 1.5rem; }
    .essay-excerpt { background: #f6f6f2; border-left: 4px solid #b8b8a8;
                     padding: 0.75rem 1rem; white-space: pre-wrap; }
    .entry { border: 1px solid #ddd; border-radius: 6px; padding: 1rem 1.25rem;
             margin: 1.25rem 0; page-break-inside: avoid; }
    .label { display: inline-block; font-family: sans-serif; font-size: 0.75rem;
             letter-spacing: 0.06em; background: #1c1c1c; color: #fff;
             padding: 0.15rem 0.5rem; border-radius: 3px; }
    .field-name { font-family: sans-serif; font-size: 0.8rem; color: #555;
                  text-transform: uppercase; letter-spacing: 0.04em; margin: 0.8rem 0 0.1rem; }
    .field-text { margin: 0; white-space: pre-wrap; }
    blockquote.excerpt { margin: 0.4rem 0 0; padding-left: 0.8rem;
                         border-left: 3px solid #e0c35a; color: #444;
                         white-space: pre-wrap; font-style: italic; }
    .timestamp { color: #999; font-size: 0.75rem; margin-top: 0.8rem; }
    @media print { .entry { border-color: #999; } }
"""


def render_session_html(log: SessionLog) -> str:
    """Standalone, print-ready document for a completed session."""
    check_log(log)
    esc = lambda text: html.escape(text, quote=True)

    parts = [
        "<!DOCTYPE html>",
        '<html lang="en">',
        "<head>",
        '<meta charset="utf-8">',
        "<title>Writing Session Report</title>",
        f"<style>\n{_PAGE_STYLE}</style>",
        "</head>",
        "<body>",
        "<h1>Writing Session Report</h1>",
        f'<p class="meta">Persona: {esc(log.persona.value)} &middot; '
        f"Progress: {log.unlocked_count} of {log.total_challenges} challenges unlocked</p>",
        "<h2>Essay excerpt</h2>",
        f'<div class="essay-excerpt">{esc(log.essay_excerpt)}</div>',
    ]
    for number, entry in enumerate(log.entries, start=1):
        parts.append('<section class="entry">')
        parts.append(f'<span class="label">{esc(entry.label)}</span>')
        parts.append(f'<p class="field-name">Challenge {number}</p>')
        parts.append(f'<p class="field-text">{esc(entry.question)}</p>')
        if entry.excerpt:
            parts.append(f'<blockquote class="excerpt">{esc(entry.excerpt)}</blockquote>')
        parts.append('<p class="field-name">Your defense</p>')
        parts.append(f'<p class="field-text">{esc(entry.defense)}</p>')
        parts.append('<p class="field-name">Revision suggestion</p>')
        parts.append(f'<p class="field-text">{esc(entry.suggestion)}</p>')
        parts.append('<p class="field-name">Writing tip</p>')
        parts.append(f'<p class="field-text">{esc(entry.tip)}</p>')
        if entry.unlocked_at:
            parts.append(f'<p class="timestamp">Unlocked {esc(entry.unlocked_at)}</p>')
        parts.append("</section>")
    parts.append("</body>")
    parts.append("</html>")
    return "\n".join(parts)

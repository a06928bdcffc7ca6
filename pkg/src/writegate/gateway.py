"""Provider boundary: a live hosted-model client and a deterministic mock.

Both sides of the boundary expose a single method, ``complete``, so the
rest of the service never knows which one it is talking to.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass

import requests

from .errors import AuthRejected, NetworkFailure, NoCredentials, ProviderError
from .personas import PromptText

DEFAULT_MODEL = "gemini-3-flash-preview"
ENV_KEY_VAR = "LLM_API_KEY"
REQUEST_TIMEOUT_S = 30.0

_API_BASE = "https://generativelanguage.googleapis.com/v1beta/models"


@dataclass(frozen=True)
class ProviderCredentials:
    user_key: str | None = None
    env_key: str | None = None


def resolve_key(creds: ProviderCredentials) -> str:
    """User-supplied key wins over the configured one; neither is an error."""
    for key in (creds.user_key, creds.env_key):
        if key and key.strip():
            return key
    raise NoCredentials("no API key supplied and none configured")


@dataclass(frozen=True)
class ProviderResponse:
    raw: str
    latency_ms: int


class CompletionProvider:
    """Single-method boundary so live and mock providers are interchangeable."""

    def complete(self, prompt: PromptText, key: str, model: str) -> ProviderResponse:
        raise NotImplementedError


class GeminiProvider(CompletionProvider):
    """Live client: one single-turn request per call, no retries."""

    def complete(self, prompt: PromptText, key: str, model: str) -> ProviderResponse:
        url = f"{_API_BASE}/{model}:generateContent"
        payload = {"contents": [{"parts": [{"text": prompt.content}]}]}
        started = time.monotonic()
        try:
            resp = requests.post(
                url, json=payload, params={"key": key}, timeout=REQUEST_TIMEOUT_S
            )
        except requests.RequestException as exc:
            raise NetworkFailure(
                f"provider unreachable: {type(exc).__name__}"
            ) from exc
        latency_ms = int((time.monotonic() - started) * 1000)
        if resp.status_code in (401, 403):
            raise AuthRejected("provider rejected the API key")
        if resp.status_code != 200:
            raise ProviderError(resp.status_code)
        try:
            body = resp.json()
            parts = body["candidates"][0]["content"]["parts"]
            text = "".join(part.get("text", "") for part in parts)
        except (ValueError, LookupError, TypeError) as exc:
            raise ProviderError(
                resp.status_code, "provider returned an unexpected payload"
            ) from exc
        return ProviderResponse(raw=text, latency_ms=latency_ms)


@dataclass(frozen=True)
class CallRecord:
    prompt: str
    key: str


class MockProvider(CompletionProvider):
    """Scripted provider for offline runs.

    Responses are consumed strictly in order. Every invocation is appended
    to ``call_log``, including the one that exhausts the script; requests
    rejected before the provider boundary never show up here.
    """

    def __init__(self, responses: tuple[str, ...] | list[str] = ()):
        self._responses = list(responses)
        self._cursor = 0
        self._lock = threading.Lock()
        self.call_log: list[CallRecord] = []

    def script(self, *raw_texts: str) -> None:
        """Append canned raw responses to the script."""
        with self._lock:
            self._responses.extend(raw_texts)

    @property
    def call_count(self) -> int:
        with self._lock:
            return len(self.call_log)

    def complete(self, prompt: PromptText, key: str, model: str) -> ProviderResponse:
        with self._lock:
            self.call_log.append(CallRecord(prompt=prompt.content, key=key))
            if self._cursor >= len(self._responses):
                raise ProviderError(None, "mock script exhausted")
            raw = self._responses[self._cursor]
            self._cursor += 1
        return ProviderResponse(raw=raw, latency_ms=0)

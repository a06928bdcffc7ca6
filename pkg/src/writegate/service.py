"""The wire-facing application: gated two-phase endpoints, static pages,
demo bundle, session export, and error mapping.

All shared state (config, guide, personas, demo bundle) is immutable after
startup; the service itself holds no per-session state.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import AliasChoices, BaseModel, Field

from .demo import get_demo_bundle
from .errors import (
    AuthRejected,
    EmptyDefense,
    EmptyEssay,
    EmptyQuestion,
    ExtractionFailed,
    FeedbackError,
    MalformedLog,
    NetworkFailure,
    NoCredentials,
    ParseFailure,
    ProviderError,
    SchemaViolation,
    UnknownPersona,
)
from .export import parse_session_log, render_session_html
from .extraction import extract_object, validate_challenge, validate_unlock
from .gateway import (
    DEFAULT_MODEL,
    ENV_KEY_VAR,
    CompletionProvider,
    GeminiProvider,
    ProviderCredentials,
    resolve_key,
)
from .personas import (
    GuideText,
    assemble_challenge_prompt,
    assemble_unlock_prompt,
    get_persona,
    load_pedagogy_guide,
)

logger = logging.getLogger("writegate")

DEFAULT_GUIDE_FILENAME = "pedagogy_guide.md"

_STATUS_BY_ERROR: dict[type[FeedbackError], int] = {
    EmptyEssay: 400,
    EmptyQuestion: 400,
    EmptyDefense: 400,
    UnknownPersona: 400,
    ParseFailure: 400,
    MalformedLog: 400,
    NoCredentials: 401,
    AuthRejected: 401,
    NetworkFailure: 502,
    ProviderError: 502,
    ExtractionFailed: 502,
    SchemaViolation: 502,
}


def packaged_guide_path() -> Path:
    """Copy of the guide shipped inside the package."""
    return Path(str(resources.files("writegate") / "data" / DEFAULT_GUIDE_FILENAME))


def default_guide_path() -> Path:
    """Service-root guide file when present, else the packaged copy."""
    local = Path(DEFAULT_GUIDE_FILENAME)
    return local if local.is_file() else packaged_guide_path()


@dataclass(frozen=True)
class ServiceConfig:
    guide_path: Path
    model_name: str = DEFAULT_MODEL
    bind_host: str = "127.0.0.1"
    bind_port: int = 8000
    env_key: str | None = None
    static_dir: Path | None = None

    @classmethod
    def from_env(cls, environ: os._Environ | dict = os.environ) -> "ServiceConfig":
        guide_env = environ.get("GUIDE_PATH")
        guide_path = Path(guide_env) if guide_env else default_guide_path()
        host, port = "127.0.0.1", 8000
        bind = environ.get("BIND_ADDR")
        if bind:
            host, _, port_text = bind.rpartition(":")
            port = int(port_text)
        static_env = environ.get("STATIC_DIR")
        static_dir = Path(static_env) if static_env else _default_static_dir()
        return cls(
            guide_path=guide_path,
            model_name=environ.get("MODEL_NAME", DEFAULT_MODEL),
            bind_host=host or "127.0.0.1",
            bind_port=port,
            env_key=environ.get(ENV_KEY_VAR),
            static_dir=static_dir,
        )


def _default_static_dir() -> Path | None:
    candidate = Path("frontend") / "dist"
    return candidate if candidate.is_dir() else None


class ChallengePayload(BaseModel):
    essay: str = ""
    persona: str | None = None
    api_key: str | None = Field(
        None, validation_alias=AliasChoices("api_key", "geminiApiKey")
    )


class UnlockPayload(BaseModel):
    essay: str = ""
    label: str = ""
    excerpt: str | None = None
    question: str = ""
    user_defense: str = Field(
        "", validation_alias=AliasChoices("user_defense", "userDefense")
    )
    api_key: str | None = Field(
        None, validation_alias=AliasChoices("api_key", "geminiApiKey")
    )


_PLACEHOLDER_APP = """\
<!DOCTYPE html>
<html lang="en"><head><meta charset="utf-8"><title>Writegate</title></head>
<body>
<h1>Writegate</h1>
<p>The web client bundle is not built. Build it with
<code>npm run build</code> inside <code>frontend/</code>, or talk to the API
directly: POST /challenge, POST /unlock.</p>
</body></html>
"""

_PLACEHOLDER_DEMO = """\
<!DOCTYPE html>
<html lang="en"><head><meta charset="utf-8"><title>Writegate demo</title></head>
<body>
<h1>Writegate demo</h1>
<p>The demo page bundle is not built. The demo data itself is served at
<a href="/demo/bundle">/demo/bundle</a>.</p>
</body></html>
"""


def create_app(
    config: ServiceConfig, provider: CompletionProvider | None = None
) -> FastAPI:
    """Build the application. Fails fast if the guide cannot be loaded."""
    guide: GuideText = load_pedagogy_guide(config.guide_path)
    provider = provider if provider is not None else GeminiProvider()
    app = FastAPI(title="writegate", docs_url=None, redoc_url=None)

    @app.exception_handler(FeedbackError)
    async def _feedback_error(request: Request, exc: FeedbackError) -> JSONResponse:
        status = _STATUS_BY_ERROR.get(type(exc), 500)
        return JSONResponse(
            status_code=status,
            content={"error_code": exc.code, "message": exc.message},
        )

    def _complete(prompt, user_key: str | None):
        key = resolve_key(
            ProviderCredentials(user_key=user_key, env_key=config.env_key)
        )
        return provider.complete(prompt, key, config.model_name)

    @app.post("/challenge")
    def challenge(payload: ChallengePayload) -> dict:
        persona = get_persona(payload.persona)
        prompt = assemble_challenge_prompt(payload.essay, persona, guide)
        response = _complete(prompt, payload.api_key)
        try:
            obj = extract_object(response.raw)
            feedback = validate_challenge(obj, persona, payload.essay)
        except (ExtractionFailed, SchemaViolation) as exc:
            # raw provider text is logged here and never returned
            logger.warning("challenge output rejected (%s): %r", exc.code, response.raw)
            raise
        return feedback.to_wire()

    @app.post("/unlock")
    def unlock(payload: UnlockPayload) -> dict:
        prompt = assemble_unlock_prompt(
            essay=payload.essay,
            label=payload.label,
            excerpt=payload.excerpt,
            question=payload.question,
            defense=payload.user_defense,
        )
        response = _complete(prompt, payload.api_key)
        try:
            obj = extract_object(response.raw)
            result = validate_unlock(obj)
        except (ExtractionFailed, SchemaViolation) as exc:
            logger.warning("unlock output rejected (%s): %r", exc.code, response.raw)
            raise
        return result.to_wire()

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "guide_lines": guide.line_count}

    @app.get("/demo/bundle")
    def demo_bundle() -> dict:
        return get_demo_bundle().to_wire()

    @app.post("/export", response_class=HTMLResponse)
    async def export(request: Request) -> HTMLResponse:
        body = await request.body()
        log = parse_session_log(body)
        return HTMLResponse(render_session_html(log))

    def _page(filename: str, fallback: str) -> HTMLResponse:
        if config.static_dir is not None:
            candidate = config.static_dir / filename
            if candidate.is_file():
                return HTMLResponse(candidate.read_text(encoding="utf-8"))
        return HTMLResponse(fallback)

    @app.get("/app", response_class=HTMLResponse)
    def app_page() -> HTMLResponse:
        return _page("index.html", _PLACEHOLDER_APP)

    @app.get("/demo", response_class=HTMLResponse)
    def demo_page() -> HTMLResponse:
        return _page("demo.html", _PLACEHOLDER_DEMO)

    if config.static_dir is not None and config.static_dir.is_dir():
        app.mount(
            "/assets", StaticFiles(directory=config.static_dir), name="assets"
        )

    return app

"""Command line entry point: `serve` runs the API, `export` renders a
session log to HTML."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import FeedbackError
from .export import render_session_html, parse_session_log
from .gateway import DEFAULT_MODEL
from .service import ServiceConfig, create_app, default_guide_path


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="writegate",
        description="Inquiry-only writing feedback service",
    )
    sub = parser.add_subparsers(dest="command")

    serve = sub.add_parser("serve", help="run the HTTP service (default)")
    serve.add_argument("--host", default=None, help="bind host")
    serve.add_argument("--port", type=int, default=None, help="bind port")
    serve.add_argument("--guide", type=Path, default=None, help="pedagogy guide path")
    serve.add_argument("--model", default=None, help=f"model name (default {DEFAULT_MODEL})")
    serve.add_argument("--static-dir", type=Path, default=None, help="web client bundle dir")

    export = sub.add_parser("export", help="render a session log to HTML")
    export.add_argument("session", type=Path, help="path to session JSON")
    export.add_argument("-o", "--output", type=Path, default=None, help="output HTML path")

    return parser


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    config = ServiceConfig.from_env()
    config = ServiceConfig(
        guide_path=args.guide or config.guide_path or default_guide_path(),
        model_name=args.model or config.model_name,
        bind_host=args.host or config.bind_host,
        bind_port=args.port or config.bind_port,
        env_key=config.env_key,
        static_dir=args.static_dir or config.static_dir,
    )
    try:
        app = create_app(config)
    except FeedbackError as exc:
        print(f"startup failed: {exc.message}", file=sys.stderr)
        return 1
    uvicorn.run(app, host=config.bind_host, port=config.bind_port)
    return 0


def _run_export(args: argparse.Namespace) -> int:
    try:
        serialized = args.session.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cannot read {args.session}: {exc}", file=sys.stderr)
        return 1
    try:
        document = render_session_html(parse_session_log(serialized))
    except FeedbackError as exc:
        print(f"{exc.code}: {exc.message}", file=sys.stderr)
        return 1
    output = args.output or args.session.with_suffix(".html")
    output.write_text(document, encoding="utf-8")
    print(f"wrote {output}")
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        argv = ["serve"]
    args = build_parser().parse_args(argv)
    if args.command == "export":
        return _run_export(args)
    return _run_serve(args)


if __name__ == "__main__":
    raise SystemExit(main())

"""csre4soc command line: score answer files, inspect history, run the service.

Exit codes are a contract: 0 success, 1 parse/validation failure (diagnostic
names the offending path or id), 2 I/O or environment failure.

The answers file is exactly the HTTP submission body, so files move between
the CLI and the API without transformation.

    csre4soc assess --catalog catalog.json --answers answers.json [--format text|json] [--store log.jsonl]
    csre4soc evolution --store log.jsonl --company acme [--format text|json]
    csre4soc serve --catalog catalog.json --store log.jsonl --listen 127.0.0.1:8000
"""

from __future__ import annotations

import argparse
import logging
import os
import socket
import sys
import uuid
from datetime import datetime, timezone
from pathlib import Path

from .catalog import (
    ActionCatalog,
    AssessmentSubmission,
    load_catalog,
    parse_submission,
    validate_submission,
)
from .errors import ScorecardError, StorageFailure
from .history import AssessmentRecord, EvolutionSeries, RecordStore, evolution_doc
from .recommendations import Recommendation, recommend, recommendations_doc
from .scoring import AssessmentResult, assess, result_doc
from .serialization import dumps, format_timestamp

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_IO = 2

ENV_CATALOG = "CSRE4SOC_CATALOG"
ENV_STORE = "CSRE4SOC_STORE"
ENV_LISTEN = "CSRE4SOC_LISTEN"
DEFAULT_LISTEN = "127.0.0.1:8000"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="csre4soc",
        description="CSR software-sustainability scorecard: score, track, serve.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_assess = sub.add_parser("assess", help="score an answers file against a catalog")
    p_assess.add_argument("--catalog", help=f"catalog JSON file (or ${ENV_CATALOG})")
    p_assess.add_argument("--answers", required=True, help="submission JSON file")
    p_assess.add_argument("--format", choices=("text", "json"), default="text")
    p_assess.add_argument("--store", help="also append the assessment to this record log")

    p_evo = sub.add_parser("evolution", help="print a company's level evolution")
    p_evo.add_argument("--store", help=f"record log path (or ${ENV_STORE})")
    p_evo.add_argument("--company", required=True, help="company id to project")
    p_evo.add_argument("--format", choices=("text", "json"), default="text")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--catalog", help=f"catalog JSON file (or ${ENV_CATALOG})")
    p_serve.add_argument("--store", help=f"record log path (or ${ENV_STORE})")
    p_serve.add_argument("--listen", help=f"addr:port to bind (or ${ENV_LISTEN}; default {DEFAULT_LISTEN})")

    return parser


def _resolve(flag_value: str | None, env_name: str, option: str) -> str:
    """Flags win over environment; missing both is a usage error (exit 2)."""
    value = flag_value or os.environ.get(env_name)
    if not value:
        raise StorageFailure(f"missing {option} (flag) and {env_name} (environment)")
    return value


def _fresh_record(submission: AssessmentSubmission, result: AssessmentResult) -> AssessmentRecord:
    return AssessmentRecord(
        record_id=str(uuid.uuid4()),
        submission=submission,
        result=result,
        stored_at=datetime.now(timezone.utc).replace(microsecond=0),
    )


def cmd_assess(args: argparse.Namespace) -> int:
    catalog_path = _resolve(args.catalog, ENV_CATALOG, "--catalog")
    catalog = load_catalog(catalog_path)
    submission = validate_submission(parse_submission(_read_file(args.answers)), catalog)
    result = assess(submission, catalog)
    recommendations = recommend(submission, catalog)

    if args.format == "json":
        doc = {"result": result_doc(result), "recommendations": recommendations_doc(recommendations)}
        print(dumps(doc))
    else:
        print(render_report_text(submission, result, recommendations, catalog))

    if args.store:
        record = _fresh_record(submission, result)
        RecordStore(args.store).append(record)
        print(f"stored assessment {record.record_id} in {args.store}", file=sys.stderr)
    return EXIT_OK


def cmd_evolution(args: argparse.Namespace) -> int:
    store_path = _resolve(args.store, ENV_STORE, "--store")
    series = RecordStore(store_path).evolution(args.company)
    if args.format == "json":
        print(dumps(evolution_doc(series)))
    else:
        print(render_evolution_text(series))
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    # Late imports keep `assess`/`evolution` usable without the HTTP stack.
    import uvicorn

    from .api import create_app

    catalog_path = _resolve(args.catalog, ENV_CATALOG, "--catalog")
    store_path = _resolve(args.store, ENV_STORE, "--store")
    listen = args.listen or os.environ.get(ENV_LISTEN) or DEFAULT_LISTEN

    # Fail fast, before any socket exists: bad catalog is exit 1,
    # unusable store or unbindable address exit 2.
    catalog = load_catalog(catalog_path)
    store = RecordStore(store_path)
    _probe_writable(store.path)

    host, port = _parse_listen(listen)
    try:
        sock = socket.create_server((host, port))
    except OSError as exc:
        print(f"csre4soc: cannot bind {listen}: {exc}", file=sys.stderr)
        return EXIT_IO

    bound_host, bound_port = sock.getsockname()[:2]
    print(f"csre4soc: listening on http://{bound_host}:{bound_port}", file=sys.stderr, flush=True)

    app = create_app(catalog, store)
    config = uvicorn.Config(app, host=bound_host, port=bound_port, log_level="info")
    uvicorn.Server(config).run(sockets=[sock])
    return EXIT_OK


def _parse_listen(listen: str) -> tuple[str, int]:
    host, sep, port_text = listen.rpartition(":")
    if not sep or not host:
        raise StorageFailure(f"--listen must be addr:port, got {listen!r}")
    try:
        port = int(port_text)
    except ValueError:
        raise StorageFailure(f"--listen port must be an integer, got {port_text!r}") from None
    return host, port


def _probe_writable(path: Path) -> None:
    try:
        with open(path, "a", encoding="utf-8"):
            pass
    except OSError as exc:
        raise StorageFailure(f"store {path} is not writable: {exc}") from exc


def _read_file(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise StorageFailure(f"cannot read {path}: {exc}") from exc


# --- text rendering -----------------------------------------------------------

def render_report_text(
    submission: AssessmentSubmission,
    result: AssessmentResult,
    recommendations: tuple[Recommendation, ...],
    catalog: ActionCatalog,
) -> str:
    names = {dim.id: dim.name for dim in catalog.dimensions}
    lines = [
        f"Sustainability assessment for {submission.company_id}",
        f"Catalog {catalog.catalog_version} ({result.catalog_digest[:12]})",
        "",
        f"{'Dimension':<16}{'Implemented':<13}{'Coverage':<10}Level",
    ]
    for score in result.scores:
        pct = f"{float(score.coverage) * 100:.1f}%"
        lines.append(
            f"{names[score.dimension]:<16}"
            f"{f'{score.implemented_count}/{score.total_count}':<13}"
            f"{pct:<10}{score.level}"
        )
    lines += ["", f"Overall level: {result.overall}"]

    if recommendations:
        lines += ["", f"Recommendations ({len(recommendations)}):"]
        current = None
        for rec in recommendations:
            if rec.dimension is not current:
                current = rec.dimension
                lines.append(f"  {names[current]}:")
            lines.append(f"    - [{rec.action_id}] {rec.text}")
    else:
        lines += ["", "Recommendations: none — every catalog action is implemented."]
    return "\n".join(lines)


def render_evolution_text(series: EvolutionSeries) -> str:
    if not series.points:
        return f"No assessments recorded for {series.company_id}."
    lines = [
        f"Evolution for {series.company_id} ({len(series.points)} assessments)",
        "",
        f"{'Timestamp':<22}{'Human':<7}{'Economic':<10}{'Environmental':<15}{'Overall':<9}Catalog",
    ]
    previous_digest = None
    for point in series.points:
        human, economic, environmental = point.levels
        changed = "(changed)" if previous_digest is not None and point.catalog_digest != previous_digest else ""
        lines.append(
            f"{format_timestamp(point.timestamp):<22}{human:<7}{economic:<10}"
            f"{environmental:<15}{point.overall:<9}{changed}".rstrip()
        )
        previous_digest = point.catalog_digest
    return "\n".join(lines)


# --- entry point --------------------------------------------------------------

def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="csre4soc: %(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    handlers = {"assess": cmd_assess, "evolution": cmd_evolution, "serve": cmd_serve}
    try:
        return handlers[args.command](args)
    except StorageFailure as exc:
        print(f"csre4soc: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ScorecardError as exc:
        print(f"csre4soc: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

"""Strict JSON reading and deterministic JSON writing.

Two things distinguish this from plain ``json``:

* Numbers are exact. Decimal literals are parsed straight into
  ``fractions.Fraction`` (``0.1`` becomes 1/10, not the nearest double), and
  fractions are written back as exact decimal strings. Coverage-vs-threshold
  comparisons therefore never depend on floating point.
* Reading is strict: duplicate object keys, ``NaN``/``Infinity`` and invalid
  UTF-8 are rejected instead of silently accepted.

Floats are deliberately unsupported by :func:`dumps`; a float in a document
means an exactness bug upstream.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any

from .errors import MalformedDocument, SchemaViolation

TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M:%SZ"


def _reject_constant(name: str):
    raise MalformedDocument(f"non-finite number {name!r} is not allowed")


def _object_from_pairs(pairs):
    obj: dict[str, Any] = {}
    for key, value in pairs:
        if key in obj:
            raise SchemaViolation(f"duplicate object key {key!r}")
        obj[key] = value
    return obj


def loads_strict(data: bytes | str) -> Any:
    """Parse JSON with exact numbers, rejecting duplicate keys and NaN/Inf.

    Raises MalformedDocument for undecodable or syntactically invalid input,
    SchemaViolation for duplicate keys.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedDocument(f"document is not valid UTF-8: {exc}") from exc
    else:
        text = data
    try:
        return json.loads(
            text,
            parse_float=Fraction,
            parse_constant=_reject_constant,
            object_pairs_hook=_object_from_pairs,
        )
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from exc


def render_fraction(value: Fraction) -> str:
    """Render a Fraction as an exact JSON number literal.

    Only works for values with a finite decimal expansion (denominator of
    the form 2^a * 5^b), which covers everything that can enter through a
    JSON document in the first place.
    """
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    twos = fives = 0
    d = den
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        raise ValueError(f"{value} has no finite decimal representation")
    digits = max(twos, fives)
    scaled = abs(num) * 10**digits // den
    text = str(scaled).rjust(digits + 1, "0")
    int_part, frac_part = text[:-digits], text[-digits:]
    sign = "-" if num < 0 else ""
    return f"{sign}{int_part}.{frac_part}"


def dumps(value: Any, *, indent: int | None = None, sort_keys: bool = False) -> str:
    """Serialize a document deterministically.

    Handles dict/list/str/int/bool/None plus Fraction (exact decimal).
    Compact separators when indent is None, matching the HTTP layer.
    """
    out: list[str] = []
    _write(value, out, indent, sort_keys, 0)
    return "".join(out)


def canonical_dumps(value: Any) -> str:
    """Compact, sorted-keys form used for digests and the record store."""
    return dumps(value, sort_keys=True)


def _write(value: Any, out: list[str], indent: int | None, sort_keys: bool, depth: int) -> None:
    if value is None or value is True or value is False:
        out.append("null" if value is None else ("true" if value else "false"))
    elif isinstance(value, str):
        out.append(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, Fraction):
        out.append(render_fraction(value))
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        raise TypeError(f"refusing to serialize float {value!r}; use Fraction")
    elif isinstance(value, dict):
        keys = sorted(value) if sort_keys else list(value)
        if not keys:
            out.append("{}")
            return
        open_, close, item_sep, kv_sep = _punct("{", "}", indent, depth)
        out.append(open_)
        for i, key in enumerate(keys):
            if i:
                out.append(item_sep)
            if not isinstance(key, str):
                raise TypeError(f"non-string object key {key!r}")
            out.append(json.dumps(key, ensure_ascii=False))
            out.append(kv_sep)
            _write(value[key], out, indent, sort_keys, depth + 1)
        out.append(close)
    elif isinstance(value, (list, tuple)):
        if not value:
            out.append("[]")
            return
        open_, close, item_sep, _ = _punct("[", "]", indent, depth)
        out.append(open_)
        for i, item in enumerate(value):
            if i:
                out.append(item_sep)
            _write(item, out, indent, sort_keys, depth + 1)
        out.append(close)
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def _punct(open_char: str, close_char: str, indent: int | None, depth: int):
    if indent is None:
        return open_char, close_char, ",", ":"
    pad = " " * (indent * (depth + 1))
    end_pad = " " * (indent * depth)
    return (
        open_char + "\n" + pad,
        "\n" + end_pad + close_char,
        ",\n" + pad,
        ": ",
    )


def parse_timestamp(value: Any, *, path: str = "timestamp") -> datetime:
    """Parse an RFC 3339 timestamp into a UTC datetime at second precision.

    An explicit offset is required; fractional seconds are truncated.
    """
    if not isinstance(value, str):
        raise SchemaViolation("timestamp must be a string", path=path)
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(text)
    except ValueError as exc:
        raise SchemaViolation(f"timestamp {value!r} is not RFC 3339: {exc}", path=path) from exc
    if parsed.tzinfo is None:
        raise SchemaViolation(f"timestamp {value!r} lacks a UTC offset", path=path)
    return parsed.astimezone(timezone.utc).replace(microsecond=0)


def format_timestamp(value: datetime) -> str:
    """Render a UTC datetime in the canonical second-precision form."""
    if value.tzinfo is None:
        raise ValueError("naive datetime cannot be formatted as a UTC instant")
    return value.astimezone(timezone.utc).strftime(TIMESTAMP_FORMAT)

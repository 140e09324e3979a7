"""Action catalog and assessment submission: types, strict parsing, digest.

The catalog is an external, versioned JSON file. This module turns bytes
into validated immutable values and back; nothing here scores anything.
The shipped default catalog (``data/catalog.json``) is illustrative, not
authoritative — real deployments are expected to bring their own.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

from .errors import (
    EmptyCompanyId,
    InvariantViolation,
    SchemaViolation,
    UnknownActionId,
)
from .serialization import (
    canonical_dumps,
    dumps,
    format_timestamp,
    loads_strict,
    parse_timestamp,
)

DEFAULT_THRESHOLDS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


class DimensionId(str, Enum):
    """The three software-sustainability dimensions. Nothing else exists."""

    HUMAN = "human"
    ECONOMIC = "economic"
    ENVIRONMENTAL = "environmental"


# Fixed presentation and canonicalization order, everywhere.
DIMENSION_ORDER = (DimensionId.HUMAN, DimensionId.ECONOMIC, DimensionId.ENVIRONMENTAL)


@dataclass(frozen=True)
class ActionItem:
    id: str
    statement: str
    weight: Fraction
    recommendation: str


@dataclass(frozen=True)
class Dimension:
    id: DimensionId
    name: str
    actions: tuple[ActionItem, ...]

    @property
    def action_ids(self) -> frozenset[str]:
        return frozenset(a.id for a in self.actions)

    @property
    def total_weight(self) -> Fraction:
        return sum((a.weight for a in self.actions), Fraction(0))


@dataclass(frozen=True)
class ActionCatalog:
    catalog_version: str
    thresholds: tuple[Fraction, ...]
    dimensions: tuple[Dimension, ...]  # always in DIMENSION_ORDER

    def dimension(self, dim_id: DimensionId) -> Dimension:
        for dim in self.dimensions:
            if dim.id is dim_id:
                return dim
        raise KeyError(dim_id)

    @property
    def action_ids(self) -> frozenset[str]:
        return frozenset(a.id for d in self.dimensions for a in d.actions)

    @property
    def level_count(self) -> int:
        return len(self.thresholds) + 1

    def find_action(self, action_id: str) -> tuple[DimensionId, ActionItem]:
        for dim in self.dimensions:
            for action in dim.actions:
                if action.id == action_id:
                    return dim.id, action
        raise KeyError(action_id)


@dataclass(frozen=True)
class AssessmentSubmission:
    company_id: str
    timestamp: datetime  # UTC, second precision
    implemented: frozenset[str] = field(default_factory=frozenset)


# --- catalog parsing ---------------------------------------------------------

def parse_catalog(document: bytes | str) -> ActionCatalog:
    """Parse and fully validate a catalog document.

    Raises MalformedDocument (unreadable), SchemaViolation (wrong shape or
    type, unknown field) or InvariantViolation (broken value rule); every
    error names the offending path.
    """
    doc = loads_strict(document)
    return _catalog_from_doc(doc)


def load_catalog(path: str | Path) -> ActionCatalog:
    return parse_catalog(Path(path).read_bytes())


def default_catalog_path() -> Path:
    """Path of the illustrative catalog shipped with the package."""
    return Path(str(resources.files("csre4soc").joinpath("data/catalog.json")))


def load_default_catalog() -> ActionCatalog:
    return load_catalog(default_catalog_path())


def _require_object(value: Any, allowed: Iterable[str], required: Iterable[str], path: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaViolation(f"expected an object, got {_type_name(value)}", path=path)
    allowed = set(allowed)
    for key in value:
        if key not in allowed:
            raise SchemaViolation(f"unknown field {key!r}", path=f"{path}.{key}" if path else key)
    for key in required:
        if key not in value:
            raise SchemaViolation(f"missing field {key!r}", path=path)
    return value


def _require_string(value: Any, path: str) -> str:
    if not isinstance(value, str):
        raise SchemaViolation(f"expected a string, got {_type_name(value)}", path=path)
    return value


def _require_nonempty_string(value: Any, path: str) -> str:
    text = _require_string(value, path)
    if not text:
        raise InvariantViolation("must be a non-empty string", path=path)
    return text


def _require_rational(value: Any, path: str) -> Fraction:
    # bool is an int subclass; JSON true/false is never a number here.
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise SchemaViolation(f"expected a number, got {_type_name(value)}", path=path)
    return Fraction(value)


def _type_name(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, (int, Fraction)):
        return "number"
    return {"str": "string", "dict": "object", "list": "array"}.get(
        type(value).__name__, type(value).__name__
    )


def _catalog_from_doc(doc: Any) -> ActionCatalog:
    _require_object(doc, ["catalog_version", "thresholds", "dimensions"],
                    ["catalog_version", "dimensions"], "")
    version = _require_nonempty_string(doc["catalog_version"], "catalog_version")
    thresholds = _parse_thresholds(doc.get("thresholds"))
    dims_doc = doc["dimensions"]
    if not isinstance(dims_doc, list):
        raise SchemaViolation(f"expected an array, got {_type_name(dims_doc)}", path="dimensions")

    parsed: dict[DimensionId, Dimension] = {}
    seen_action_ids: dict[str, str] = {}
    for i, dim_doc in enumerate(dims_doc):
        dim = _dimension_from_doc(dim_doc, f"dimensions[{i}]", seen_action_ids)
        if dim.id in parsed:
            raise InvariantViolation(
                f"dimension {dim.id.value!r} appears more than once", path=f"dimensions[{i}].id"
            )
        parsed[dim.id] = dim
    for dim_id in DIMENSION_ORDER:
        if dim_id not in parsed:
            raise InvariantViolation(f"missing dimension {dim_id.value!r}", path="dimensions")

    return ActionCatalog(
        catalog_version=version,
        thresholds=thresholds,
        dimensions=tuple(parsed[d] for d in DIMENSION_ORDER),
    )


def _parse_thresholds(value: Any) -> tuple[Fraction, ...]:
    if value is None:
        return DEFAULT_THRESHOLDS
    if not isinstance(value, list):
        raise SchemaViolation(f"expected an array, got {_type_name(value)}", path="thresholds")
    if not value:
        raise InvariantViolation("thresholds must not be empty", path="thresholds")
    out: list[Fraction] = []
    for i, item in enumerate(value):
        t = _require_rational(item, f"thresholds[{i}]")
        if not 0 < t <= 1:
            raise InvariantViolation(f"threshold {t} is outside (0, 1]", path=f"thresholds[{i}]")
        if out and t <= out[-1]:
            raise InvariantViolation(
                "thresholds must be strictly increasing", path=f"thresholds[{i}]"
            )
        out.append(t)
    if out[-1] != 1:
        raise InvariantViolation("final threshold must equal 1.0", path=f"thresholds[{len(out) - 1}]")
    return tuple(out)


def _dimension_from_doc(doc: Any, path: str, seen_action_ids: dict[str, str]) -> Dimension:
    _require_object(doc, ["id", "name", "actions"], ["id", "name", "actions"], path)
    raw_id = _require_string(doc["id"], f"{path}.id")
    try:
        dim_id = DimensionId(raw_id)
    except ValueError:
        valid = ", ".join(d.value for d in DIMENSION_ORDER)
        raise SchemaViolation(
            f"invalid dimension id {raw_id!r} (expected one of: {valid})", path=f"{path}.id"
        ) from None
    name = _require_string(doc["name"], f"{path}.name")
    actions_doc = doc["actions"]
    if not isinstance(actions_doc, list):
        raise SchemaViolation(
            f"expected an array, got {_type_name(actions_doc)}", path=f"{path}.actions"
        )
    if not actions_doc:
        raise InvariantViolation("dimension must define at least one action", path=f"{path}.actions")
    actions = []
    for i, action_doc in enumerate(actions_doc):
        action = _action_from_doc(action_doc, f"{path}.actions[{i}]")
        if action.id in seen_action_ids:
            raise InvariantViolation(
                f"action id {action.id!r} already defined at {seen_action_ids[action.id]}",
                path=f"{path}.actions[{i}].id",
            )
        seen_action_ids[action.id] = f"{path}.actions[{i}].id"
        actions.append(action)
    return Dimension(id=dim_id, name=name, actions=tuple(actions))


def _action_from_doc(doc: Any, path: str) -> ActionItem:
    _require_object(doc, ["id", "statement", "weight", "recommendation"],
                    ["id", "statement", "recommendation"], path)
    action_id = _require_nonempty_string(doc["id"], f"{path}.id")
    statement = _require_nonempty_string(doc["statement"], f"{path}.statement")
    recommendation = _require_nonempty_string(doc["recommendation"], f"{path}.recommendation")
    if "weight" in doc:
        weight = _require_rational(doc["weight"], f"{path}.weight")
        if weight <= 0:
            raise InvariantViolation(f"weight must be > 0, got {weight}", path=f"{path}.weight")
    else:
        weight = Fraction(1)
    return ActionItem(id=action_id, statement=statement, weight=weight, recommendation=recommendation)


# --- catalog serialization and digest ----------------------------------------

def catalog_doc(cat: ActionCatalog) -> dict:
    """Canonical document form: fixed dimension order, explicit defaults."""
    return {
        "catalog_version": cat.catalog_version,
        "thresholds": list(cat.thresholds),
        "dimensions": [
            {
                "id": dim.id.value,
                "name": dim.name,
                "actions": [
                    {
                        "id": a.id,
                        "statement": a.statement,
                        "weight": a.weight,
                        "recommendation": a.recommendation,
                    }
                    for a in dim.actions
                ],
            }
            for dim in cat.dimensions
        ],
    }


def serialize_catalog(cat: ActionCatalog, *, indent: int | None = 2) -> str:
    """Render a catalog back to a document parse_catalog accepts unchanged."""
    return dumps(catalog_doc(cat), indent=indent) + ("\n" if indent else "")


@lru_cache(maxsize=128)
def catalog_digest(cat: ActionCatalog) -> str:
    """Content digest binding stored assessments to a catalog version.

    Computed over the canonical serialization, so source-file field order
    never matters; any change to versions, thresholds, actions or weights
    does. Cached — catalogs are immutable.
    """
    canonical = canonical_dumps(catalog_doc(cat))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


# --- submissions --------------------------------------------------------------

def parse_submission(document: bytes | str) -> AssessmentSubmission:
    """Parse a submission document (the CLI answers file and the HTTP body).

    Duplicate ids in ``implemented`` collapse silently (set semantics).
    """
    doc = loads_strict(document)
    return submission_from_doc(doc)


def submission_from_doc(doc: Any) -> AssessmentSubmission:
    _require_object(doc, ["company_id", "timestamp", "implemented"],
                    ["company_id", "timestamp", "implemented"], "")
    company_id = _require_string(doc["company_id"], "company_id")
    if not company_id:
        raise EmptyCompanyId()
    timestamp = parse_timestamp(doc["timestamp"], path="timestamp")
    raw = doc["implemented"]
    if not isinstance(raw, list):
        raise SchemaViolation(f"expected an array, got {_type_name(raw)}", path="implemented")
    implemented = set()
    for i, item in enumerate(raw):
        implemented.add(_require_nonempty_string(item, f"implemented[{i}]"))
    return AssessmentSubmission(
        company_id=company_id, timestamp=timestamp, implemented=frozenset(implemented)
    )


def submission_doc(sub: AssessmentSubmission) -> dict:
    return {
        "company_id": sub.company_id,
        "timestamp": format_timestamp(sub.timestamp),
        "implemented": sorted(sub.implemented),
    }


def validate_submission(sub: AssessmentSubmission, cat: ActionCatalog) -> AssessmentSubmission:
    """Check that every implemented id resolves in the catalog.

    Returns the submission unchanged on success. An empty implemented set is
    valid: a company may have implemented nothing yet.
    """
    if not sub.company_id:
        raise EmptyCompanyId()
    unknown = sub.implemented - cat.action_ids
    if unknown:
        raise UnknownActionId(unknown, path="implemented")
    return sub

"""Domain error taxonomy shared by the catalog, history, API and CLI layers.

Every error carries a stable machine-readable ``code`` (the closed set the
HTTP layer exposes) and, where it makes sense, the path of the offending
field inside the source document (``dimensions[1].actions[0].weight``).
"""

from __future__ import annotations


class ScorecardError(Exception):
    """Base class for all recoverable scorecard errors."""

    code = "error"

    def __init__(self, detail: str, *, path: str | None = None):
        super().__init__(detail)
        self.detail = detail
        self.path = path

    def __str__(self) -> str:
        if self.path:
            return f"{self.detail} (at {self.path})"
        return self.detail


class MalformedDocument(ScorecardError):
    """The document is not readable at all (bad UTF-8, bad JSON syntax)."""

    code = "malformed_document"


class SchemaViolation(ScorecardError):
    """The document is valid JSON but has the wrong shape: a missing field,
    an unknown field, or a value of the wrong type."""

    code = "schema_violation"


class InvariantViolation(ScorecardError):
    """The document is well-shaped but breaks a value rule: duplicate action
    id, missing dimension, non-increasing thresholds, weight <= 0, ..."""

    code = "invariant_violation"


class UnknownActionId(ScorecardError):
    """A submission references action ids the catalog does not define."""

    code = "unknown_action_id"

    def __init__(self, unknown_ids, *, path: str | None = None):
        self.unknown_ids = tuple(sorted(unknown_ids))
        ids = ", ".join(self.unknown_ids)
        super().__init__(f"unknown action id(s): {ids}", path=path)


class EmptyCompanyId(ScorecardError):
    """The submission's company_id is empty."""

    code = "empty_company_id"

    def __init__(self, detail: str = "company_id must be non-empty", *, path: str | None = "company_id"):
        super().__init__(detail, path=path)


class DuplicateRecordId(ScorecardError):
    """An assessment record with this record_id already exists in the store."""

    code = "duplicate_record_id"


class StorageFailure(ScorecardError):
    """The record store could not be read or written."""

    code = "storage_failure"

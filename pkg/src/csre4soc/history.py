"""Per-company assessment history on an append-only, line-delimited log.

One canonical-JSON record per line. The whole file is read once at startup
into an in-memory index; appends write line+newline, flush and fsync before
acknowledging. Records are never updated or deleted.

Crash recovery: a final line without its trailing newline is a torn write
and is ignored with a warning — never treated as data. Anything else that
does not parse is corruption and raises StorageFailure.
"""

from __future__ import annotations

import logging
import os
import threading
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path
from typing import Any

from .catalog import (
    DIMENSION_ORDER,
    AssessmentSubmission,
    DimensionId,
    submission_doc,
    submission_from_doc,
)
from .errors import DuplicateRecordId, ScorecardError, SchemaViolation, StorageFailure
from .scoring import AssessmentResult, result_doc, result_from_doc
from .serialization import canonical_dumps, format_timestamp, loads_strict, parse_timestamp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AssessmentRecord:
    record_id: str
    submission: AssessmentSubmission
    result: AssessmentResult
    stored_at: datetime

    def sort_key(self):
        return (self.submission.timestamp, self.stored_at, self.record_id)


@dataclass(frozen=True)
class EvolutionPoint:
    timestamp: datetime
    levels: tuple[int, int, int]  # ordinals in DIMENSION_ORDER
    overall: int
    catalog_digest: str


@dataclass(frozen=True)
class EvolutionSeries:
    company_id: str
    points: tuple[EvolutionPoint, ...]


def record_doc(record: AssessmentRecord) -> dict:
    return {
        "record_id": record.record_id,
        "submission": submission_doc(record.submission),
        "result": result_doc(record.result),
        "stored_at": format_timestamp(record.stored_at),
    }


def record_from_doc(doc: Any) -> AssessmentRecord:
    if not isinstance(doc, dict):
        raise SchemaViolation("record must be an object")
    try:
        record_id = doc["record_id"]
        if not isinstance(record_id, str) or not record_id:
            raise SchemaViolation("record_id must be a non-empty string", path="record_id")
        submission = submission_from_doc(doc["submission"])
        result = result_from_doc(doc["result"])
        stored_at = parse_timestamp(doc["stored_at"], path="stored_at")
    except KeyError as exc:
        raise SchemaViolation(f"record is missing field {exc.args[0]!r}") from exc
    return AssessmentRecord(
        record_id=record_id, submission=submission, result=result, stored_at=stored_at
    )


class RecordStore:
    """Append-only store keyed by record_id, indexed in memory.

    Reads may run concurrently; writes are serialized store-wide. A missing
    file is an empty store and is created on first append.
    """

    def __init__(self, path: str | Path):
        self._path = Path(path)
        self._lock = threading.Lock()
        self._records: list[AssessmentRecord] = []
        self._by_id: dict[str, AssessmentRecord] = {}
        self._load()

    @property
    def path(self) -> Path:
        return self._path

    def __len__(self) -> int:
        return len(self._records)

    def _load(self) -> None:
        if not self._path.exists():
            return
        try:
            raw = self._path.read_bytes()
        except OSError as exc:
            raise StorageFailure(f"cannot read store {self._path}: {exc}") from exc
        if not raw:
            return
        body, newline, tail = raw.rpartition(b"\n")
        if tail:
            logger.warning(
                "store %s: ignoring partial trailing line (%d bytes, likely a torn write)",
                self._path, len(tail),
            )
        if not newline:
            return
        for lineno, line in enumerate(body.split(b"\n"), start=1):
            try:
                record = record_from_doc(loads_strict(line))
            except ScorecardError as exc:
                raise StorageFailure(
                    f"store {self._path} is corrupt at line {lineno}: {exc}"
                ) from exc
            if record.record_id in self._by_id:
                raise StorageFailure(
                    f"store {self._path} is corrupt at line {lineno}: "
                    f"duplicate record_id {record.record_id!r}"
                )
            self._records.append(record)
            self._by_id[record.record_id] = record

    def append(self, record: AssessmentRecord) -> str:
        """Durably store one record; returns its record_id."""
        line = canonical_dumps(record_doc(record)) + "\n"
        with self._lock:
            if record.record_id in self._by_id:
                raise DuplicateRecordId(f"record_id {record.record_id!r} already stored")
            try:
                with open(self._path, "a", encoding="utf-8") as fh:
                    fh.write(line)
                    fh.flush()
                    os.fsync(fh.fileno())
            except OSError as exc:
                raise StorageFailure(f"cannot append to store {self._path}: {exc}") from exc
            self._records.append(record)
            self._by_id[record.record_id] = record
        return record.record_id

    def list_assessments(self, company_id: str) -> list[AssessmentRecord]:
        """All records for a company, ordered by submission timestamp
        (ties broken by stored_at, then record_id). Unknown company -> []."""
        with self._lock:
            matching = [r for r in self._records if r.submission.company_id == company_id]
        return sorted(matching, key=AssessmentRecord.sort_key)

    def evolution(self, company_id: str) -> EvolutionSeries:
        """Level-over-time projection of list_assessments, same order."""
        points = []
        for record in self.list_assessments(company_id):
            result = record.result
            points.append(
                EvolutionPoint(
                    timestamp=record.submission.timestamp,
                    levels=tuple(
                        result.score_for(dim_id).level.ordinal for dim_id in DIMENSION_ORDER
                    ),
                    overall=result.overall.ordinal,
                    catalog_digest=result.catalog_digest,
                )
            )
        return EvolutionSeries(company_id=company_id, points=tuple(points))


def evolution_doc(series: EvolutionSeries) -> dict:
    """Wire form; flags every point whose catalog digest differs from the
    previous point's (first point is always false)."""
    points = []
    previous_digest: str | None = None
    for point in series.points:
        points.append(
            {
                "timestamp": format_timestamp(point.timestamp),
                "levels": {
                    dim_id.value: ordinal
                    for dim_id, ordinal in zip(DIMENSION_ORDER, point.levels)
                },
                "overall": point.overall,
                "catalog_digest_changed": (
                    previous_digest is not None and point.catalog_digest != previous_digest
                ),
            }
        )
        previous_digest = point.catalog_digest
    return {"company_id": series.company_id, "points": points}

from __future__ import annotations

from datetime import datetime, timedelta, timezone
from fractions import Fraction

import pytest

from csre4soc.catalog import AssessmentSubmission, load_default_catalog
from csre4soc.history import RecordStore


@pytest.fixture(scope="session")
def example_catalog():
    return load_default_catalog()


@pytest.fixture
def store(tmp_path):
    return RecordStore(tmp_path / "records.jsonl")


def make_submission(company_id="acme", ts="2026-01-15T09:30:00Z", implemented=()):
    return AssessmentSubmission(
        company_id=company_id,
        timestamp=datetime.strptime(ts, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=timezone.utc),
        implemented=frozenset(implemented),
    )


class SequentialIds:
    """Deterministic record-id factory for golden fixtures."""

    def __init__(self, prefix="rec"):
        self.prefix = prefix
        self.n = 0

    def __call__(self) -> str:
        self.n += 1
        return f"{self.prefix}-{self.n:04d}"


class TickingClock:
    """Deterministic clock: starts at a fixed instant, +1 minute per call."""

    def __init__(self, start="2026-03-01T12:00:00Z"):
        self.now = datetime.strptime(start, "%Y-%m-%dT%H:%M:%SZ").replace(tzinfo=timezone.utc)

    def __call__(self) -> datetime:
        current = self.now
        self.now = current + timedelta(minutes=1)
        return current


@pytest.fixture
def api_client(example_catalog, store):
    """TestClient over a deterministic app (sequential ids, ticking clock)."""
    from starlette.testclient import TestClient

    from csre4soc.api import create_app

    app = create_app(example_catalog, store, id_factory=SequentialIds(), clock=TickingClock())
    with TestClient(app, raise_server_exceptions=False) as client:
        yield client


def fr(text) -> Fraction:
    return Fraction(text)

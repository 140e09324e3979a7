"""HTTP surface: endpoint contracts, error taxonomy, wire/core equivalence."""

from __future__ import annotations

import json

from csre4soc.catalog import catalog_digest, parse_catalog, parse_submission, validate_submission
from csre4soc.scoring import assess, result_doc
from csre4soc.serialization import dumps, loads_strict

ERROR_CODES = {
    "malformed_document", "schema_violation", "invariant_violation",
    "unknown_action_id", "empty_company_id", "duplicate_record_id",
    "storage_failure", "not_found",
}


def submission_body(company="acme", ts="2026-02-01T00:00:00Z", implemented=()):
    return json.dumps({"company_id": company, "timestamp": ts, "implemented": list(implemented)})


class TestHealth:
    def test_ok(self, api_client):
        response = api_client.get("/api/v1/health")
        assert response.status_code == 200
        assert response.json() == "ok"


class TestGetCatalog:
    def test_three_dimensions(self, api_client):
        body = api_client.get("/api/v1/catalog").json()
        assert [d["id"] for d in body["catalog"]["dimensions"]] == [
            "human", "economic", "environmental",
        ]

    def test_digest_matches_reparsed_body(self, api_client):
        response = api_client.get("/api/v1/catalog")
        body = loads_strict(response.text)
        reparsed = parse_catalog(dumps(body["catalog"]))
        assert catalog_digest(reparsed) == body["digest"]

    def test_sequential_calls_byte_identical(self, api_client):
        first = api_client.get("/api/v1/catalog")
        second = api_client.get("/api/v1/catalog")
        assert first.content == second.content


class TestPostAssessment:
    def test_happy_path_shape(self, api_client, example_catalog):
        response = api_client.post("/api/v1/assessments",
                                   content=submission_body(implemented=("env-01",)))
        assert response.status_code == 201
        body = response.json()
        assert body["record_id"] == "rec-0001"
        assert len(body["result"]["scores"]) == 3
        assert body["result"]["overall"]["ordinal"] == 1
        assert len(body["recommendations"]) == 11

    def test_unknown_action_id_persists_nothing(self, api_client, store):
        response = api_client.post("/api/v1/assessments",
                                   content=submission_body(implemented=("bogus-id",)))
        assert response.status_code == 422
        body = response.json()
        assert body["code"] == "unknown_action_id"
        assert "bogus-id" in body["detail"]
        assert len(store) == 0
        assert not store.path.exists()

    def test_full_coverage_empty_recommendations(self, api_client, example_catalog):
        response = api_client.post(
            "/api/v1/assessments",
            content=submission_body(implemented=sorted(example_catalog.action_ids)),
        )
        assert response.status_code == 201
        body = response.json()
        assert body["recommendations"] == []
        assert body["result"]["overall"] == {"ordinal": 5, "label": "Leader"}

    def test_malformed_body(self, api_client):
        response = api_client.post("/api/v1/assessments", content=b"{not json")
        assert response.status_code == 400
        assert response.json()["code"] == "malformed_document"

    def test_schema_violation_names_path(self, api_client):
        bad = json.dumps({"company_id": "x", "timestamp": "2026-02-01T00:00:00Z",
                          "implemented": [], "extra": 1})
        response = api_client.post("/api/v1/assessments", content=bad)
        assert response.status_code == 400
        body = response.json()
        assert body["code"] == "schema_violation"
        assert body["path"] == "extra"

    def test_empty_company_id(self, api_client):
        response = api_client.post("/api/v1/assessments", content=submission_body(company=""))
        assert response.status_code == 422
        assert response.json()["code"] == "empty_company_id"

    def test_result_equals_in_process_assess(self, api_client, example_catalog):
        raw = submission_body(implemented=("env-01", "hum-01", "hum-02"))
        response = api_client.post("/api/v1/assessments", content=raw)
        submission = validate_submission(parse_submission(raw), example_catalog)
        expected = result_doc(assess(submission, example_catalog))
        assert response.json()["result"] == expected
        # and byte-for-byte: the wire layer adds no arithmetic or reformatting
        assert dumps(expected).encode() in response.content


class TestHistoryEndpoints:
    def test_unknown_company_empty_list(self, api_client):
        response = api_client.get("/api/v1/companies/ghost/assessments")
        assert response.status_code == 200
        assert response.json() == []

    def test_posted_assessment_appears(self, api_client):
        api_client.post("/api/v1/assessments", content=submission_body())
        body = api_client.get("/api/v1/companies/acme/assessments").json()
        assert len(body) == 1
        assert body[0]["record_id"] == "rec-0001"
        assert body[0]["stored_at"] == "2026-03-01T12:00:00Z"

    def test_sorted_by_submission_timestamp(self, api_client):
        for ts in ("2026-05-01T00:00:00Z", "2026-01-01T00:00:00Z", "2026-03-01T00:00:00Z"):
            api_client.post("/api/v1/assessments", content=submission_body(ts=ts))
        body = api_client.get("/api/v1/companies/acme/assessments").json()
        timestamps = [r["submission"]["timestamp"] for r in body]
        assert timestamps == sorted(timestamps)

    def test_evolution_unknown_company(self, api_client):
        response = api_client.get("/api/v1/companies/ghost/evolution")
        assert response.json() == {"company_id": "ghost", "points": []}

    def test_evolution_mirrors_posted_levels(self, api_client):
        api_client.post("/api/v1/assessments",
                        content=submission_body(implemented=("env-01", "env-02", "env-03", "env-04")))
        body = api_client.get("/api/v1/companies/acme/evolution").json()
        assert body["points"] == [{
            "timestamp": "2026-02-01T00:00:00Z",
            "levels": {"human": 1, "economic": 1, "environmental": 5},
            "overall": 1,
            "catalog_digest_changed": False,
        }]

    def test_reads_do_not_mutate_store(self, api_client, store):
        api_client.post("/api/v1/assessments", content=submission_body())
        before = store.path.read_bytes()
        api_client.get("/api/v1/catalog")
        api_client.get("/api/v1/companies/acme/assessments")
        api_client.get("/api/v1/companies/acme/evolution")
        api_client.get("/api/v1/health")
        assert store.path.read_bytes() == before


class TestErrorTaxonomy:
    def test_every_non_2xx_carries_a_declared_code(self, api_client):
        attempts = [
            api_client.post("/api/v1/assessments", content=b"\xff\xfe"),
            api_client.post("/api/v1/assessments", content=b"[]"),
            api_client.post("/api/v1/assessments", content=submission_body(company="")),
            api_client.post("/api/v1/assessments", content=submission_body(implemented=("zz",))),
            api_client.get("/api/v1/no-such-route"),
            api_client.delete("/api/v1/catalog"),
            api_client.post("/api/v1/assessments",
                            content=json.dumps({"company_id": "x", "timestamp": "bad",
                                                "implemented": []})),
        ]
        for response in attempts:
            assert response.status_code >= 400
            body = response.json()
            assert body["code"] in ERROR_CODES, body
            assert set(body) == {"status", "code", "detail", "path"}
            assert body["status"] == response.status_code

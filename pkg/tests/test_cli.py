"""Command-line surface: exit codes, output formats, the serve lifecycle."""

from __future__ import annotations

import json
import re
import signal
import socket
import subprocess
import sys
import time
import urllib.request

import pytest

from csre4soc.catalog import default_catalog_path
from csre4soc.cli import main
from csre4soc.serialization import loads_strict

CATALOG = str(default_catalog_path())


def write_answers(tmp_path, implemented=(), company="acme", ts="2026-01-15T09:30:00Z",
                  name="answers.json"):
    path = tmp_path / name
    path.write_text(json.dumps(
        {"company_id": company, "timestamp": ts, "implemented": list(implemented)}
    ))
    return str(path)


def run_main(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAssess:
    def test_empty_answers_level_one_and_full_recommendations(self, tmp_path, capsys):
        answers = write_answers(tmp_path)
        code, out, _ = run_main(["assess", "--catalog", CATALOG, "--answers", answers], capsys)
        assert code == 0
        assert "Overall level: L1 Initial" in out
        assert "Recommendations (12):" in out
        assert "A process to collect the software energy consumption should be defined." in out

    def test_unknown_id_exit_1_names_id(self, tmp_path, capsys):
        answers = write_answers(tmp_path, implemented=("env-99",))
        code, _, err = run_main(["assess", "--catalog", CATALOG, "--answers", answers], capsys)
        assert code == 1
        assert "env-99" in err

    def test_json_output_deterministic(self, tmp_path, capsys):
        answers = write_answers(tmp_path, implemented=("env-01", "hum-01"))
        argv = ["assess", "--catalog", CATALOG, "--answers", answers, "--format", "json"]
        code1, out1, _ = run_main(argv, capsys)
        code2, out2, _ = run_main(argv, capsys)
        assert (code1, code2) == (0, 0)
        assert out1 == out2
        doc = loads_strict(out1)
        assert set(doc) == {"result", "recommendations"}

    def test_missing_answers_file_exit_2(self, tmp_path, capsys):
        code, _, err = run_main(
            ["assess", "--catalog", CATALOG, "--answers", str(tmp_path / "nope.json")], capsys)
        assert code == 2
        assert "nope.json" in err

    def test_invalid_catalog_exit_1_with_path(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"catalog_version": "x", "dimensions": []}))
        answers = write_answers(tmp_path)
        code, _, err = run_main(["assess", "--catalog", str(bad), "--answers", answers], capsys)
        assert code == 1
        assert "dimension" in err

    def test_store_flag_appends(self, tmp_path, capsys):
        answers = write_answers(tmp_path, implemented=("eco-01",))
        store = tmp_path / "log.jsonl"
        code, _, err = run_main(
            ["assess", "--catalog", CATALOG, "--answers", answers, "--store", str(store)], capsys)
        assert code == 0
        assert "stored assessment" in err
        assert len(store.read_text().splitlines()) == 1

    def test_catalog_from_environment(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("CSRE4SOC_CATALOG", CATALOG)
        answers = write_answers(tmp_path)
        code, out, _ = run_main(["assess", "--answers", answers], capsys)
        assert code == 0
        assert "Overall level" in out

    def test_missing_catalog_everywhere_exit_2(self, tmp_path, capsys, monkeypatch):
        monkeypatch.delenv("CSRE4SOC_CATALOG", raising=False)
        answers = write_answers(tmp_path)
        code, _, err = run_main(["assess", "--answers", answers], capsys)
        assert code == 2
        assert "--catalog" in err


class TestEvolution:
    def test_empty_store_exit_0(self, tmp_path, capsys):
        code, out, _ = run_main(
            ["evolution", "--store", str(tmp_path / "log.jsonl"), "--company", "acme"], capsys)
        assert code == 0
        assert "No assessments recorded" in out

    def test_two_records_in_timestamp_order(self, tmp_path, capsys):
        store = str(tmp_path / "log.jsonl")
        for ts, implemented in (("2026-06-01T00:00:00Z", ["env-01", "env-02"]),
                                ("2026-01-01T00:00:00Z", [])):
            answers = write_answers(tmp_path, implemented=implemented, ts=ts, name=f"a-{ts}.json")
            assert main(["assess", "--catalog", CATALOG, "--answers", answers,
                         "--store", store, "--format", "json"]) == 0
        capsys.readouterr()
        code, out, _ = run_main(["evolution", "--store", store, "--company", "acme"], capsys)
        assert code == 0
        lines = [l for l in out.splitlines() if l.startswith("2026")]
        assert len(lines) == 2
        assert lines[0].startswith("2026-01-01") and lines[1].startswith("2026-06-01")

    def test_company_isolation(self, tmp_path, capsys):
        store = str(tmp_path / "log.jsonl")
        for company in ("alpha", "beta"):
            answers = write_answers(tmp_path, company=company, name=f"{company}.json")
            assert main(["assess", "--catalog", CATALOG, "--answers", answers,
                         "--store", store]) == 0
        capsys.readouterr()
        code, out, _ = run_main(
            ["evolution", "--store", store, "--company", "alpha", "--format", "json"], capsys)
        assert code == 0
        doc = loads_strict(out)
        assert doc["company_id"] == "alpha"
        assert len(doc["points"]) == 1

    def test_corrupt_store_exit_2(self, tmp_path, capsys):
        store = tmp_path / "log.jsonl"
        store.write_text("not json\n")
        code, _, err = run_main(["evolution", "--store", str(store), "--company", "x"], capsys)
        assert code == 2
        assert "corrupt" in err


@pytest.fixture
def serve_process(tmp_path):
    """Start `csre4soc serve` on an ephemeral port; yield (proc, base_url)."""
    store = tmp_path / "log.jsonl"
    proc = subprocess.Popen(
        [sys.executable, "-m", "csre4soc.cli", "serve", "--catalog", CATALOG,
         "--store", str(store), "--listen", "127.0.0.1:0"],
        stdout=subprocess.PIPE, stderr=subprocess.PIPE, text=True,
    )
    base_url = None
    deadline = time.time() + 15
    while time.time() < deadline:
        line = proc.stderr.readline()
        match = re.search(r"listening on (http://[\d.]+:\d+)", line or "")
        if match:
            base_url = match.group(1)
            break
        if proc.poll() is not None:
            break
    if base_url is None:
        proc.kill()
        pytest.fail(f"server did not report its address: {proc.stderr.read()}")
    try:
        yield proc, base_url, store
    finally:
        if proc.poll() is None:
            proc.send_signal(signal.SIGTERM)
            proc.wait(timeout=10)


def http(method, url, body=None):
    request = urllib.request.Request(url, data=body, method=method)
    deadline = time.time() + 10
    while True:
        try:
            with urllib.request.urlopen(request, timeout=5) as response:
                return response.status, response.read()
        except urllib.error.HTTPError as exc:
            return exc.code, exc.read()
        except OSError:
            if time.time() > deadline:
                raise
            time.sleep(0.1)


class TestServe:
    def test_health_and_assessment_round_trip(self, serve_process):
        proc, base_url, store = serve_process
        status, body = http("GET", f"{base_url}/api/v1/health")
        assert status == 200 and body == b'"ok"'
        submission = json.dumps({"company_id": "acme", "timestamp": "2026-02-01T00:00:00Z",
                                 "implemented": ["env-01"]}).encode()
        status, body = http("POST", f"{base_url}/api/v1/assessments", submission)
        assert status == 201
        record_id = json.loads(body)["record_id"]
        # durable through a real process boundary
        proc.send_signal(signal.SIGTERM)
        proc.wait(timeout=10)
        assert record_id in store.read_text()

    def test_invalid_catalog_exits_1_before_binding(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{}")
        proc = subprocess.run(
            [sys.executable, "-m", "csre4soc.cli", "serve", "--catalog", str(bad),
             "--store", str(tmp_path / "log.jsonl"), "--listen", "127.0.0.1:0"],
            capture_output=True, text=True, timeout=30,
        )
        assert proc.returncode == 1
        assert "listening" not in proc.stderr

    def test_occupied_port_exits_2(self, tmp_path):
        blocker = socket.create_server(("127.0.0.1", 0))
        port = blocker.getsockname()[1]
        try:
            proc = subprocess.run(
                [sys.executable, "-m", "csre4soc.cli", "serve", "--catalog", CATALOG,
                 "--store", str(tmp_path / "log.jsonl"), "--listen", f"127.0.0.1:{port}"],
                capture_output=True, text=True, timeout=30,
            )
        finally:
            blocker.close()
        assert proc.returncode == 2
        assert "cannot bind" in proc.stderr

"""CLI and HTTP service: shared op layer, golden equality, sessions."""

import json
import subprocess
import sys

import pytest
from fastapi.testclient import TestClient

from cycloset.service import create_app


def run_cli(*args, expect=0, as_json=False):
    argv = (["--format", "json", *args] if as_json else list(args))
    proc = subprocess.run(
        [sys.executable, "-m", "cycloset.cli", *argv],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == expect, proc.stderr or proc.stdout
    return json.loads(proc.stdout) if as_json else proc.stdout


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


@pytest.fixture()
def fan_cluster_file(tmp_path):
    spec = {"poset": {"kind": "zn", "n": 8},
            "arcs": [[0, 2], [0, 3], [0, 4], [0, 5], [0, 6]]}
    path = tmp_path / "cluster8.json"
    path.write_text(json.dumps(spec))
    return str(path)


class TestExitCodes:
    def test_usage_error_is_two(self):
        run_cli("no-such-command", expect=2)
        run_cli(expect=2)

    def test_validation_failure_is_one(self, tmp_path):
        # single nonzero entry cannot satisfy the coboundary identity
        rows = [[x, y, z, 0]
                for x in "abcd" for y in "abcd" for z in "abcd"
                if x != y and y != z]
        rows = [r[:3] + [1] if r[:3] == ["a", "b", "c"] else r for r in rows]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({
            "kind": "table", "carrier": ["a", "b", "c", "d"],
            "cocycle": rows,
        }))
        out = run_cli("validate-cocycle", str(bad), expect=1, as_json=True)
        assert out["valid"] is False
        assert out["violations"]

    def test_success_is_zero(self):
        out = run_cli("validate-cocycle", "zn:8", as_json=True)
        assert out["valid"] is True


class TestCounts:
    def test_clusters_count_z8(self):
        assert run_cli("clusters", "zn:8", "--count").strip() == "132"

    def test_theta_count(self):
        out = run_cli("theta", "zn:24", "--theta", "1/8", "--count")
        assert out.strip() == "396"

    def test_inadmissible_theta_exits_one(self):
        run_cli("theta", "zn:24", "--theta", "1/2", "--count", expect=1)


class TestGoldenEquality:
    """`--format json` bodies byte-match the HTTP endpoint bodies."""

    def test_homdim(self, client):
        args = {"poset": "zn:8", "from": [0, 3], "to": [2, 5], "ext": True}
        cli_out = run_cli("homdim", "zn:8", "--from", "0,3", "--to", "2,5",
                          "--ext", as_json=True)
        api_out = client.post("/api/homdim", json=args).json()
        assert cli_out == api_out

    def test_triangulation_check(self, client, tmp_path):
        from cycloset.descriptors import cluster_to_json
        from cycloset.symbolic import straight_zigzag

        S = straight_zigzag()
        cj = json.loads(json.dumps(
            cluster_to_json(S.poset, S.arcs, S.families)))
        api_out = client.post("/api/triangulation-check",
                              json={"cluster": cj}).json()
        assert api_out["verdict"] is True
        f = tmp_path / "zigzag.json"
        f.write_text(json.dumps(cj))
        cli_out = run_cli("triangulation-check", str(f), as_json=True)
        assert cli_out == api_out

    def test_cactus(self, client, tmp_path):
        spec = {
            "poset": {"kind": "z_zinfty", "limits": 2},
            "rho": {"classes": [[0, 1]]},
        }
        api_out = client.post("/api/cactus", json=spec).json()
        f = tmp_path / "rho.json"
        f.write_text(json.dumps({"classes": [[0, 1]]}))
        cli_out = run_cli("cactus", "z_zinfty:2", "--rho", str(f),
                          as_json=True)
        assert cli_out == api_out

    def test_schema_version_everywhere(self, client):
        body = client.post("/api/homdim", json={
            "poset": "zn:8", "from": [0, 3], "to": [2, 5]}).json()
        assert body["schema_version"] == 1
        cli_body = run_cli("covering", "zn:8", as_json=True)
        assert cli_body["schema_version"] == 1


class TestMutateCli:
    def test_double_flip_restores_cluster(self, tmp_path, fan_cluster_file):
        seed_arcs = [[0, 2], [0, 3], [0, 4], [0, 5], [0, 6]]
        first = run_cli("mutate", "--cluster", fan_cluster_file,
                        "--arc", "0,3", as_json=True)
        assert first["removed"] == [0, 3]
        assert first["added"] == first["exchange_partner"]
        assert "ext_changes" in first
        step = tmp_path / "step.json"
        step.write_text(json.dumps({"poset": {"kind": "zn", "n": 8},
                                    "arcs": first["cluster"]["arcs"]}))
        partner = ",".join(map(str, first["exchange_partner"]))
        second = run_cli("mutate", "--cluster", str(step), "--arc", partner,
                         as_json=True)
        assert second["exchange_partner"] == [0, 3]
        assert sorted(map(tuple, second["cluster"]["arcs"])) == \
            sorted(map(tuple, seed_arcs))
        assert first["cluster"]["hash"] != second["cluster"]["hash"]


class TestRenderCli:
    def test_render_writes_svg(self, tmp_path, fan_cluster_file):
        out = tmp_path / "out.svg"
        run_cli("render", fan_cluster_file, "--out", str(out))
        text = out.read_text()
        assert text.startswith("<svg")
        assert text.count('class="arc"') == 5


class TestSessions:
    def test_catalog_lists_presets(self, client):
        body = client.get("/api/posets").json()
        names = [e["name"] for e in body["posets"]]
        assert "zn:8" in names
        assert any(n.startswith("z_zinfty") for n in names)

    def test_double_flip_restores_hash(self, client):
        created = client.post("/api/session", json={"poset": "zn:8"}).json()
        sid = created["id"]
        seed_hash = created["cluster"]["hash"]
        arcs = created["cluster"]["arcs"]
        arc = ",".join(map(str, arcs[0]))
        first = client.post(f"/api/session/{sid}/mutate",
                            json={"arc": arc}).json()
        assert first["cluster"]["hash"] != seed_hash
        back = ",".join(map(str, first["exchange_partner"]))
        second = client.post(f"/api/session/{sid}/mutate",
                             json={"arc": back}).json()
        assert second["cluster"]["hash"] == seed_hash
        history = client.get(f"/api/session/{sid}/history").json()
        assert history["seed_hash"] == seed_hash
        assert history["current_hash"] == seed_hash
        assert len(history["history"]) == 2

    def test_neighbors_match_nonfrozen_arcs(self, client):
        created = client.post("/api/session",
                              json={"poset": "zn:5@id"}).json()
        sid = created["id"]
        body = client.get(f"/api/session/{sid}/neighbors").json()
        cluster = created["cluster"]["arcs"]
        assert len(body["neighbors"]) == len(cluster) - len(body["frozen"])
        assert len(body["frozen"]) == 5

    def test_missing_session_is_404(self, client):
        r = client.get("/api/session/deadbeef/neighbors")
        assert r.status_code == 404
        assert "error" in r.json()

    def test_frozen_arc_mutation_is_409(self, client):
        created = client.post("/api/session",
                              json={"poset": "zn:5@id"}).json()
        sid = created["id"]
        frozen = client.get(
            f"/api/session/{sid}/neighbors").json()["frozen"][0]
        r = client.post(f"/api/session/{sid}/mutate",
                        json={"arc": ",".join(map(str, frozen))})
        assert r.status_code == 409

    def test_bad_arc_payload_is_422(self, client):
        created = client.post("/api/session", json={"poset": "zn:8"}).json()
        sid = created["id"]
        r = client.post(f"/api/session/{sid}/mutate",
                        json={"arc": "not-an-arc"})
        assert r.status_code == 422
        assert "error" in r.json()

    def test_deep_tail_mutation_is_409(self, client):
        created = client.post("/api/session", json={
            "poset": {"kind": "z_zinfty", "limits": 2},
            "seed": "zigzag"}).json()
        sid = created["id"]
        r = client.post(f"/api/session/{sid}/mutate", json={
            "arc": [{"limit": 0, "pos": 30}, {"limit": 1, "pos": 31}]})
        assert r.status_code in (409, 422)

    def test_svg_is_deterministic_per_state(self, client):
        a = client.post("/api/session", json={"poset": "zn:8"}).json()
        b = client.post("/api/session", json={"poset": "zn:8"}).json()
        assert a["svg"] == b["svg"]

    def test_rotation_session(self, client):
        created = client.post("/api/session", json={
            "poset": "zn:24@1/8"}).json()
        assert len(created["cluster"]["arcs"]) == 5
        sid = created["id"]
        nb = client.get(f"/api/session/{sid}/neighbors").json()
        assert len(nb["neighbors"]) == 5


class TestStatePersistence:
    def test_sessions_survive_restart(self, tmp_path):
        state = str(tmp_path / "state")
        app1 = create_app(state_dir=state)
        with TestClient(app1) as c1:
            created = c1.post("/api/session", json={"poset": "zn:8"}).json()
            sid = created["id"]
            arcs = created["cluster"]["arcs"]
            first = c1.post(f"/api/session/{sid}/mutate", json={
                "arc": ",".join(map(str, arcs[0]))}).json()
        app2 = create_app(state_dir=state)
        with TestClient(app2) as c2:
            hist = c2.get(f"/api/session/{sid}/history")
            assert hist.status_code == 200
            body = hist.json()
            assert body["current_hash"] == first["cluster"]["hash"]
            assert len(body["history"]) == 1

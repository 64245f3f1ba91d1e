"""End-to-end checks of the command-line tool (exit codes and schemas)."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("SNTRANK_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="SNTRANK_CLI not set")

K6_EDGELIST = "n 6\n" + "".join(
    f"e {u} {v}\n" for u in range(1, 7) for v in range(u + 1, 7)
)


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], capture_output=True, text=True, input=stdin)


def test_rank_k6(tmp_path):
    path = tmp_path / "k6.txt"
    path.write_text(K6_EDGELIST)
    out = run("rank", str(path))
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc == {"st_plus": 5, "status": "exact"}


def test_rank_structured_and_methods(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"n": 4, "edges": [[1, 2], [2, 3], [3, 4], [4, 1]]}))
    for method in ["auto", "exact", "closed"]:
        out = run("rank", str(path), "--method", method)
        assert out.returncode == 0
        assert json.loads(out.stdout)["st_plus"] == 2


def test_katona():
    out = run("katona", "6")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["s"] == 5
    assert doc["witness_factors"] == [2, 3]
    assert doc["cover_order"] == 5


def test_cover_round_trips_through_verify(tmp_path):
    graph = tmp_path / "k6.txt"
    graph.write_text(K6_EDGELIST)
    out = run("cover", str(graph))
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    witness = tmp_path / "cover.json"
    witness.write_text(json.dumps(doc["cover"]))
    verdict = run("verify", str(graph), str(witness))
    assert verdict.returncode == 0
    assert json.loads(verdict.stdout)["valid"] is True


def test_verify_published_factors(tmp_path):
    graph = tmp_path / "k6.txt"
    graph.write_text(K6_EDGELIST)
    b = [
        [1, 0, 1, 0, 0],
        [1, 0, 0, 1, 0],
        [1, 0, 0, 0, 1],
        [0, 1, 1, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 1, 0, 0, 1],
    ]
    c = [
        [0, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
        [0, 0, 0, 1, 1],
        [0, 0, 1, 0, 1],
        [0, 0, 1, 1, 0],
    ]
    witness = tmp_path / "bc.json"
    witness.write_text(json.dumps({"B": b, "C": c}))
    out = run("verify", str(graph), str(witness))
    assert out.returncode == 0
    assert json.loads(out.stdout)["valid"] is True

    # break the middle factor: loops appear, verification fails with exit 4
    witness.write_text(json.dumps({"B": b, "C": [[1 if i == j else 0 for j in range(5)] for i in range(5)]}))
    bad = run("verify", str(graph), str(witness))
    assert bad.returncode == 4
    doc = json.loads(bad.stdout)
    assert doc["valid"] is False
    assert doc["forbidden"]


def test_factorize_and_enumerate(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text("n 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n")
    fact = json.loads(run("factorize", str(path)).stdout)
    assert fact["st_plus"] == 2
    assert fact["B"] == [[1, 0], [0, 1], [1, 0], [0, 1]]
    assert fact["C"] == [[0, 1], [1, 0]]

    en = json.loads(run("enumerate", str(path)).stdout)
    assert en["count"] == 1
    assert en["covers"][0]["components"] == [[1, 3], [2, 4]]


def test_uniqueness(tmp_path):
    path = tmp_path / "p5.txt"
    path.write_text("n 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\n")
    doc = json.loads(run("uniqueness", str(path)).stdout)
    assert doc["st_plus"] == 4
    assert doc["unique"] is True
    assert doc["essentially_unique"] is True
    assert doc["unique_cover_graph"] is True


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("e 1 2\n")
    out = run("rank", str(path))
    assert out.returncode == 2

    missing = run("rank", str(tmp_path / "nope.txt"))
    assert missing.returncode == 2


def test_limit_exit_code(tmp_path):
    path = tmp_path / "big.txt"
    path.write_text("n 21\n" + "".join(f"e {u} {u+1}\n" for u in range(1, 21)))
    out = run("rank", str(path), "--method", "exact")
    assert out.returncode == 3

    looped5 = tmp_path / "l5.txt"
    looped5.write_text(
        json.dumps({"n": 5, "edges": [[1, 2], [1, 3], [2, 2], [2, 3], [2, 4], [3, 3], [3, 4], [3, 5], [4, 4], [4, 5]]})
    )
    closed_only = run("rank", str(looped5), "--method", "closed")
    assert closed_only.returncode == 3


def test_max_order_cap(tmp_path):
    path = tmp_path / "k6.txt"
    path.write_text(K6_EDGELIST)
    out = run("rank", str(path), "--method", "exact", "--max-order", "3")
    assert out.returncode == 3
    doc = json.loads(out.stdout)
    assert doc["status"] == "cap_reached"
    assert doc["st_plus"] >= 5  # an upper bound only


def test_deterministic_output(tmp_path):
    path = tmp_path / "k6.txt"
    path.write_text(K6_EDGELIST)
    first = run("cover", str(path), "--threads", "2").stdout
    second = run("cover", str(path), "--threads", "1").stdout
    assert first == second

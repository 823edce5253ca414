import io
import json
import subprocess
import sys

import pytest

from horadam.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count_cubes():
    assert call("count", "--a", "3", "--b", "2", "--n", "3", "--what", "cubes") == (0, "39 74 44 8\n", "")


@pytest.mark.parametrize(
    "what, expected",
    [("vertices", "39"), ("edges", "74"), ("cube-number", "165"), ("degrees", "2:4 3:10 4:16 5:8 6:1")],
)
def test_count_kinds(what, expected):
    code, out, _ = call("count", "--a", "3", "--b", "2", "--n", "3", "--what", what)
    assert code == 0 and out.strip() == expected


def test_graph_edgelist():
    code, out, _ = call("graph", "--a", "1", "--b", "2", "--n", "3", "--format", "edgelist")
    edges = [line for line in out.splitlines() if not line.startswith("#")]
    assert code == 0 and len(edges) == 4


def test_graph_formats():
    code, out, _ = call("graph", "--a", "2", "--b", "2", "--n", "3", "--format", "json")
    assert code == 0 and json.loads(out)["meta"]["e_n"] == 24
    code, out, _ = call("graph", "--a", "2", "--b", "2", "--n", "3", "--format", "dot", "--color")
    assert code == 0 and out.count("color=") == 16


def test_hamilton():
    code, out, _ = call("hamilton", "--a", "1", "--b", "2", "--n", "4")
    lines = out.splitlines()
    assert code == 0 and lines[1] == "0202" and lines[-1] == "0020" and len(lines) == 12
    code, out, _ = call("hamilton", "--a", "2", "--b", "2", "--n", "4", "--cycle")
    assert code == 0 and len(out.splitlines()) == 45
    code, out, _ = call("hamilton", "--a", "1", "--b", "2", "--n", "4", "--cycle")
    assert code == 0 and out == "impossible: bipartite graph of odd order\n"


def test_series():
    code, out, _ = call("series", "--a", "1", "--b", "2", "--which", "S", "--order", "6")
    assert code == 0 and out == "1 1 3 5 11 21\n"
    code, out, _ = call(
        "series", "--a", "2", "--b", "2", "--which", "Delta", "--order", "3", "--order-y", "5"
    )
    assert out.splitlines()[2] == "x^2: 0 1 4 1"


def test_tables():
    code, out, _ = call("tables", "--a", "3", "--b", "2", "--max-n", "5")
    assert code == 0
    assert "5\t32x^5+304x^4+1096x^3+1884x^2+1554x+495" in out
    assert "4\t0\t0\t1\t12\t30\t47\t37\t11\t1\t0\t0" in out


def test_verify_small():
    code, out, _ = call("verify", "--suite", "edges", "--max-n", "4", "--a-range", "1:2", "--b-range", "2")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass" and doc["grid"] == {"a": [1, 2], "b": [2], "max_n": 4}
    assert "duration_s" not in doc


def test_verify_timing_flag():
    code, out, _ = call(
        "verify", "--suite", "median", "--max-n", "2", "--a-range", "1", "--b-range", "1", "--timing"
    )
    assert code == 0 and "duration_s" in json.loads(out)


def test_exit_codes():
    assert call("count", "--a", "0", "--b", "2", "--n", "3", "--what", "edges")[0] == 2
    assert call("count", "--a", "1", "--b", "2")[0] == 2
    assert call("verify", "--a-range", "3:1")[0] == 2
    assert call("graph", "--a", "4", "--b", "4", "--n", "12", "--cap", "1000")[0] == 3
    assert call("hamilton", "--a", "1", "--b", "2", "--n", "0")[0] == 2


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "horadam", "verify", "--suite", "grids", "--max-n", "4"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout

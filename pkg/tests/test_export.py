import json

import pytest

from horadam.errors import ParameterError
from horadam.export import from_edgelist, from_json, to_dot, to_edgelist, to_json
from horadam.graph import build_graph
from horadam.words import Params


def test_edgelist_example():
    text = to_edgelist(build_graph(Params(1, 2, 3)))
    lines = text.splitlines()
    assert lines[0] == "# horadam a=1 b=2 n=3"
    assert lines[1].startswith("# words:")
    assert lines[2:] == ["000\t001", "000\t010", "001\t002", "010\t020"]


@pytest.mark.parametrize("abn", [(1, 2, 3), (3, 2, 3), (2, 2, 4), (6, 5, 2), (4, 1, 0), (1, 3, 1)])
def test_round_trips(abn):
    g = build_graph(Params(*abn))
    assert from_edgelist(to_edgelist(g)) == g
    assert from_json(to_json(g)) == g


def test_wide_alphabet_uses_commas():
    text = to_edgelist(build_graph(Params(6, 5, 2)))
    assert "comma-separated" in text.splitlines()[1]
    assert "0,9\t0,10" in text


def test_json_layout():
    doc = json.loads(to_json(build_graph(Params(2, 2, 4))))
    assert doc["params"] == {"a": 2, "b": 2, "n": 4}
    assert doc["meta"]["s_n"] == 44 and doc["meta"]["e_n"] == 88
    assert len(doc["vertices"]) == 44 and len(doc["edges"]) == 88
    assert doc["vertices"] == sorted(doc["vertices"])


def test_dot():
    g = build_graph(Params(1, 2, 3))
    plain = to_dot(g)
    assert plain.count(" -- ") == 4 and "color" not in plain
    colored = to_dot(g, color=True)
    assert '"001" [color=red];' in colored and '"000" [color=blue];' in colored


def test_output_is_deterministic():
    p = Params(3, 3, 4)
    assert to_edgelist(build_graph(p)) == to_edgelist(build_graph(p))
    assert to_json(build_graph(p)) == to_json(build_graph(p))


def test_bad_inputs():
    with pytest.raises(ParameterError):
        from_edgelist("000\t001\n")
    with pytest.raises(ParameterError):
        from_edgelist("# horadam a=1 b=2 n=3\n000 001\n")
    with pytest.raises(ParameterError):
        from_edgelist("# horadam a=1 b=2 n=3\n000\t200\n")
    with pytest.raises(ParameterError):
        from_json("{}")
    doc = json.loads(to_json(build_graph(Params(1, 2, 3))))
    doc["edges"].append([0, 9])
    with pytest.raises(ParameterError):
        from_json(json.dumps(doc))

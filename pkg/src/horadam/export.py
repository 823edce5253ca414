"""Edge-list, DOT and JSON serialization of Horadam cubes.

Vertices are written in rendered word form (digit strings when a+b <= 10,
comma-separated letters otherwise) and the convention is named in every
header.  Output depends only on the graph, so it is byte-identical across
runs.
"""

from __future__ import annotations

import json
import re

from .errors import ParameterError
from .graph import HoradamGraph, build_graph, two_coloring
from .sequences import edge_count, vertex_count
from .words import Params, parse_word, render_word, uses_compact_form

COLOR_NAMES = ("blue", "red")

_HEADER = re.compile(r"#\s*horadam\s+a=(\d+)\s+b=(\d+)\s+n=(\d+)\s*$")


def word_format(p: Params) -> str:
    return "compact digits" if uses_compact_form(p) else "comma-separated letters"


def _header(p: Params, comment: str = "#") -> list[str]:
    return [f"{comment} horadam a={p.a} b={p.b} n={p.n}", f"{comment} words: {word_format(p)}"]


def to_edgelist(g: HoradamGraph) -> str:
    p = g.params
    lines = _header(p)
    names = [render_word(w, p) for w in g.vertices]
    lines += [f"{names[i]}\t{names[j]}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def to_dot(g: HoradamGraph, color: bool = False) -> str:
    p = g.params
    lines = _header(p, "//")
    lines.append(f'graph "horadam_{p.a}_{p.b}_{p.n}" {{')
    names = [render_word(w, p) for w in g.vertices]
    colors = two_coloring(g) if color else None
    for i, name in enumerate(names):
        attr = f" [color={COLOR_NAMES[colors[i]]}]" if colors else ""
        lines.append(f'  "{name}"{attr};')
    lines += [f'  "{names[i]}" -- "{names[j]}";' for i, j in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: HoradamGraph) -> str:
    p = g.params
    doc = {
        "params": {"a": p.a, "b": p.b, "n": p.n},
        "vertices": [render_word(w, p) for w in g.vertices],
        "edges": [[i, j] for i, j in g.edges()],
        "meta": {
            "s_n": vertex_count(p),
            "e_n": edge_count(p),
            "word_format": word_format(p),
        },
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _assemble(base: HoradamGraph, edges: list[tuple[int, int]]) -> HoradamGraph:
    nbrs: list[set[int]] = [set() for _ in range(base.num_vertices)]
    for i, j in edges:
        if i == j:
            raise ParameterError(f"self-loop at vertex {i}")
        nbrs[i].add(j)
        nbrs[j].add(i)
    return HoradamGraph(base.params, base.vertices, tuple(tuple(sorted(s)) for s in nbrs))


def from_edgelist(text: str) -> HoradamGraph:
    """Rebuild a graph from to_edgelist output; the vertex set comes from the header."""
    lines = text.splitlines()
    params = None
    for line in lines:
        m = _HEADER.match(line.strip())
        if m:
            params = Params(*map(int, m.groups()))
            break
    if params is None:
        raise ParameterError("edge list lacks a '# horadam a=.. b=.. n=..' header")
    base = build_graph(params)
    edges = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ParameterError(f"line {lineno}: expected two tab-separated words")
        u, w = (base.index(parse_word(x, params)) for x in parts)
        edges.append((u, w))
    return _assemble(base, edges)


def from_json(text: str) -> HoradamGraph:
    try:
        doc = json.loads(text)
        params = Params(doc["params"]["a"], doc["params"]["b"], doc["params"]["n"])
        names = doc["vertices"]
        raw_edges = doc["edges"]
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise ParameterError(f"malformed graph JSON: {exc}") from exc
    base = build_graph(params)
    if tuple(parse_word(x, params) for x in names) != base.vertices:
        raise ParameterError("JSON vertex list is not the lexicographic word list")
    size = base.num_vertices
    edges = []
    for e in raw_edges:
        if len(e) != 2 or not all(isinstance(i, int) and 0 <= i < size for i in e):
            raise ParameterError(f"bad edge {e!r}")
        edges.append((e[0], e[1]))
    return _assemble(base, edges)


FORMATS = {
    "edgelist": to_edgelist,
    "dot": to_dot,
    "json": to_json,
}

"""Property tests over random parameters, words and triples."""

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from horadam.graph import adjacent, bfs_distances, build_graph, color_of
from horadam.hamilton import hamiltonian_cycle, hamiltonian_path, path_endpoints, validate_walk, Walk
from horadam.sequences import (
    cube_coefficients,
    degree_rows,
    edge_count,
    edge_count_binomial,
    edge_count_convolution,
    vertex_count,
    vertex_count_closed,
)
from horadam.structure import median_of_triple, sigma_decode, sigma_embed
from horadam.words import Params, concat_blocks, decompose_blocks, enumerate_words, is_valid_word

small = st.integers(min_value=1, max_value=5)


@st.composite
def params(draw, max_n=6, cap=3000):
    p = Params(draw(small), draw(small), draw(st.integers(min_value=0, max_value=max_n)))
    assume(vertex_count(p) <= cap)
    return p


@st.composite
def word_of(draw, p):
    words = enumerate_words(p)
    return words[draw(st.integers(min_value=0, max_value=len(words) - 1))]


@given(params(max_n=30, cap=10**30))
def test_count_formulas_agree(p):
    assert vertex_count(p) == vertex_count_closed(p)
    assert edge_count(p) == edge_count_convolution(p) == edge_count_binomial(p)


@given(params())
def test_enumeration_matches_count_and_validity(p):
    words = enumerate_words(p)
    assert len(words) == vertex_count(p)
    assert all(is_valid_word(w, p) for w in words)


@given(st.data(), params(max_n=8))
def test_block_round_trip(data, p):
    w = data.draw(word_of(p))
    assert concat_blocks(decompose_blocks(w, p)) == w


@given(st.data(), params(max_n=8))
def test_invalid_mutation_rejected(data, p):
    assume(p.n >= 2)
    w = list(data.draw(word_of(p)))
    i = data.draw(st.integers(min_value=1, max_value=p.n - 1))
    assume(w[i - 1] != 0)
    w[i] = data.draw(st.integers(min_value=p.a, max_value=p.top))
    assert not is_valid_word(w, p)


@given(st.data(), params(max_n=7))
def test_sigma_round_trip_and_edges(data, p):
    u = data.draw(word_of(p))
    v = data.draw(word_of(p))
    assert sigma_decode(sigma_embed(u, p), p) == u
    hd = sum(x != y for x, y in zip(sigma_embed(u, p), sigma_embed(v, p)))
    assert (hd == 1) == adjacent(u, v)


@settings(max_examples=40, deadline=None)
@given(st.data(), params(max_n=6, cap=600))
def test_median_lies_on_all_geodesics(data, p):
    g = build_graph(p)
    x, y, z = (data.draw(word_of(p)) for _ in range(3))
    m = g.index(median_of_triple(x, y, z, p))
    dist = {w: bfs_distances(g, g.index(w)) for w in (x, y, z)}
    for s, t in [(x, y), (y, z), (x, z)]:
        assert dist[s][m] + dist[t][m] == dist[s][g.index(t)]


@settings(deadline=None)
@given(params())
def test_coloring_proper_and_degrees(p):
    g = build_graph(p)
    assert all(color_of(g.vertices[i]) != color_of(g.vertices[j]) for i, j in g.edges())
    hist: dict[int, int] = {}
    for nb in g.adjacency:
        hist[len(nb)] = hist.get(len(nb), 0) + 1
    assert degree_rows(p.a, p.b, p.n)[p.n] == hist


@given(params(max_n=12, cap=10**9))
def test_cube_table_anchors(p):
    c = cube_coefficients(p).as_list()
    assert c[0] == vertex_count(p)
    assert (c[1] if len(c) > 1 else 0) == edge_count(p)
    assert all(x > 0 for x in c)


@settings(max_examples=60, deadline=None)
@given(params(max_n=8, cap=5000))
def test_hamiltonian_walks(p):
    assume(p.n >= 1)
    g = build_graph(p)
    walk = hamiltonian_path(p, g)
    assert validate_walk(g, walk)
    ends = {g.vertices[walk.vertices[0]], g.vertices[walk.vertices[-1]]}
    c = path_endpoints(p)
    assert ends == {c.start, c.end}
    r = hamiltonian_cycle(p, g)
    if isinstance(r, Walk):
        assert validate_walk(g, r)
    else:
        assert (r.status == "impossible") == (vertex_count(p) % 2 == 1)

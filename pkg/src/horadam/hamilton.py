"""Hamiltonian paths and cycles built from the canonical decomposition.

Paths are assembled inductively: a boustrophedon through the a copies of
Pi_{n-1} (from copy a-1 down to copy 0), one edge from 0(a-1)... to 0a...,
then a boustrophedon through the b copies of Pi_{n-2}.  Each copy is walked
with the path already built for the smaller cube.

Cycles start from a cover of the vertex set by "ladders" (two parallel
copies walked along the same path, out and back) plus single edges, then
merge pieces by exchanging a pair of parallel edges for the two rungs
joining them.  Every result is checked by validate_walk before returning.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from . import config
from .errors import InternalError, ParameterError
from .graph import HoradamGraph, build_graph
from .sequences import vertex_count
from .words import Params, Word


class WalkKind(Enum):
    PATH = "path"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Walk:
    kind: WalkKind
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


class ParityCase(Enum):
    ODD_EVEN = "a odd, b even"
    ODD_ODD = "a odd, b odd"
    EVEN_EVEN = "a even, b even"
    EVEN_ODD = "a even, b odd"


@dataclass(frozen=True)
class EndpointContract:
    start: Word
    end: Word
    parity_case: ParityCase

    def oriented(self) -> tuple[Word, Word]:
        """(first, last) vertex of the returned path.

        The path begins at the endpoint patterned on 0(a+b-1): ``start`` when
        a is odd and ``end`` when a is even.
        """
        if self.parity_case in (ParityCase.EVEN_EVEN, ParityCase.EVEN_ODD):
            return self.end, self.start
        return self.start, self.end


@dataclass(frozen=True)
class NoCycle:
    """Returned instead of a cycle; ``impossible`` is a proof, ``not_guaranteed`` is not."""

    status: str  # "impossible" | "not_guaranteed"
    reason: str


def parity_case(a: int, b: int) -> ParityCase:
    return {
        (1, 0): ParityCase.ODD_EVEN,
        (1, 1): ParityCase.ODD_ODD,
        (0, 0): ParityCase.EVEN_EVEN,
        (0, 1): ParityCase.EVEN_ODD,
    }[(a % 2, b % 2)]


def _periodic(pattern: Sequence[int], n: int) -> Word:
    return tuple(pattern[i % len(pattern)] for i in range(n))


def _endpoints(a: int, b: int, n: int) -> tuple[Word, Word]:
    top, last = a + b - 1, a - 1
    case = parity_case(a, b)
    if case is ParityCase.ODD_EVEN:
        return _periodic((0, top), n), (last,) + _periodic((0, top), n - 1)
    if case is ParityCase.ODD_ODD:
        return _periodic((0, top, last), n), _periodic((last, 0, top), n)
    if case is ParityCase.EVEN_EVEN:
        other = (0,) if n == 1 else (0, top) + (last,) * (n - 2)
        return (last,) * n, other
    return (last,) * n, _periodic((0, top), n)


def path_endpoints(p: Params) -> EndpointContract:
    """Endpoints of the constructed Hamiltonian path, by parity case.

    >>> c = path_endpoints(Params(1, 2, 4)); c.start, c.end
    ((0, 2, 0, 2), (0, 0, 2, 0))
    """
    if p.n < 1:
        raise ParameterError("Hamiltonian path endpoints are defined for n >= 1")
    start, end = _endpoints(p.a, p.b, p.n)
    return EndpointContract(start, end, parity_case(p.a, p.b))


def _orient(words: Sequence[Word], forward: bool) -> list[Word]:
    return list(words) if forward else list(reversed(words))


def _snake(prefixes: Sequence[Word], path: Sequence[Word], forward: bool) -> list[Word]:
    """Walk each prefixed copy in turn, reversing direction every time."""
    out: list[Word] = []
    for t, pre in enumerate(prefixes):
        seg = _orient(path, forward == (t % 2 == 0))
        out.extend(pre + w for w in seg)
    return out


@lru_cache(maxsize=64)
def _path_words(a: int, b: int, n: int) -> tuple[Word, ...]:
    """Hamiltonian path of Pi^{a,b}_n from the contract start to its end.

    The public path reverses this for even a; the induction needs the fixed
    start-to-end orientation.
    """
    if n == 0:
        return ((),)
    start, end = _endpoints(a, b, n)
    if n == 1:
        words = [(k,) for k in range(a)]
        return tuple(words if words[0] == start else reversed(words))

    top, last = a + b - 1, a - 1
    h1 = _path_words(a, b, n - 1)
    h2 = _path_words(a, b, n - 2)
    letter_prefixes = [(k,) for k in range(a - 1, -1, -1)]
    block_prefixes = [(0, l) for l in range(a, top + 1)]
    for forward in (True, False):
        head = _snake(letter_prefixes, h1, forward)
        tail_word = head[-1][1:]
        if tail_word[0] != last:
            continue
        gamma = tail_word[1:]
        for forward2 in (True, False):
            if _orient(h2, forward2)[0] != gamma:
                continue
            full = head + _snake(block_prefixes, h2, forward2)
            if (full[0], full[-1]) == (start, end):
                return tuple(full)
            if (full[-1], full[0]) == (start, end):
                return tuple(reversed(full))
    raise InternalError(f"no stitching reaches the endpoints for a={a}, b={b}, n={n}")


def _to_indices(g: HoradamGraph, words: Sequence[Word]) -> tuple[int, ...]:
    return tuple(g.index(w) for w in words)


def validate_walk(g: HoradamGraph, w: Walk) -> bool:
    verts = w.vertices
    if len(verts) != g.num_vertices or len(set(verts)) != len(verts):
        return False
    if any(not 0 <= v < g.num_vertices for v in verts):
        return False
    for u, v in zip(verts, verts[1:]):
        if not g.has_edge(u, v):
            return False
    if w.kind is WalkKind.CYCLE:
        if len(verts) < 3 or not g.has_edge(verts[-1], verts[0]):
            return False
    return True


def _check_cap(p: Params, cap: int) -> None:
    from .errors import ResourceLimitError

    size = vertex_count(p)
    if size > cap:
        raise ResourceLimitError(f"{p} has {size} vertices, over the cap of {cap}")


def hamiltonian_path(p: Params, g: HoradamGraph | None = None, cap: int = config.VERTEX_CAP) -> Walk:
    if p.n < 1:
        raise ParameterError("Hamiltonian paths are constructed for n >= 1")
    _check_cap(p, cap)
    g = g or build_graph(p, cap)
    words = _path_words(p.a, p.b, p.n)
    if p.a % 2 == 0:
        words = words[::-1]
    walk = Walk(WalkKind.PATH, _to_indices(g, words))
    if not validate_walk(g, walk):
        raise InternalError(f"{p}: constructed path failed validation")
    return walk


# Cycles ----------------------------------------------------------------------


def cycle_guaranteed(p: Params) -> bool:
    """The three parity classes in which a Hamiltonian cycle is constructed."""
    a, b, n = p.a, p.b, p.n
    if n < 3:
        return False
    case = parity_case(a, b)
    if case is ParityCase.EVEN_EVEN:
        return True
    if case is ParityCase.EVEN_ODD:
        return n % 2 == 1
    if case is ParityCase.ODD_ODD:
        return n % 3 == 2
    return False


def _ladder(pre1: Word, pre2: Word, path: Sequence[Word]) -> list[Word]:
    """Out along one copy, back along the parallel one; a lone vertex pair is an edge."""
    return [pre1 + w for w in path] + [pre2 + w for w in reversed(path)]


def _ladders(prefixes: Sequence[Word], path: Sequence[Word]) -> list[list[Word]]:
    return [_ladder(prefixes[i], prefixes[i + 1], path) for i in range(0, len(prefixes) - 1, 2)]


def _cover(a: int, b: int, m: int) -> list[list[Word]]:
    """Disjoint cycles (edges count as 2-cycles) covering every vertex of Pi_m.

    Copies of the same smaller cube that are joined by a perfect matching are
    paired into ladders.  A copy left without a partner is covered
    recursively.
    """
    top, last = a + b - 1, a - 1
    if m == 0:
        raise InternalError("a single vertex cannot be covered by cycles")
    if m == 1:
        if a % 2:
            raise InternalError("an odd path cannot be covered by edges")
        return [[(k,), (k + 1,)] for k in range(0, a, 2)]

    pieces: list[list[Word]] = []
    if a % 2 == 0:
        pieces += _ladders([(k,) for k in range(a)], _path_words(a, b, m - 1))
        blocks = [(0, l) for l in range(a, top + 1)]
        h2 = _path_words(a, b, m - 2)
        if b % 2 == 0:
            pieces += _ladders(blocks, h2)
        else:
            pieces += _ladders(blocks[1:], h2)
            pieces += [[(0, a) + w for w in piece] for piece in _cover(a, b, m - 2)]
        return pieces

    if b % 2 == 0:
        raise InternalError("a odd and b even give an odd vertex count")
    pieces += _ladders([(k,) for k in range(1, a)], _path_words(a, b, m - 1))
    chain = [(0, k) for k in range(a)] + [(0, l) for l in range(a, top + 1)]
    pieces += _ladders(chain, _path_words(a, b, m - 2))
    if m >= 3:
        inner = [(0, 0, l) for l in range(a, top + 1)]
        pieces += _ladders(inner[1:], _path_words(a, b, m - 3))
        pieces += [[(0, 0, a) + w for w in piece] for piece in _cover(a, b, m - 3)]
    return pieces


def _merge_pieces(g: HoradamGraph, pieces: list[list[int]]) -> list[int]:
    """Join disjoint cycles into one by square exchanges.

    For an edge u-v of the growing cycle and an edge u'-v' of an unmerged
    piece with u~u' and v~v', drop both edges and add the rungs u-u', v-v'.
    Candidate edges are scanned breadth-first in a fixed order.
    """
    size = g.num_vertices
    nxt = [-1] * size
    prv = [-1] * size
    owner = [-1] * size
    for pid, piece in enumerate(pieces):
        for i, v in enumerate(piece):
            nxt[v] = piece[(i + 1) % len(piece)]
            prv[v] = piece[i - 1]
            owner[v] = pid
    if min(owner) < 0:
        raise InternalError(f"{g.params}: cycle cover misses vertices")

    merged = [False] * len(pieces)
    merged[0] = True
    remaining = len(pieces) - 1
    queue = deque((v, nxt[v]) for v in pieces[0])

    def reverse_piece(pid: int) -> None:
        for v in pieces[pid]:
            nxt[v], prv[v] = prv[v], nxt[v]

    while queue and remaining:
        u, v = queue.popleft()
        if nxt[u] != v:
            continue
        found = None
        for u2 in g.adjacency[u]:
            pid = owner[u2]
            if merged[pid]:
                continue
            for v2 in g.adjacency[v]:
                if owner[v2] == pid and (nxt[u2] == v2 or nxt[v2] == u2):
                    found = (u2, v2, pid)
                    break
            if found:
                break
        if not found:
            continue
        u2, v2, pid = found
        if nxt[v2] != u2:
            reverse_piece(pid)
        # u -> u2 -> ... -> v2 -> v
        nxt[u], prv[u2] = u2, u
        nxt[v2], prv[v] = v, v2
        merged[pid] = True
        remaining -= 1
        for w in pieces[pid]:
            queue.append((w, nxt[w]))
        queue.append((u, u2))
        queue.append((v2, v))
    if remaining:
        raise InternalError(f"{g.params}: {remaining} cycle pieces could not be merged")

    order = [pieces[0][0]]
    while len(order) < size:
        order.append(nxt[order[-1]])
    return order


def hamiltonian_cycle(
    p: Params, g: HoradamGraph | None = None, cap: int = config.VERTEX_CAP
) -> Walk | NoCycle:
    size = vertex_count(p)
    if size % 2:
        return NoCycle("impossible", "bipartite graph of odd order")
    if not cycle_guaranteed(p):
        return NoCycle("not_guaranteed", "outside the parity classes with a constructed cycle")
    _check_cap(p, cap)
    g = g or build_graph(p, cap)
    pieces = [list(_to_indices(g, piece)) for piece in _cover(p.a, p.b, p.n)]
    walk = Walk(WalkKind.CYCLE, tuple(_merge_pieces(g, pieces)))
    if not validate_walk(g, walk):
        raise InternalError(f"{p}: constructed cycle failed validation")
    return walk

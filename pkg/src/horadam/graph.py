"""The Horadam cube as an immutable graph over lexicographically ordered words."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import config
from .errors import InternalError, ParameterError
from .words import Params, Word, enumerate_words


@dataclass(frozen=True)
class HoradamGraph:
    params: Params
    vertices: tuple[Word, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.vertices)})

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def index(self, w: Sequence[int]) -> int:
        try:
            return self._index[tuple(w)]
        except KeyError:
            raise ParameterError(f"{tuple(w)!r} is not a vertex of this graph") from None

    def __contains__(self, w: object) -> bool:
        return tuple(w) in self._index  # type: ignore[arg-type]

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (i, j) with i < j, in lexicographic order."""
        for i, nb in enumerate(self.adjacency):
            for j in nb:
                if j > i:
                    yield i, j


def adjacent(u: Sequence[int], w: Sequence[int]) -> bool:
    """True iff u and w differ in one position, by exactly one."""
    if len(u) != len(w):
        raise ParameterError(f"length mismatch: {len(u)} vs {len(w)}")
    diff = 0
    for x, y in zip(u, w):
        if x != y:
            diff += abs(x - y)
            if diff > 1:
                return False
    return diff == 1


def build_graph(p: Params, cap: int = config.VERTEX_CAP) -> HoradamGraph:
    """Materialize Pi^{a,b}_n.

    Neighbors come from raising a single letter by one and looking the
    candidate up among the vertices, so the cost is O(|V| n).
    """
    words = enumerate_words(p, cap)
    index = {w: i for i, w in enumerate(words)}
    nbrs: list[list[int]] = [[] for _ in words]
    for i, w in enumerate(words):
        buf = list(w)
        for pos, x in enumerate(w):
            buf[pos] = x + 1
            j = index.get(tuple(buf))
            if j is not None:
                nbrs[i].append(j)
                nbrs[j].append(i)
            buf[pos] = x
    adjacency = tuple(tuple(sorted(nb)) for nb in nbrs)
    return HoradamGraph(p, tuple(words), adjacency)


def degree_histogram(g: HoradamGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(nb) for nb in g.adjacency).items()))


def color_of(w: Sequence[int]) -> int:
    """Letter sum mod 2; an edge changes the sum by exactly one."""
    return sum(w) % 2


def two_coloring(g: HoradamGraph) -> list[int]:
    return [color_of(w) for w in g.vertices]


def bfs_distances(g: HoradamGraph, source: int) -> list[int]:
    if not 0 <= source < g.num_vertices:
        raise ParameterError(f"source {source} out of range")
    dist = [-1] * g.num_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                queue.append(u)
    if min(dist) < 0:
        raise InternalError(f"{g.params}: graph is disconnected, this is a construction bug")
    return dist

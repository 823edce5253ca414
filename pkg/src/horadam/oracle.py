"""Brute-force checks, written with different algorithms than the main path.

Edge counting uses a pairwise scan, subcube counting enumerates direction
sets, and median closure enumerates every triple over BFS distances.  These
are meant to be slow and obviously correct.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from . import config
from .errors import ParameterError, ResourceLimitError
from .graph import HoradamGraph, adjacent, bfs_distances


def _require(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise ResourceLimitError(f"{what}: size {size} over the cap of {cap}")


def brute_edge_count(g: HoradamGraph, cap: int = config.BRUTE_EDGE_CAP) -> int:
    _require(g.num_vertices, cap, "brute_edge_count")
    return sum(1 for u, w in combinations(g.vertices, 2) if adjacent(u, w))


def brute_subcube_count(
    g: HoradamGraph,
    k: int,
    cap: int = config.BRUTE_SUBCUBE_CAP,
    max_k: int = config.BRUTE_SUBCUBE_MAX_K,
) -> int:
    """Count induced Q_k as (base vertex, k positions) pairs.

    Raising the chosen letters of the base by 0 or 1 in every combination
    must land on vertices.  Any two of the 2^k words then differ by 0/1 per
    chosen position, so the induced subgraph is exactly Q_k, and the base is
    its unique lowest corner.
    """
    if k < 0:
        raise ParameterError("k must be non-negative")
    _require(g.num_vertices, cap, "brute_subcube_count")
    _require(k, max_k, "brute_subcube_count dimension")
    present = set(g.vertices)
    n = g.params.n
    count = 0
    for v in g.vertices:
        for positions in combinations(range(n), k):
            ok = True
            for bits in product((0, 1), repeat=k):
                w = list(v)
                for pos, bit in zip(positions, bits):
                    w[pos] += bit
                if tuple(w) not in present:
                    ok = False
                    break
            if ok:
                count += 1
    return count


def distance_matrix(g: HoradamGraph) -> np.ndarray:
    return np.array([bfs_distances(g, s) for s in range(g.num_vertices)], dtype=np.int32)


def _packed_intervals(dist: np.ndarray) -> np.ndarray:
    """intervals[x, y] = bitset of vertices m with d(x,m) + d(m,y) = d(x,y)."""
    size = dist.shape[0]
    member = dist[:, None, :] + dist.T[None, :, :] == dist[:, :, None]
    pad = (-size) % 64
    if pad:
        member = np.concatenate([member, np.zeros((size, size, pad), dtype=bool)], axis=2)
    packed = np.packbits(member, axis=2, bitorder="little")
    return packed.view(np.uint64)


def brute_median_closed(g: HoradamGraph, cap: int = config.MEDIAN_CAP) -> bool:
    """Every triple has exactly one median, and it is the majority-rule one.

    Triples are enumerated with repetition.  The majority rule is applied to
    the hypercube images and compared against the unique interval-based
    median found from BFS distances.
    """
    from .structure import sigma_embed

    size = g.num_vertices
    _require(size, cap, "brute_median_closed")
    dist = distance_matrix(g)
    intervals = _packed_intervals(dist)
    images = [sigma_embed(w, g.params) for w in g.vertices]
    if max((len(bits) for bits in images), default=0) > 62:
        raise ResourceLimitError("hypercube dimension too large for packed median check")
    codes = np.array([int("".join(map(str, bits)) or "0", 2) for bits in images], dtype=np.int64)
    order = np.argsort(codes)
    sorted_codes = codes[order]
    if np.any(sorted_codes[1:] == sorted_codes[:-1]):
        return False

    for x in range(size):
        # common[y, z] = I(x,y) & I(x,z) & I(y,z), restricted to x <= y <= z
        ixy = intervals[x, x:]
        common = ixy[:, None, :] & ixy[None, :, :] & intervals[x:, x:]
        counts = np.bitwise_count(common).sum(axis=2)
        upper = np.triu(np.ones(counts.shape, dtype=bool))
        if np.any(counts[upper] != 1):
            return False
        nz_word = np.argmax(common != 0, axis=2)
        word = np.take_along_axis(common, nz_word[:, :, None], axis=2)[:, :, 0]
        bit = np.log2(np.where(word == 0, 1, word).astype(np.float64)).astype(np.int64)
        median_idx = nz_word * 64 + bit

        cx, cy = codes[x], codes[x:]
        majority = (cx & cy)[:, None] | (cx & cy)[None, :] | (cy[:, None] & cy[None, :])
        pos = np.clip(np.searchsorted(sorted_codes, majority), 0, size - 1)
        found = sorted_codes[pos] == majority
        if not np.all(found[upper]):
            return False
        if np.any(order[pos][upper] != median_idx[upper]):
            return False
    return True


@dataclass(frozen=True)
class FibonacciCube:
    dimension: int
    vertices: tuple[tuple[int, ...], ...]
    edges: frozenset

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)


def fibonacci_strings(m: int) -> list[tuple[int, ...]]:
    """Binary strings of length m without two adjacent ones, in lexicographic order."""
    out: list[tuple[int, ...]] = []
    buf = [0] * m

    def rec(i: int) -> None:
        if i == m:
            out.append(tuple(buf))
            return
        buf[i] = 0
        rec(i + 1)
        if i == 0 or buf[i - 1] == 0:
            buf[i] = 1
            rec(i + 1)
            buf[i] = 0

    rec(0)
    return out


def fibonacci_cube(m: int, max_dim: int = config.FIBONACCI_CUBE_MAX_DIM) -> FibonacciCube:
    if m < 0:
        raise ParameterError("dimension must be non-negative")
    _require(m, max_dim, "fibonacci_cube dimension")
    verts = fibonacci_strings(m)
    present = set(verts)
    edges = set()
    for v in verts:
        for i in range(m):
            if v[i] == 0:
                w = v[:i] + (1,) + v[i + 1 :]
                if w in present:
                    edges.add((v, w))
    return FibonacciCube(m, tuple(verts), frozenset(edges))

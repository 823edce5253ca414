"""Structural decompositions and the hypercube embedding.

* canonical partition by leading primitive block, with its cross edges;
* the projection to Fibonacci strings, its grid classes, and the quotient;
* the block-wise embedding into a hypercube and medians by majority vote.

Each builder checks the structure it claims and raises TheoremViolation
when a check fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .errors import ParameterError, TheoremViolation
from .graph import HoradamGraph, build_graph
from .oracle import fibonacci_cube
from .sequences import fibonacci_number, horadam_numbers
from .words import Pair, Params, Single, Word, decompose_blocks

BinaryWord = tuple[int, ...]


# Canonical decomposition ----------------------------------------------------


@dataclass(frozen=True)
class CanonicalPartition:
    params: Params
    letter_copies: dict  # k -> vertex indices of words starting with letter k (not a 0l block)
    block_copies: dict  # l -> vertex indices of words starting with the block 0l
    cross_edges: dict  # ("letter", k, k+1) | ("block", l, l+1) | ("bridge", a-1, a) -> edges

    def group_sizes(self) -> dict:
        return {label: len(edges) for label, edges in self.cross_edges.items()}


def _copy_label(w: Word, a: int) -> tuple[str, int]:
    if len(w) >= 2 and w[0] == 0 and w[1] >= a:
        return ("block", w[1])
    return ("letter", w[0])


def _check_copy(g: HoradamGraph, members: list[int], prefix_len: int, lower: HoradamGraph) -> None:
    """The copy, with its prefix dropped, must induce exactly the lower cube."""
    suffixes = [g.vertices[i][prefix_len:] for i in members]
    if sorted(suffixes) != list(lower.vertices):
        raise TheoremViolation(f"{g.params}: copy does not cover Pi_{lower.params.n}")
    local = {i: lower.index(g.vertices[i][prefix_len:]) for i in members}
    edges = set()
    for i in members:
        for j in g.adjacency[i]:
            if j in local and i < j:
                edges.add(tuple(sorted((local[i], local[j]))))
    if edges != set(lower.edges()):
        raise TheoremViolation(f"{g.params}: copy is not isomorphic to Pi_{lower.params.n}")


def canonical_partition(g: HoradamGraph) -> CanonicalPartition:
    p = g.params
    a, b, n = p.a, p.b, p.n
    if n < 2:
        raise ParameterError("the canonical decomposition needs n >= 2")
    letters: dict[int, list[int]] = {k: [] for k in range(a)}
    blocks: dict[int, list[int]] = {l: [] for l in range(a, a + b)}
    where: dict[int, tuple[str, int]] = {}
    for i, w in enumerate(g.vertices):
        kind, key = _copy_label(w, a)
        (letters if kind == "letter" else blocks)[key].append(i)
        where[i] = (kind, key)

    lower1 = build_graph(p.with_n(n - 1))
    lower2 = build_graph(p.with_n(n - 2))
    for members in letters.values():
        _check_copy(g, members, 1, lower1)
    for members in blocks.values():
        _check_copy(g, members, 2, lower2)

    cross: dict[tuple, list[tuple[int, int]]] = {}
    for k in range(a - 1):
        cross[("letter", k, k + 1)] = []
    for l in range(a, a + b - 1):
        cross[("block", l, l + 1)] = []
    cross[("bridge", a - 1, a)] = []
    for i, j in g.edges():
        ci, cj = where[i], where[j]
        if ci == cj:
            continue
        (ki, xi), (kj, xj) = sorted([ci, cj], key=lambda c: (c[0] == "block", c[1]))
        if ki == kj == "letter" and xj == xi + 1:
            label = ("letter", xi, xj)
        elif ki == kj == "block" and xj == xi + 1:
            label = ("block", xi, xj)
        elif ki == "letter" and xi == 0 and kj == "block" and xj == a:
            label = ("bridge", a - 1, a)
            # the letter side must lie in the sub-copy 0(a-1)Pi_{n-2}
            low = i if where[i][0] == "letter" else j
            if g.vertices[low][1] != a - 1:
                raise TheoremViolation(f"{p}: bridge edge leaves 0(a-1)Pi_(n-2)")
        else:
            raise TheoremViolation(f"{p}: unexpected edge between copies {ci} and {cj}")
        cross[label].append((i, j))

    s = horadam_numbers(a, b, n)
    for label, edges in cross.items():
        expected = s[n - 1] if label[0] == "letter" else s[n - 2]
        if len(edges) != expected:
            raise TheoremViolation(f"{p}: {label} has {len(edges)} edges, expected {expected}")
    return CanonicalPartition(p, letters, blocks, cross)


# Projection onto Fibonacci strings -----------------------------------------------


def rho_project(w: Sequence[int], p: Params) -> tuple[int, ...]:
    """Letters below a map to 0, the others to 1."""
    return tuple(0 if x < p.a else 1 for x in w)


@dataclass(frozen=True)
class GridClass:
    label: tuple[int, ...]
    members: tuple[int, ...]
    shape: tuple[int, int]  # (number of P_a factors, number of P_b factors)


def _grid_edge_count(sides: Sequence[int]) -> int:
    total = prod(sides)
    return sum(total // m * (m - 1) for m in sides if m)


def grid_partition(g: HoradamGraph) -> list[GridClass]:
    p = g.params
    a, b, n = p.a, p.b, p.n
    if n < 1:
        raise ParameterError("grid decomposition needs n >= 1")
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, w in enumerate(g.vertices):
        groups.setdefault(rho_project(w, p), []).append(i)
    if len(groups) != fibonacci_number(n + 1):
        raise TheoremViolation(f"{p}: {len(groups)} grid classes, expected F_{n + 1}")

    classes = []
    for label in sorted(groups):
        members = groups[label]
        if label[0] != 0 or any(label[i] and label[i + 1] for i in range(n - 1)):
            raise TheoremViolation(f"{p}: projection {label} is not a Fibonacci string led by 0")
        ones = sum(label)
        free = [i for i in range(n) if not label[i] and not (i + 1 < n and label[i + 1])]
        paired = [i for i in range(n) if label[i]]
        sides = [a] * len(free) + [b] * len(paired)
        if len(free) != n - 2 * ones or len(members) != a ** (n - 2 * ones) * b**ones:
            raise TheoremViolation(f"{p}: class {label} has the wrong size")
        # coordinates: free letters in [0, a-1]; paired letters shifted to [0, b-1]
        coords = set()
        for i in members:
            w = g.vertices[i]
            if any(w[j - 1] != 0 for j in paired):
                raise TheoremViolation(f"{p}: class {label} holds a malformed block")
            coords.add(tuple(w[j] for j in free) + tuple(w[j] - a for j in paired))
        if len(coords) != len(members):
            raise TheoremViolation(f"{p}: class {label} coordinates are not distinct")
        inside = set(members)
        internal = 0
        for i in members:
            deg = 0
            for j in g.adjacency[i]:
                if j in inside:
                    deg += 1
                    if i < j:
                        internal += 1
            if deg > 2 * len(sides):
                raise TheoremViolation(f"{p}: class {label} has a vertex of degree {deg}")
        if internal != _grid_edge_count(sides):
            raise TheoremViolation(f"{p}: class {label} has {internal} internal edges")
        classes.append(GridClass(label, tuple(members), (n - 2 * ones, ones)))
    return classes


@dataclass(frozen=True)
class QuotientGraph:
    vertices: tuple[tuple[int, ...], ...]
    edges: frozenset


def quotient_graph(g: HoradamGraph) -> QuotientGraph:
    """Collapse every grid class to a point; verify it is the Fibonacci cube of dimension n-1."""
    p = g.params
    if p.n < 1:
        raise ParameterError("quotient needs n >= 1")
    labels = [rho_project(w, p) for w in g.vertices]
    verts = tuple(sorted(set(labels)))
    edges = set()
    for i, j in g.edges():
        if labels[i] != labels[j]:
            edges.add(tuple(sorted((labels[i], labels[j]))))
    quotient = QuotientGraph(verts, frozenset(edges))

    cube = fibonacci_cube(p.n - 1)
    dropped_vertices = sorted(v[1:] for v in verts)
    dropped_edges = {tuple(sorted((u[1:], w[1:]))) for u, w in edges}
    if dropped_vertices != sorted(cube.vertices):
        raise TheoremViolation(f"{p}: quotient vertices differ from the Fibonacci cube")
    if dropped_edges != {tuple(sorted(e)) for e in cube.edges}:
        raise TheoremViolation(f"{p}: quotient edges differ from the Fibonacci cube")
    return quotient


# Hypercube embedding and medians ---------------------------------------------


def sigma_block(block: Single | Pair, p: Params) -> BinaryWord:
    a, b = p.a, p.b
    if isinstance(block, Single):
        k = block.k
        return (0,) * (k + 1) + (1,) * (a - 1 - k) + (0,) * (b - 1)
    l = block.l - a
    return (1,) * a + (0,) * (b - 1) + (0,) * a + (1,) * l + (0,) * (b - 1 - l)


def sigma_embed(w: Sequence[int], p: Params) -> BinaryWord:
    """Image of a vertex in Q_{(a+b-1)n}: the concatenated block images."""
    out: list[int] = []
    for block in decompose_blocks(w, p):
        out.extend(sigma_block(block, p))
    return tuple(out)


def sigma_decode(bits: Sequence[int], p: Params) -> Word:
    """Inverse of sigma_embed; TheoremViolation when bits are not an image."""
    a, b = p.a, p.b
    width = a + b - 1
    if len(bits) != width * p.n:
        raise TheoremViolation(f"binary word of length {len(bits)} is not in Q_{width * p.n}")
    lookup: dict[tuple[int, ...], tuple[int, ...]] = {}
    for k in range(a):
        lookup[sigma_block(Single(k), p)] = (k,)
    for l in range(a, a + b):
        lookup[sigma_block(Pair(l), p)] = (0, l)
    out: list[int] = []
    i = 0
    bits = tuple(bits)
    while i < len(bits):
        chunk = bits[i : i + width]
        if chunk in lookup and chunk[0] == 0:
            out.extend(lookup[chunk])
            i += width
            continue
        chunk2 = bits[i : i + 2 * width]
        if chunk2 in lookup:
            out.extend(lookup[chunk2])
            i += 2 * width
            continue
        raise TheoremViolation(f"{p}: {''.join(map(str, bits))} has no preimage")
    return tuple(out)


def majority(x: Sequence[int], y: Sequence[int], z: Sequence[int]) -> BinaryWord:
    return tuple(1 if s + t + u >= 2 else 0 for s, t, u in zip(x, y, z))


def median_of_triple(u: Sequence[int], v: Sequence[int], w: Sequence[int], p: Params) -> Word:
    """Median computed in the hypercube by majority vote, then pulled back."""
    return sigma_decode(majority(sigma_embed(u, p), sigma_embed(v, p), sigma_embed(w, p)), p)


def hamming(x: Sequence[int], y: Sequence[int]) -> int:
    return sum(1 for s, t in zip(x, y) if s != t)

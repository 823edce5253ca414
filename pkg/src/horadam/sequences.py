"""Exact counting formulas for Horadam cubes.

Vertices s_n, edges e_n, the degree distribution Delta_{n,k}, and cube
coefficients c_k, each with the independent closed forms used to
cross-check the recurrences.  Everything is computed with Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import comb

from .series import Series, expand_rational_series  # noqa: F401  (re-exported)
from .words import Params


class TableKind(Enum):
    VERTICES = "vertices"
    EDGES = "edges"
    DEGREES = "degrees"
    CUBE_COEFFICIENTS = "cube_coefficients"


@dataclass(frozen=True)
class CountTable:
    """Exact values keyed by n (sequences) or by (n, k) (two-index tables)."""

    params: Params
    kind: TableKind
    values: dict

    def row(self, n: int | None = None) -> dict[int, int]:
        """The k -> value map of row n (defaults to params.n)."""
        n = self.params.n if n is None else n
        return {k: v for (m, k), v in sorted(self.values.items()) if m == n}

    def as_list(self, n: int | None = None) -> list[int]:
        """Row n as a dense list indexed by k."""
        row = self.row(n)
        if not row:
            return []
        return [row.get(k, 0) for k in range(max(row) + 1)]


@dataclass(frozen=True)
class CubePolynomial:
    params: Params
    coefficients: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return sum(c * x**k for k, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                terms.append(f"{coef}x" + (f"^{k}" if k > 1 else ""))
        return "+".join(terms) or "0"


# Vertices -----------------------------------------------------------------


def horadam_numbers(a: int, b: int, n_max: int) -> list[int]:
    """[s_0, ..., s_{n_max}]."""
    s = [1, a][: n_max + 1]
    while len(s) <= n_max:
        s.append(a * s[-1] + b * s[-2])
    return s


def vertex_count(p: Params) -> int:
    return horadam_numbers(p.a, p.b, p.n)[p.n]


def vertex_count_closed(p: Params) -> int:
    a, b, n = p.a, p.b, p.n
    return sum(comb(n - k, k) * a ** (n - 2 * k) * b**k for k in range(n // 2 + 1))


def _s(a: int, b: int, n: int) -> int:
    """s_n with s_n = 0 for n < 0."""
    return 0 if n < 0 else horadam_numbers(a, b, n)[n]


def fibonacci_number(m: int) -> int:
    if m < 0:
        raise ValueError("m must be non-negative")
    x, y = 0, 1
    for _ in range(m):
        x, y = y, x + y
    return x


# Edges --------------------------------------------------------------------


def edge_counts(a: int, b: int, n_max: int) -> list[int]:
    """[e_0, ..., e_{n_max}] from e_n = a e_{n-1} + b e_{n-2} + s_n - s_{n-1}."""
    s = horadam_numbers(a, b, n_max)
    e = [0]
    for n in range(1, n_max + 1):
        e_prev2 = e[n - 2] if n >= 2 else 0
        e.append(a * e[n - 1] + b * e_prev2 + s[n] - s[n - 1])
    return e


def edge_count(p: Params) -> int:
    return edge_counts(p.a, p.b, p.n)[p.n]


def edge_count_convolution(p: Params) -> int:
    s = horadam_numbers(p.a, p.b, p.n)
    n = p.n
    return sum(s[k] * (s[n - k] - s[n - 1 - k]) for k in range(n))


def edge_count_binomial(p: Params) -> int:
    a, b, n = p.a, p.b, p.n
    total = 0
    for k in range(n + 1):
        half_up = (n + k + 1) // 2
        half_down = (n + k) // 2
        term = half_up * comb(half_down, k) * a**k * b ** ((n - k) // 2)
        total += -term if (n - k) % 2 else term
    return total


def edge_count_a1_identity(b: int, n: int) -> int:
    """e^{1,b}_n = b * sum_{k<n} s_{k-1} s_{n-k-1}."""
    return b * sum(_s(1, b, k - 1) * _s(1, b, n - k - 1) for k in range(n))


# Degree distribution ------------------------------------------------------

DEGREE_BASE_ROWS = 3


@lru_cache(maxsize=None)
def _brute_degree_row(a: int, b: int, n: int) -> tuple[tuple[int, int], ...]:
    from .graph import build_graph, degree_histogram

    return tuple(degree_histogram(build_graph(Params(a, b, n))).items())


def _shift_add(target: dict[int, int], row: dict[int, int], shift: int, coef: int) -> None:
    if not coef:
        return
    for k, v in row.items():
        target[k + shift] = target.get(k + shift, 0) + coef * v


@lru_cache(maxsize=None)
def _degree_rows(a: int, b: int, n_max: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    rows: list[dict[int, int]] = []
    for n in range(n_max + 1):
        if n <= DEGREE_BASE_ROWS:
            rows.append(dict(_brute_degree_row(a, b, n)))
            continue
        new: dict[int, int] = {}
        r1, r2, r3 = rows[n - 1], rows[n - 2], rows[n - 3]
        if a >= 2:
            _shift_add(new, r1, 1, 2)
            _shift_add(new, r1, 2, a - 2)
            _shift_add(new, r2, 1, 1)
            _shift_add(new, r2, 2, b - 2)
            _shift_add(new, r2, 3, 1)
        else:
            _shift_add(new, r1, 1, 1)
            _shift_add(new, r2, 1, 1)
            _shift_add(new, r2, 2, b - 1)
            _shift_add(new, r3, 1, 1)
            _shift_add(new, r3, 2, b - 2)
            _shift_add(new, r3, 3, -(b - 1))
        rows.append({k: v for k, v in sorted(new.items()) if v})
    return tuple(tuple(sorted(r.items())) for r in rows)


def degree_rows(a: int, b: int, n_max: int) -> list[dict[int, int]]:
    """Rows Delta_{n,.} for n = 0..n_max, zero entries dropped.

    Rows n <= 3 come from degree histograms of the built graphs; later rows
    from the parity-split recurrences (one for a >= 2, one for a = 1).
    """
    return [dict(r) for r in _degree_rows(a, b, n_max)]


def degree_table(p: Params) -> CountTable:
    row = degree_rows(p.a, p.b, p.n)[p.n]
    return CountTable(p, TableKind.DEGREES, {(p.n, k): v for k, v in row.items()})


# Cube coefficients ----------------------------------------------------------


def _poly_add(*polys: list[int]) -> list[int]:
    out = [0] * max(len(q) for q in polys)
    for q in polys:
        for i, c in enumerate(q):
            out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _cube_coefficient_rows(a: int, b: int, n_max: int) -> list[list[int]]:
    """c_k(Pi_n) from the coefficient recurrence; base rows [1] and [a, a-1]."""
    rows = [[1], [a, a - 1] if a > 1 else [a]]
    for n in range(2, n_max + 1):
        r1, r2 = rows[n - 1], rows[n - 2]
        kmax = max(len(r1), len(r2) + 1)
        row = []
        for k in range(kmax + 1):
            c = 0
            if k < len(r1):
                c += a * r1[k]
            if k < len(r2):
                c += b * r2[k]
            if 1 <= k <= len(r1):
                c += (a - 1) * r1[k - 1]
            if 1 <= k <= len(r2):
                c += b * r2[k - 1]
            row.append(c)
        while len(row) > 1 and row[-1] == 0:
            row.pop()
        rows.append(row)
    return rows[: n_max + 1]


def cube_coefficients(p: Params) -> CountTable:
    row = _cube_coefficient_rows(p.a, p.b, p.n)[p.n]
    return CountTable(p, TableKind.CUBE_COEFFICIENTS, {(p.n, k): c for k, c in enumerate(row)})


def cube_number(p: Params) -> int:
    a, b = p.a, p.b
    if p.n == 0:
        return 1
    prev, cur = 1, 2 * a - 1
    for _ in range(p.n - 1):
        prev, cur = cur, (2 * a - 1) * cur + 2 * b * prev
    return cur


def cube_polynomial(p: Params) -> CubePolynomial:
    """C_n = (a + (a-1) x) C_{n-1} + (b + b x) C_{n-2}."""
    a, b = p.a, p.b
    polys = [[1], [a, a - 1] if a > 1 else [a]]
    for _ in range(2, p.n + 1):
        c1, c2 = polys[-1], polys[-2]
        t1 = _poly_add([a * c for c in c1] + [0], [0] + [(a - 1) * c for c in c1])
        t2 = _poly_add([b * c for c in c2] + [0], [0] + [b * c for c in c2])
        polys.append(_poly_add(t1, t2))
    return CubePolynomial(p, tuple(polys[p.n]))

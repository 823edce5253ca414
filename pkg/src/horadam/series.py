"""Truncated power series in one or two variables with integer coefficients.

Only what the generating functions need: products and quotients, truncated
at a fixed order.  A bivariate series is stored as ``coeffs[i][j]`` for the
monomial ``x**i * y**j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import config
from .errors import ParameterError


@dataclass(frozen=True)
class Series:
    coeffs: tuple[tuple[int, ...], ...]
    variables: int = 1

    def __post_init__(self) -> None:
        if self.variables not in (1, 2):
            raise ParameterError("a series has 1 or 2 variables")
        if not self.coeffs:
            raise ParameterError("empty coefficient array")
        if self.variables == 1 and any(len(row) != 1 for row in self.coeffs):
            raise ParameterError("univariate series must have one column")
        width = len(self.coeffs[0])
        if any(len(row) != width for row in self.coeffs):
            raise ParameterError("ragged coefficient array")

    @classmethod
    def univariate(cls, coeffs: Sequence[int]) -> "Series":
        return cls(tuple((int(c),) for c in coeffs), 1)

    @classmethod
    def bivariate(cls, coeffs: Sequence[Sequence[int]]) -> "Series":
        width = max((len(row) for row in coeffs), default=1) or 1
        rows = tuple(tuple(int(c) for c in row) + (0,) * (width - len(row)) for row in coeffs)
        return cls(rows, 2)

    @property
    def order_x(self) -> int:
        return len(self.coeffs)

    @property
    def order_y(self) -> int:
        return len(self.coeffs[0])

    def coefficient(self, i: int, j: int = 0) -> int:
        if 0 <= i < self.order_x and 0 <= j < self.order_y:
            return self.coeffs[i][j]
        return 0

    def as_list(self) -> list[int]:
        """Coefficients of a univariate series."""
        if self.variables != 1:
            raise ParameterError("as_list() is for univariate series")
        return [row[0] for row in self.coeffs]

    def row(self, i: int) -> list[int]:
        """Coefficient of x**i as a list of y-coefficients."""
        return list(self.coeffs[i]) if i < self.order_x else []


def _dense(s: Series, ox: int, oy: int) -> list[list[int]]:
    return [[s.coefficient(i, j) for j in range(oy)] for i in range(ox)]


def multiply(f: Series, g: Series, order: int, order_y: int | None = None) -> Series:
    variables = max(f.variables, g.variables)
    oy = 1 if variables == 1 else (order_y or config.SERIES_ORDER)
    out = [[0] * oy for _ in range(order)]
    for i1 in range(min(f.order_x, order)):
        for j1 in range(min(f.order_y, oy)):
            c1 = f.coeffs[i1][j1]
            if not c1:
                continue
            for i2 in range(min(g.order_x, order - i1)):
                row = g.coeffs[i2]
                target = out[i1 + i2]
                for j2 in range(min(g.order_y, oy - j1)):
                    if row[j2]:
                        target[j1 + j2] += c1 * row[j2]
    return Series(tuple(tuple(r) for r in out), variables)


def expand_rational_series(
    numerator: Series,
    denominator: Series,
    order: int,
    order_y: int | None = None,
) -> Series:
    """Expand numerator/denominator up to x**(order-1) (and y**(order_y-1)).

    The denominator needs a nonzero constant term, and every quotient
    coefficient must come out integral.
    """
    if order < 1 or order > config.SERIES_ORDER_CAP:
        raise ParameterError(f"order must lie in [1, {config.SERIES_ORDER_CAP}], got {order}")
    variables = max(numerator.variables, denominator.variables)
    if variables == 1:
        oy = 1
    else:
        oy = order_y if order_y is not None else config.SERIES_ORDER
        if oy < 1 or oy > config.SERIES_ORDER_CAP:
            raise ParameterError(f"order_y must lie in [1, {config.SERIES_ORDER_CAP}]")
    c0 = denominator.coefficient(0, 0)
    if c0 == 0:
        raise ParameterError("denominator has zero constant term")

    num = _dense(numerator, order, oy)
    den = [
        (p, q, denominator.coeffs[p][q])
        for p in range(min(denominator.order_x, order))
        for q in range(min(denominator.order_y, oy))
        if (p, q) != (0, 0) and denominator.coeffs[p][q]
    ]
    out = [[0] * oy for _ in range(order)]
    for i in range(order):
        for j in range(oy):
            acc = num[i][j]
            for p, q, d in den:
                if p <= i and q <= j:
                    acc -= d * out[i - p][j - q]
            quot, rem = divmod(acc, c0)
            if rem:
                raise ParameterError(f"coefficient of x^{i} y^{j} is not an integer")
            out[i][j] = quot
    return Series(tuple(tuple(r) for r in out), variables)


# Generating functions of the Horadam cube counts ---------------------------


def _uni(coeffs: Sequence[int]) -> Series:
    return Series.univariate(coeffs)


def vertex_gf(a: int, b: int) -> tuple[Series, Series]:
    """S(x) = 1 / (1 - a x - b x^2)."""
    return _uni([1]), _uni([1, -a, -b])


def edge_gf(a: int, b: int) -> tuple[Series, Series]:
    """E(x) = ((a-1) x + b x^2) / (1 - a x - b x^2)^2."""
    base = _uni([1, -a, -b])
    return _uni([0, a - 1, b]), multiply(base, base, 5)


def degree_gf(a: int, b: int) -> tuple[Series, Series]:
    """Delta(x, y), with separate forms for a >= 2 and a = 1."""
    if a >= 2:
        num = Series.bivariate([[1]])
        den = Series.bivariate(
            [
                [1],
                [0, -2, -(a - 2)],
                [0, -1, -(b - 2), -1],
            ]
        )
    else:
        num = Series.bivariate([[1], [1, -1]])
        den = Series.bivariate(
            [
                [1],
                [0, -1],
                [0, -1, -(b - 1)],
                [0, -1, -(b - 2), b - 1],
            ]
        )
    return num, den


def cube_gf(a: int, b: int) -> tuple[Series, Series]:
    """A(x, y) = 1 / (1 - a x - b x^2 - (a-1) x y - b x^2 y)."""
    num = Series.bivariate([[1]])
    den = Series.bivariate([[1], [-a, -(a - 1)], [-b, -b]])
    return num, den


GENERATING_FUNCTIONS = {
    "S": vertex_gf,
    "E": edge_gf,
    "Delta": degree_gf,
    "A": cube_gf,
}


def expand_named(which: str, a: int, b: int, order: int, order_y: int | None = None) -> Series:
    try:
        builder = GENERATING_FUNCTIONS[which]
    except KeyError:
        raise ParameterError(f"unknown generating function {which!r}") from None
    num, den = builder(a, b)
    return expand_rational_series(num, den, order, order_y)

"""Words of the monoid S^{a,b}: validation, primitive blocks, enumeration.

A word is a tuple of small integers over the alphabet ``0 .. a+b-1`` in which
every letter ``>= a`` sits immediately after a ``0``.  Such a word splits
uniquely into primitive blocks: single letters ``0 .. a-1`` and two-letter
blocks ``0l`` with ``a <= l <= a+b-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from . import config
from .errors import ParameterError, ResourceLimitError

Word = tuple[int, ...]


@dataclass(frozen=True)
class Params:
    """The triple (a, b, n) that defines the Horadam cube Pi^{a,b}_n."""

    a: int
    b: int
    n: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParameterError(f"{name} must be an integer, got {value!r}")
        if self.a < 1 or self.b < 1:
            raise ParameterError(f"a and b must be >= 1, got a={self.a}, b={self.b}")
        if self.n < 0:
            raise ParameterError(f"n must be >= 0, got {self.n}")

    @property
    def top(self) -> int:
        """Largest letter, a+b-1."""
        return self.a + self.b - 1

    @property
    def alphabet_size(self) -> int:
        return self.a + self.b

    def with_n(self, n: int) -> "Params":
        return Params(self.a, self.b, n)


@dataclass(frozen=True)
class Single:
    """Primitive block made of one letter k < a."""

    k: int

    def letters(self) -> Word:
        return (self.k,)


@dataclass(frozen=True)
class Pair:
    """Primitive block ``0l`` with l >= a."""

    l: int

    def letters(self) -> Word:
        return (0, self.l)


PrimitiveBlock = Union[Single, Pair]


def is_valid_word(letters: Sequence[int], p: Params) -> bool:
    if len(letters) != p.n:
        return False
    prev = None
    for x in letters:
        if isinstance(x, bool) or not isinstance(x, int) or x < 0 or x > p.top:
            return False
        if x >= p.a and prev != 0:
            return False
        prev = x
    return True


def decompose_blocks(w: Sequence[int], p: Params) -> list[PrimitiveBlock]:
    if not is_valid_word(w, p):
        raise ParameterError(f"not a valid word for {p}: {tuple(w)!r}")
    blocks: list[PrimitiveBlock] = []
    i = 0
    while i < len(w):
        if w[i] == 0 and i + 1 < len(w) and w[i + 1] >= p.a:
            blocks.append(Pair(w[i + 1]))
            i += 2
        else:
            blocks.append(Single(w[i]))
            i += 1
    return blocks


def concat_blocks(blocks: Sequence[PrimitiveBlock]) -> Word:
    out: list[int] = []
    for blk in blocks:
        out.extend(blk.letters())
    return tuple(out)


def _count(a: int, b: int, n: int) -> int:
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, a * cur + b * prev
    return cur


def iter_words(p: Params) -> Iterator[Word]:
    """Yield all valid words of length n in lexicographic order."""
    n, a, top = p.n, p.a, p.top
    buf = [0] * n

    def rec(i: int) -> Iterator[Word]:
        if i == n:
            yield tuple(buf)
            return
        hi = top if (i > 0 and buf[i - 1] == 0) else a - 1
        for x in range(hi + 1):
            buf[i] = x
            yield from rec(i + 1)

    yield from rec(0)


def enumerate_words(p: Params, cap: int = config.VERTEX_CAP) -> list[Word]:
    size = _count(p.a, p.b, p.n)
    if size > cap:
        raise ResourceLimitError(f"{p} has {size} vertices, over the cap of {cap}")
    return list(iter_words(p))


# Textual form -------------------------------------------------------------


def uses_compact_form(p: Params) -> bool:
    """Single-digit letters are only unambiguous when a+b <= 10."""
    return p.alphabet_size <= 10


def render_word(w: Sequence[int], p: Params) -> str:
    if uses_compact_form(p):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def parse_word(text: str, p: Params) -> Word:
    text = text.strip()
    try:
        if uses_compact_form(p):
            w = tuple(int(ch) for ch in text)
        else:
            w = tuple(int(tok) for tok in text.split(",")) if text else ()
    except ValueError as exc:
        raise ParameterError(f"cannot parse word {text!r}") from exc
    if not is_valid_word(w, p):
        raise ParameterError(f"{text!r} is not a vertex of Pi^{{{p.a},{p.b}}}_{p.n}")
    return w

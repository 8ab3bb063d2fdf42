"""Parser for monomial and ideal literals.

Grammar (whitespace is ignored)::

    ideal    := "(" monomial ("," monomial)* ")" | "(0)"
    monomial := "1" | factor ("*" factor)*
    factor   := "x" INT ("^" INT)?

INT is a positive decimal integer. Variables are 1-based in text.
"""
from __future__ import annotations

from typing import Optional

from .errors import DimensionError, ImproperIdealError, ParseError
from .ideal import MonomialIdeal
from .monomial import Monomial


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            self.fail(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self, what: str) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail(f"expected {what}")
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def fail(self, message: str, pos: Optional[int] = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)


def _factors(cur: _Cursor) -> Optional[dict]:
    """Parse one monomial; ``None`` stands for the literal 1."""
    if cur.peek() == "1":
        start = cur.pos
        n = cur.integer("monomial")
        if n != 1:
            cur.fail("a bare integer other than 1 is not a monomial", start)
        return None
    exps: dict = {}
    while True:
        if cur.peek() != "x":
            cur.fail("expected a variable like x1")
        cur.pos += 1
        start = cur.pos
        if not cur.text[cur.pos:cur.pos + 1].isdigit():
            cur.fail("expected a variable index after 'x'")
        idx = cur.integer("variable index")
        if idx == 0:
            cur.fail("variable indices start at 1", start)
        e = 1
        if cur.peek() == "^":
            cur.pos += 1
            start = cur.pos
            e = cur.integer("exponent")
            if e == 0:
                cur.fail("exponent 0 is not allowed; omit the factor instead", start)
        exps[idx] = exps.get(idx, 0) + e
        if cur.peek() != "*":
            return exps
        cur.pos += 1


def _to_vector(exps: Optional[dict], dim: int) -> tuple:
    v = [0] * dim
    for i, e in (exps or {}).items():
        v[i - 1] = e
    return tuple(v)


def _resolve_dim(seen: int, dim: Optional[int]) -> int:
    if dim is None:
        return max(seen, 1)
    if dim < 1:
        raise DimensionError("dimension must be positive")
    if dim < seen:
        raise DimensionError(f"dimension {dim} is smaller than the largest variable index {seen}")
    return dim


def parse_monomial(text: str, dim: Optional[int] = None) -> Monomial:
    cur = _Cursor(text)
    exps = _factors(cur)
    if not cur.at_end():
        cur.fail("unexpected trailing input")
    d = _resolve_dim(max(exps or {0: 0}), dim)
    return Monomial(_to_vector(exps, d))


def parse_ideal(text: str, dim: Optional[int] = None) -> MonomialIdeal:
    cur = _Cursor(text)
    cur.expect("(")
    save = cur.pos
    if cur.peek() == "0":
        cur.pos += 1
        if cur.peek() == ")":
            cur.pos += 1
            if not cur.at_end():
                cur.fail("unexpected trailing input")
            return MonomialIdeal.zero(_resolve_dim(0, dim))
        cur.fail("expected ')' after 0", save)
    monos = []
    while True:
        start = cur.pos
        exps = _factors(cur)
        if exps is None:
            raise ImproperIdealError(
                f"ideal must be proper: generator 1 at position {start}")
        monos.append(exps)
        if cur.peek() == ",":
            cur.pos += 1
            continue
        cur.expect(")")
        break
    if not cur.at_end():
        cur.fail("unexpected trailing input")
    seen = max(max(m) for m in monos)
    d = _resolve_dim(seen, dim)
    return MonomialIdeal(d, [_to_vector(m, d) for m in monos])

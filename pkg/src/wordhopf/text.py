"""Text form of basis elements and linear combinations.

Grammar (shared by reports and the command line)::

    expr    := term (('+' | '-') term)*
    term    := [INT '*'] factor ('(x)' factor)*
    factor  := '1' | word | 'Z' word | '{' word '/' word '}'
    word    := '[' [INT (',' INT)*] ']'

``1`` stands for the unit of whichever algebra the expression lives in.
"""

from __future__ import annotations

import json
import re
from collections.abc import Callable
from typing import Any

from .lincomb import LinComb, Tensor


class ParseError(ValueError):
    """Malformed expression text."""


def format_word(w) -> str:
    return "[" + ",".join(str(a) for a in w) + "]"


def format_tensor(t, fmt: Callable[[Any], str]) -> str:
    if isinstance(t, Tensor):
        return f"{format_tensor(t.left, fmt)} (x) {format_tensor(t.right, fmt)}"
    return fmt(t)


def format_lincomb(x: LinComb, fmt: Callable[[Any], str] = format_word) -> str:
    """Render ``x`` with terms sorted by their rendered basis element."""
    if not x:
        return "0"
    rendered = sorted((format_tensor(b, fmt), c) for b, c in x.items())
    parts = []
    for i, (s, c) in enumerate(rendered):
        mag = abs(c)
        body = s if mag == 1 else f"{mag}*{s}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def lincomb_to_json(x: LinComb, fmt: Callable[[Any], str] = format_word) -> str:
    rendered = sorted((format_tensor(b, fmt), c) for b, c in x.items())
    return json.dumps({"terms": [{"coeff": str(c), "basis": s} for s, c in rendered]})


_TOKEN = re.compile(r"\s*(?:(\(x\))|(\d+)|([\[\]{}/,+\-*Z]))")


def tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'}, got {tok!r}")
        self.i += 1
        return tok

    def word(self):
        self.take("[")
        letters = []
        if self.peek() != "]":
            while True:
                tok = self.take()
                if not tok.isdigit():
                    raise ParseError(f"expected letter, got {tok!r}")
                letters.append(int(tok))
                if self.peek() == ",":
                    self.take(",")
                    continue
                break
        self.take("]")
        if any(a < 1 for a in letters):
            raise ParseError("letters must be positive integers")
        return tuple(letters)

    def factor(self):
        tok = self.peek()
        if tok == "1":
            self.take()
            return ("unit", None)
        if tok == "[":
            return ("word", self.word())
        if tok == "Z":
            self.take()
            return ("nsymm", self.word())
        if tok == "{":
            self.take()
            top = self.word()
            self.take("/")
            bottom = self.word()
            self.take("}")
            return ("subst", (top, bottom))
        raise ParseError(f"expected a basis literal, got {tok!r}")

    def term(self, sign):
        coeff = 1
        tok = self.peek()
        nxt = self.toks[self.i + 1] if self.i + 1 < len(self.toks) else None
        if tok is not None and tok.isdigit() and nxt == "*":
            coeff = int(self.take())
            self.take("*")
        factors = [self.factor()]
        while self.peek() == "(x)":
            self.take()
            factors.append(self.factor())
        return sign * coeff, factors

    def expr(self):
        terms = []
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        elif self.peek() == "+":
            self.take()
        terms.append(self.term(sign))
        while self.peek() in ("+", "-"):
            sign = 1 if self.take() == "+" else -1
            terms.append(self.term(sign))
        if self.peek() is not None:
            raise ParseError(f"trailing input at {self.peek()!r}")
        return terms


def parse_raw(text: str) -> list[tuple[int, list[tuple[str, Any]]]]:
    """Parse into ``[(coeff, [(kind, payload), ...]), ...]``; kinds are checked by the caller."""
    if text.strip() == "0":
        return []
    return _Parser(text).expr()


def parse_word(text: str) -> tuple[int, ...]:
    p = _Parser(text)
    w = p.word()
    if p.peek() is not None:
        raise ParseError(f"trailing input at {p.peek()!r}")
    return w

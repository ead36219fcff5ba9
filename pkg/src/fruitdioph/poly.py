"""Sparse integer polynomials in named variables, a parser, and the size h(P).

Grammar (whitespace ignored, no implicit multiplication)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | NAME | "(" expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

__all__ = [
    "ParseError",
    "Polynomial",
    "evaluate",
    "parse_polynomial",
    "size_h",
]

Monomial = tuple[tuple[str, int], ...]  # sorted (name, exponent) pairs, exponents > 0


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


@dataclass(frozen=True)
class Polynomial:
    """Immutable sparse polynomial; zero coefficients are never stored."""

    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {m: c for m, c in self.terms.items() if c}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def const(cls, c: int) -> Polynomial:
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> Polynomial:
        return cls({((name, 1),): 1})

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(sorted({name for m in self.terms for name, _ in m}))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Polynomial) -> Polynomial:
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative exponent")
        out, base = Polynomial.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def evaluate(self, point: Mapping[str, int]) -> int:
        missing = [v for v in self.variables if v not in point]
        if missing:
            raise KeyError(f"no value for variable(s) {', '.join(missing)}")
        total = 0
        for m, c in self.terms.items():
            for name, e in m:
                c *= point[name] ** e
            total += c
        return total

    def _sort_key(self, m: Monomial):
        # graded lex: higher total degree first, then lex on the exponent vector
        exps = dict(m)
        vec = tuple(exps.get(v, 0) for v in self.variables)
        return (-sum(vec), tuple(-e for e in vec))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self._sort_key):
            c = self.terms[m]
            factors = [name if e == 1 else f"{name}^{e}" for name, e in m]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r})"


_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        start = m.start()
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) in "+-*^()":
            tokens.append(("op", m.group(3), start))
        else:
            raise ParseError(f"unexpected character {m.group(3)!r}", start)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Polynomial:
        p = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer literal", pos)
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "int":
            return Polynomial.const(int(val))
        if kind == "name":
            return Polynomial.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``text`` into expanded canonical form."""
    return _Parser(text).parse()


def evaluate(poly: Polynomial, point: Mapping[str, int]) -> int:
    return poly.evaluate(point)


def size_h(poly: Polynomial) -> int:
    """Sum of ``|a| * 2**deg`` over the terms, i.e. |P| evaluated at all 2s.

    The zero polynomial has no size and raises ``ValueError``.
    """
    if poly.is_zero():
        raise ValueError("size is undefined for the zero polynomial")
    return sum(abs(c) * 2 ** sum(e for _, e in m) for m, c in poly.terms.items())

"""Polynomial expression frontend and the JSON input document.

Grammar (whitespace ignored, no implicit multiplication)::

    expr     := ['-'] term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | var | '(' expr ')'
    var      := 'u' index            (1 <= index <= k)
    rational := int ('/' posint)?
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import (
    DivisionByZeroLiteral,
    ExpressionSyntaxError,
    IndexOutOfRange,
    ParseError,
    UnknownVariable,
)
from .exactalg import Poly
from .jets import Parametrization

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((ch, ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, k: int):
        self.k = k
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def take(self, kind):
        if self.tok[0] != kind:
            found = self.tok[1] or "end of input"
            raise ExpressionSyntaxError(f"expected {kind!r}, found {found!r}", self.tok[2])
        t = self.tok
        self.i += 1
        return t

    def parse(self) -> Poly:
        p = self.expr()
        if self.tok[0] != "end":
            raise ExpressionSyntaxError(f"unexpected {self.tok[1]!r}", self.tok[2])
        return p

    def expr(self) -> Poly:
        negate = False
        if self.tok[0] == "-":
            self.i += 1
            negate = True
        p = self.term()
        if negate:
            p = -p
        while self.tok[0] in "+-":
            op = self.take(self.tok[0])[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.tok[0] == "*":
            self.i += 1
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        p = self.base()
        if self.tok[0] == "^":
            self.i += 1
            p = p ** int(self.take("int")[1])
        return p

    def base(self) -> Poly:
        kind, text, pos = self.tok
        if kind == "int":
            self.i += 1
            value = Fraction(int(text))
            if self.tok[0] == "/":
                self.i += 1
                _, den, dpos = self.take("int")
                if int(den) == 0:
                    raise DivisionByZeroLiteral("zero denominator in rational literal", dpos)
                value /= int(den)
            return Poly.const(self.k, value)
        if kind == "name":
            self.i += 1
            m = re.fullmatch(r"u(\d+)", text)
            if m is None:
                raise UnknownVariable(f"unknown variable {text!r}", pos)
            idx = int(m.group(1))
            if not 1 <= idx <= self.k:
                raise IndexOutOfRange(f"variable {text!r} outside u1..u{self.k}", pos)
            return Poly.var(self.k, idx - 1)
        if kind == "(":
            self.i += 1
            p = self.expr()
            self.take(")")
            return p
        found = text or "end of input"
        raise ExpressionSyntaxError(f"expected a number, variable or '(', found {found!r}", pos)


def parse_expression(text: str, k: int) -> Poly:
    """Parse one coordinate expression into an exact polynomial in ``u1..uk``."""
    if k < 1:
        raise ValueError("k must be positive")
    return _Parser(text, k).parse()


def _format_coeff(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly) -> str:
    """Inverse of :func:`parse_expression` (same terms after re-parsing)."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, key=lambda e: (-sum(e), tuple(-x for x in e))):
        c = Fraction(p.terms[e])
        factors = [f"u{i + 1}" if x == 1 else f"u{i + 1}^{x}" for i, x in enumerate(e) if x]
        mag = abs(c)
        if factors and mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


# --------------------------------------------------------------------------
# input documents


def parse_parametrization(text: str) -> Parametrization:
    """Read an input document: a JSON object with ``name``, ``k``, ``N``, ``coordinates``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ExpressionSyntaxError(f"input is not valid JSON: {exc.msg}", exc.pos) from exc
    return parametrization_from_dict(doc)


def parametrization_from_dict(doc: dict) -> Parametrization:
    if not isinstance(doc, dict):
        raise ExpressionSyntaxError("input document must be a JSON object")
    missing = [key for key in ("k", "N", "coordinates") if key not in doc]
    if missing:
        raise ExpressionSyntaxError(f"input document lacks {', '.join(missing)}")
    k, N, coords = doc["k"], doc["N"], doc["coordinates"]
    if not isinstance(k, int) or not isinstance(N, int) or k < 1 or N < 1:
        raise ExpressionSyntaxError("k and N must be positive integers")
    if not isinstance(coords, list) or len(coords) != N:
        raise ExpressionSyntaxError(f"coordinates must be a list of N={N} strings")
    polys = []
    for n, c in enumerate(coords, 1):
        if not isinstance(c, str):
            raise ExpressionSyntaxError(f"coordinate {n} is not an expression string")
        try:
            polys.append(parse_expression(c, k))
        except ParseError as exc:
            exc.coordinate = n
            exc.args = (f"coordinate {n}: {exc.args[0]}",)
            raise
    try:
        return Parametrization.from_polys(str(doc.get("name", "unnamed")), k, polys)
    except ValueError as exc:
        raise ExpressionSyntaxError(str(exc)) from exc


def parametrization_to_dict(p: Parametrization) -> dict:
    if not p.is_polynomial():
        raise ValueError("only polynomial parametrizations have a document form")
    return {
        "name": p.name,
        "k": p.k,
        "N": p.N,
        "coordinates": [format_poly(c.num) for c in p.coords],
    }


def dump_parametrization(p: Parametrization) -> str:
    return json.dumps(parametrization_to_dict(p), indent=2) + "\n"

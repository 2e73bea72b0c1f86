"""Text form of polynomial systems.

Grammar (UTF-8, `#` starts a comment running to end of line):

    file     := [varsline] polyline+
    varsline := "vars:" ident ("," ident)*
    polyline := polynomial NEWLINE
    polynomial := term (("+"|"-") term)*
    term     := factor ("*" factor)*
    factor   := rational | ident ["^" natural] | "(" polynomial ")" ["^" natural] | "-" factor
    rational := natural ["/" natural]

Multiplication is always explicit (`2*x1`, never `2x1`).  Without a `vars:`
header, identifiers must look like `x<digits>` and are declared in numeric
order; with a header, any identifiers are accepted in the declared order.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .poly import GREVLEX, Monomial, MonomialOrder, Polynomial

_MAX_NESTING = 200
_AUTO_VAR = re.compile(r"^x(\d+)$")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_NATURAL = re.compile(r"\d+")


class ParseError(ValueError):
    """Rejection of malformed input, carrying a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class _Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind: str, text: str, line: int, column: int):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            tokens.append(_Token("newline", ch, line, col))
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch in "+-*/^(),:":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        m = _NATURAL.match(text, i)
        if m:
            tokens.append(_Token("nat", m.group(), line, col))
            col += len(m.group())
            i = m.end()
            continue
        m = _IDENT.match(text, i)
        if m:
            tokens.append(_Token("ident", m.group(), line, col))
            col += len(m.group())
            i = m.end()
            continue
        raise ParseError(f"unknown character {ch!r}", line, col)
    return tokens


# Raw polynomials during parsing: {((name, exp), ...) sorted: coefficient}.
_RawPoly = dict


def _raw_const(value: Fraction) -> _RawPoly:
    return {(): value} if value else {}


def _raw_var(name: str) -> _RawPoly:
    return {((name, 1),): Fraction(1)}


def _raw_add(a: _RawPoly, b: _RawPoly) -> _RawPoly:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, Fraction(0)) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _raw_neg(a: _RawPoly) -> _RawPoly:
    return {k: -c for k, c in a.items()}


def _raw_mul(a: _RawPoly, b: _RawPoly) -> _RawPoly:
    out: _RawPoly = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            exps = dict(ka)
            for name, e in kb:
                exps[name] = exps.get(name, 0) + e
            k = tuple(sorted(exps.items()))
            s = out.get(k, Fraction(0)) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _raw_pow(a: _RawPoly, e: int) -> _RawPoly:
    result = _raw_const(Fraction(1))
    base = a
    while e:
        if e & 1:
            result = _raw_mul(result, base)
        e >>= 1
        if e:
            base = _raw_mul(base, base)
    return result


class _ExprParser:
    """Recursive-descent parser for a single polynomial token stream."""

    def __init__(self, tokens: list[_Token], declared: set[str] | None, seen: set[str]):
        self.tokens = tokens
        self.pos = 0
        self.declared = declared
        self.seen = seen
        self.depth = 0

    def _peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> _Token | None:
        tok = self._peek()
        if tok is not None:
            self.pos += 1
        return tok

    def _fail(self, message: str) -> ParseError:
        tok = self._peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else None
            line = last.line if last else 1
            col = last.column + len(last.text) if last else 1
            return ParseError(f"{message} at end of input", line, col)
        return ParseError(message, tok.line, tok.column)

    def parse(self) -> _RawPoly:
        value = self.polynomial()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.column)
        return value

    def polynomial(self) -> _RawPoly:
        value = self.term()
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in ("+", "-"):
                return value
            self._next()
            rhs = self.term()
            value = _raw_add(value, rhs if tok.kind == "+" else _raw_neg(rhs))

    def term(self) -> _RawPoly:
        value = self.factor()
        while True:
            tok = self._peek()
            if tok is None or tok.kind != "*":
                return value
            self._next()
            value = _raw_mul(value, self.factor())

    def factor(self) -> _RawPoly:
        tok = self._peek()
        if tok is None:
            raise self._fail("expected a factor")
        if tok.kind == "-":
            self._next()
            return _raw_neg(self.factor())
        value = self.primary()
        if self._peek() is not None and self._peek().kind == "^":
            self._next()
            value = _raw_pow(value, self.exponent())
        return value

    def primary(self) -> _RawPoly:
        tok = self._peek()
        if tok is None:
            raise self._fail("expected a factor")
        if tok.kind == "nat":
            self._next()
            numerator = int(tok.text)
            if self._peek() is not None and self._peek().kind == "/":
                self._next()
                den = self._next()
                if den is None or den.kind != "nat":
                    raise self._fail("malformed rational: expected a denominator")
                if int(den.text) == 0:
                    raise ParseError("malformed rational: zero denominator", den.line, den.column)
                return _raw_const(Fraction(numerator, int(den.text)))
            return _raw_const(Fraction(numerator))
        if tok.kind == "ident":
            self._next()
            name = tok.text
            if self.declared is not None:
                if name not in self.declared:
                    raise ParseError(f"undeclared identifier {name}", tok.line, tok.column)
            elif not _AUTO_VAR.match(name):
                raise ParseError(
                    f"undeclared identifier {name} (use a vars: header for names other than x1, x2, ...)",
                    tok.line,
                    tok.column,
                )
            self.seen.add(name)
            return _raw_var(name)
        if tok.kind == "(":
            self.depth += 1
            if self.depth > _MAX_NESTING:
                raise ParseError("expression nested too deeply", tok.line, tok.column)
            self._next()
            value = self.polynomial()
            closing = self._peek()
            if closing is None or closing.kind != ")":
                raise self._fail("expected ')'")
            self._next()
            self.depth -= 1
            return value
        raise self._fail(f"unexpected {tok.text!r}")

    def exponent(self) -> int:
        tok = self._peek()
        if tok is None or tok.kind != "nat":
            if tok is not None and tok.kind == "-":
                raise ParseError("exponent must be a non-negative integer literal", tok.line, tok.column)
            raise self._fail("exponent must be a non-negative integer literal")
        self._next()
        return int(tok.text)


def _raw_to_polynomial(raw: _RawPoly, variables: Sequence[str], order: MonomialOrder) -> Polynomial:
    index = {name: i for i, name in enumerate(variables)}
    terms = []
    for key, coeff in raw.items():
        exps = [0] * len(variables)
        for name, e in key:
            exps[index[name]] = e
        terms.append((Monomial(exps), coeff))
    return Polynomial(order, terms)


def parse_polynomial(text: str, variables: Sequence[str], kind: str = GREVLEX) -> Polynomial:
    """Parse one polynomial over the declared variables, in canonical form."""
    names = list(variables)
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate variable names in {names}")
    tokens = [t for t in _tokenize(text) if t.kind != "newline"]
    parser = _ExprParser(tokens, declared=set(names), seen=set())
    raw = parser.parse()
    return _raw_to_polynomial(raw, names, MonomialOrder(kind, len(names)))


def parse_system(text: str, kind: str = GREVLEX) -> tuple[list[str], list[Polynomial]]:
    """Parse a polynomial system: optional `vars:` header, one polynomial per line.

    Returns the ordered variable names and the polynomials in canonical form
    over the full variable set.  Without a header, variables are the `x<digits>`
    identifiers that occur, ordered numerically.
    """
    tokens = _tokenize(text)
    lines: list[list[_Token]] = []
    current: list[_Token] = []
    for tok in tokens:
        if tok.kind == "newline":
            if current:
                lines.append(current)
                current = []
        else:
            current.append(tok)
    if current:
        lines.append(current)

    declared: list[str] | None = None
    if lines and lines[0][0].kind == "ident" and lines[0][0].text == "vars" \
            and len(lines[0]) > 1 and lines[0][1].kind == ":":
        header = lines.pop(0)[2:]
        declared = []
        expect_name = True
        for tok in header:
            if expect_name:
                if tok.kind != "ident":
                    raise ParseError("expected a variable name", tok.line, tok.column)
                if tok.text in declared:
                    raise ParseError(f"duplicate variable {tok.text}", tok.line, tok.column)
                declared.append(tok.text)
            elif tok.kind != ",":
                raise ParseError("expected ','", tok.line, tok.column)
            expect_name = not expect_name
        if expect_name:
            last = header[-1] if header else lines[0][0] if lines else _Token("", "", 1, 1)
            raise ParseError("expected a variable name", last.line, last.column + len(last.text))

    if not lines:
        raise ParseError("empty system: no polynomials", 1, 1)

    seen: set[str] = set()
    declared_set = set(declared) if declared is not None else None
    raws = [_ExprParser(line, declared_set, seen).parse() for line in lines]

    if declared is not None:
        names = declared
    else:
        # x<digits> identifiers sort by their numeric suffix.
        names = sorted(seen, key=lambda s: (int(_AUTO_VAR.match(s).group(1)), s))
    order = MonomialOrder(kind, len(names))
    return names, [_raw_to_polynomial(raw, names, order) for raw in raws]


def format_monomial(m: Monomial, variables: Sequence[str]) -> str:
    """Power-product text like `x1*x2^2`; the unit monomial prints as `1`."""
    if len(variables) != m.nvars:
        raise ValueError(f"{len(variables)} names for a monomial in {m.nvars} variables")
    parts = []
    for name, e in zip(variables, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(p: Polynomial, variables: Sequence[str]) -> str:
    """Canonical text with terms descending under the polynomial's order.

    `parse_polynomial(format_polynomial(p, v), v, p.order.kind)` returns `p`.
    """
    if len(variables) != p.nvars:
        raise ValueError(f"{len(variables)} names for a polynomial in {p.nvars} variables")
    if p.is_zero():
        return "0"
    pieces = []
    for i, (mono, coeff) in enumerate(p.terms):
        sign = "-" if coeff < 0 else ("" if i == 0 else "+")
        magnitude = -coeff if coeff < 0 else coeff
        if mono.is_unit():
            body = str(magnitude)
        elif magnitude == 1:
            body = format_monomial(mono, variables)
        else:
            body = f"{magnitude}*{format_monomial(mono, variables)}"
        pieces.append(sign + body)
    return "".join(pieces)

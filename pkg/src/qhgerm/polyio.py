"""Bivariate polynomials over Q(i): representation, parsing, printing.

Grammar accepted by parse_poly (whitespace allowed between terms and around
'+', '-', '*'):

    poly       := sign? term (('+'|'-') term)*
    term       := factor ('*' factor | juxt)*
    juxt       := ('X'|'Y'|'i') exponent?     immediately after a number factor
    factor     := base exponent?
    base       := 'X' | 'Y' | 'i' | number | '(' poly ')'
    exponent   := '^' uint
    number     := uint ('/' uint | '.' digits)?

Juxtaposition is only read directly after a numeric literal ("2X", "3i",
"1/2i"); parenthesized groups always need '*'. Decimal literals are exact
("0.3" is 3/10) but flag the polynomial as numeric-mode, recording that the
user did not supply symbolic data. The leading optional sign is a strict
superset of the documented form so that every printed polynomial re-parses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import EmptyInputError, NegativeExponentError, ParseError
from .exact import GQ_ONE, GQ_ZERO, GaussianRational, format_coefficient

MODE_EXACT = "exact"
MODE_NUMERIC = "numeric"


def _join_mode(a: str, b: str) -> str:
    return MODE_NUMERIC if MODE_NUMERIC in (a, b) else MODE_EXACT


@dataclass(frozen=True)
class BivarPoly:
    """Sparse polynomial in X, Y with Gaussian rational coefficients.

    terms maps (x_exponent, y_exponent) to a nonzero coefficient. Equality
    compares term maps only; the mode flag is bookkeeping, not algebra.
    """

    terms: dict
    mode: str = field(default=MODE_EXACT, compare=False)

    @staticmethod
    def from_terms(terms, mode: str = MODE_EXACT) -> "BivarPoly":
        clean = {}
        for (i, j), c in dict(terms).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            c = GaussianRational.of(c)
            if not c.is_zero:
                clean[(int(i), int(j))] = c
        return BivarPoly(clean, mode)

    @staticmethod
    def zero(mode: str = MODE_EXACT) -> "BivarPoly":
        return BivarPoly({}, mode)

    @staticmethod
    def constant(c, mode: str = MODE_EXACT) -> "BivarPoly":
        return BivarPoly.from_terms({(0, 0): GaussianRational.of(c)}, mode)

    @staticmethod
    def monomial(i: int, j: int, c=GQ_ONE, mode: str = MODE_EXACT) -> "BivarPoly":
        return BivarPoly.from_terms({(i, j): GaussianRational.of(c)}, mode)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def support(self) -> list:
        """Exponent pairs with nonzero coefficient, sorted."""
        return sorted(self.terms)

    def coeff(self, i: int, j: int) -> GaussianRational:
        return self.terms.get((i, j), GQ_ZERO)

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, GQ_ZERO) + c
            if s.is_zero:
                out.pop(key, None)
            else:
                out[key] = s
        return BivarPoly(out, _join_mode(self.mode, other.mode))

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -c for k, c in self.terms.items()}, self.mode)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                s = out.get(key, GQ_ZERO) + c1 * c2
                if s.is_zero:
                    out.pop(key, None)
                else:
                    out[key] = s
        return BivarPoly(out, _join_mode(self.mode, other.mode))

    def __pow__(self, exponent: int) -> "BivarPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = BivarPoly.constant(1, self.mode)
        square = self
        n = exponent
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def scale(self, c) -> "BivarPoly":
        c = GaussianRational.of(c)
        if c.is_zero:
            return BivarPoly({}, self.mode)
        return BivarPoly({k: v * c for k, v in self.terms.items()}, self.mode)

    def evaluate(self, x, y) -> GaussianRational:
        """Exact evaluation at a point of Q(i)^2."""
        x = GaussianRational.of(x)
        y = GaussianRational.of(y)
        xp = _power_cache(x, {i for i, _ in self.terms})
        yp = _power_cache(y, {j for _, j in self.terms})
        acc = GQ_ZERO
        for (i, j), c in self.terms.items():
            acc = acc + c * xp[i] * yp[j]
        return acc

    def substitute(self, x_image: "BivarPoly", y_image: "BivarPoly") -> "BivarPoly":
        """Ring substitution X -> x_image, Y -> y_image."""
        max_i = max((i for i, _ in self.terms), default=0)
        max_j = max((j for _, j in self.terms), default=0)
        xp = _poly_powers(x_image, max_i)
        yp = _poly_powers(y_image, max_j)
        acc = BivarPoly.zero(self.mode)
        for (i, j), c in self.terms.items():
            acc = acc + (xp[i] * yp[j]).scale(c)
        return acc

    def __str__(self) -> str:
        return format_poly(self)


def _power_cache(z: GaussianRational, exponents) -> dict:
    top = max(exponents, default=0)
    powers = [GQ_ONE]
    for _ in range(top):
        powers.append(powers[-1] * z)
    return powers


def _poly_powers(p: BivarPoly, top: int) -> list:
    powers = [BivarPoly.constant(1, p.mode)]
    for _ in range(top):
        powers.append(powers[-1] * p)
    return powers


X = BivarPoly.monomial(1, 0)
Y = BivarPoly.monomial(0, 1)


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.saw_decimal = False

    def fail(self, message: str, position: int | None = None):
        raise ParseError(message, self.pos if position is None else position)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self) -> BivarPoly:
        self.skip_ws()
        if self.pos == len(self.text):
            raise EmptyInputError()
        result = self.poly()
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail(f"unexpected input {self.text[self.pos]!r}")
        mode = MODE_NUMERIC if self.saw_decimal else MODE_EXACT
        return BivarPoly(result.terms, mode)

    def poly(self) -> BivarPoly:
        self.skip_ws()
        negate = False
        if self.peek() in ("+", "-"):
            negate = self.peek() == "-"
            self.pos += 1
            self.skip_ws()
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            self.skip_ws()
            op = self.peek()
            if op not in ("+", "-"):
                break
            self.pos += 1
            self.skip_ws()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> BivarPoly:
        acc, was_number = self.factor()
        while True:
            ch = self.peek()
            if was_number and ch in ("X", "Y", "i"):
                acc = acc * self.symbol_factor()
                was_number = False
                continue
            save = self.pos
            self.skip_ws()
            if self.peek() == "*":
                self.pos += 1
                self.skip_ws()
                f, was_number = self.factor()
                acc = acc * f
                continue
            self.pos = save
            return acc

    def factor(self) -> tuple[BivarPoly, bool]:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.poly()
            self.skip_ws()
            if self.peek() != ")":
                self.fail("expected ')'")
            self.pos += 1
            e = self.maybe_exponent()
            return (inner if e is None else inner**e), False
        if ch in ("X", "Y", "i"):
            return self.symbol_factor(), False
        if ch.isdigit():
            return self.number(), True
        if ch == "":
            self.fail("unexpected end of input")
        self.fail(f"expected 'X', 'Y', 'i', a number, or '(', got {ch!r}")

    def symbol_factor(self) -> BivarPoly:
        ch = self.peek()
        self.pos += 1
        e = self.maybe_exponent()
        e = 1 if e is None else e
        if ch == "X":
            return BivarPoly.monomial(e, 0)
        if ch == "Y":
            return BivarPoly.monomial(0, e)
        return BivarPoly.constant(GaussianRational(Fraction(0), Fraction(1)) ** e)

    def maybe_exponent(self) -> int | None:
        save = self.pos
        self.skip_ws()
        if self.peek() != "^":
            self.pos = save
            return None
        self.pos += 1
        self.skip_ws()
        if self.peek() == "-":
            raise NegativeExponentError(self.pos)
        if not self.peek().isdigit():
            self.fail("expected an unsigned integer exponent")
        return self.uint()

    def uint(self) -> int:
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        return int(self.text[start : self.pos])

    def number(self) -> BivarPoly:
        start = self.pos
        whole = self.uint()
        if self.peek() == "/":
            self.pos += 1
            if not self.peek().isdigit():
                self.fail("expected a denominator")
            dpos = self.pos
            den = self.uint()
            if den == 0:
                self.fail("zero denominator", dpos)
            return BivarPoly.constant(Fraction(whole, den))
        if self.peek() == ".":
            self.pos += 1
            if not self.peek().isdigit():
                self.fail("expected digits after the decimal point")
            fstart = self.pos
            while self.peek().isdigit():
                self.pos += 1
            digits = self.text[fstart : self.pos]
            self.saw_decimal = True
            value = Fraction(int(str(whole) + digits), 10 ** len(digits))
            return BivarPoly.constant(value)
        return BivarPoly.constant(whole)


def parse_poly(text: str) -> BivarPoly:
    """Parse polynomial text into a BivarPoly, expanding all products."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# printing
# ---------------------------------------------------------------------------


def _monomial_str(i: int, j: int) -> str:
    parts = []
    if i == 1:
        parts.append("X")
    elif i > 1:
        parts.append(f"X^{i}")
    if j == 1:
        parts.append("Y")
    elif j > 1:
        parts.append(f"Y^{j}")
    return "*".join(parts)


def format_poly(poly: BivarPoly, style: str = "expanded") -> str:
    """Deterministic rendering; parse_poly(format_poly(P)) == P.

    Terms print with X-exponent ascending, then Y-exponent ascending, the
    order the golden outputs use ("Y^2 - X^3", "X*Y^3 - 3*X^2*Y^2 + ...").
    """
    if style == "json":
        return json.dumps(poly_to_json_dict(poly), sort_keys=True, separators=(", ", ": "))
    if style != "expanded":
        raise ValueError(f"unknown style {style!r}")
    if poly.is_zero:
        return "0"
    parts = []
    for (i, j) in sorted(poly.terms):
        c = poly.terms[(i, j)]
        mono = _monomial_str(i, j)
        if c.is_rational:
            neg = c.re < 0
            mag = abs(c.re)
            body = str(mag) if (mag != 1 or not mono) else ""
        else:
            neg = False
            body = format_coefficient(c)
        text = f"{body}*{mono}" if (body and mono) else (body or mono)
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts)


def poly_to_json_dict(poly: BivarPoly) -> dict:
    """JSON-ready dict with terms in canonical order and exact string parts."""
    return {
        "mode": poly.mode,
        "terms": [
            {"i": i, "j": j, "re": str(poly.terms[(i, j)].re), "im": str(poly.terms[(i, j)].im)}
            for (i, j) in sorted(poly.terms)
        ],
    }

"""Exact arithmetic kernel: Gaussian rationals and univariate polynomials.

Rational scalars are fractions.Fraction, which already guarantees an
arbitrary-precision reduced representation with positive denominator.
Everything in this module is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

from .errors import ZeroPolynomialError

Rationalish = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of the field Q(i)."""

    re: Fraction = _ZERO
    im: Fraction = _ZERO

    @staticmethod
    def of(value, im: Rationalish = 0) -> "GaussianRational":
        """Coerce an int, Fraction, or GaussianRational; optional imaginary part."""
        if isinstance(value, GaussianRational):
            if im:
                raise ValueError("cannot add an imaginary part to a GaussianRational")
            return value
        return GaussianRational(_fraction(value), _fraction(im))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_rational(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """The field norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __add__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "GaussianRational":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an int")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = GQ_ONE
        square = self
        n = exponent
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(_fraction(x))
    return NotImplemented


GQ_ZERO = GaussianRational()
GQ_ONE = GaussianRational(_ONE)
GQ_I = GaussianRational(_ZERO, _ONE)


def gq(re, im: Rationalish = 0) -> GaussianRational:
    """Shorthand constructor, accepting ints and Fractions."""
    return GaussianRational.of(re, im)


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial over Q(i), coefficients stored degree-descending.

    The leading coefficient is nonzero; the zero polynomial is the empty
    tuple. coeffs[i] is the coefficient i levels below the top, which is
    the quantity the equivalence matchers work with directly.
    """

    coeffs: tuple = ()

    @staticmethod
    def from_coeffs(coeffs: Iterable) -> "UniPoly":
        cs = [GaussianRational.of(c) for c in coeffs]
        while cs and cs[0].is_zero:
            cs.pop(0)
        return UniPoly(tuple(cs))

    @staticmethod
    def zero() -> "UniPoly":
        return UniPoly(())

    @staticmethod
    def one() -> "UniPoly":
        return UniPoly((GQ_ONE,))

    @staticmethod
    def monomial(degree: int, coeff=GQ_ONE) -> "UniPoly":
        c = GaussianRational.of(coeff)
        if c.is_zero:
            return UniPoly(())
        return UniPoly((c,) + (GQ_ZERO,) * degree)

    @staticmethod
    def from_roots(roots: Iterable) -> "UniPoly":
        """Monic polynomial with the given roots (with multiplicity)."""
        acc = UniPoly.one()
        for r in roots:
            acc = acc * UniPoly((GQ_ONE, -GaussianRational.of(r)))
        return acc

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[0]

    def coeff_of_power(self, k: int) -> GaussianRational:
        """Coefficient of w^k."""
        d = self.degree
        if k < 0 or k > d:
            return GQ_ZERO
        return self.coeffs[d - k]

    def coeff_from_top(self, i: int) -> GaussianRational:
        """Coefficient i levels below the leading term, i.e. of w^(degree-i)."""
        if i < 0 or i >= len(self.coeffs):
            return GQ_ZERO
        return self.coeffs[i]

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = (GQ_ZERO,) * (n - len(self.coeffs)) + self.coeffs
        b = (GQ_ZERO,) * (n - len(other.coeffs)) + other.coeffs
        return UniPoly.from_coeffs(x + y for x, y in zip(a, b))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "UniPoly":
        return UniPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UniPoly(())
        out = [GQ_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly.from_coeffs(out)

    def __pow__(self, exponent: int) -> "UniPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = UniPoly.one()
        square = self
        n = exponent
        while n:
            if n & 1:
                result = result * square
            square = square * square
            n >>= 1
        return result

    def scale(self, c) -> "UniPoly":
        c = GaussianRational.of(c)
        if c.is_zero:
            return UniPoly(())
        return UniPoly(tuple(a * c for a in self.coeffs))

    def monic(self) -> tuple["UniPoly", GaussianRational]:
        """Split into (monic polynomial, leading coefficient)."""
        lead = self.leading
        return self.scale(lead.inverse()), lead

    def eval(self, z) -> GaussianRational:
        """Horner evaluation at an exact point."""
        z = GaussianRational.of(z)
        acc = GQ_ZERO
        for c in self.coeffs:
            acc = acc * z + c
        return acc

    def derivative(self) -> "UniPoly":
        d = self.degree
        if d <= 0:
            return UniPoly(())
        return UniPoly.from_coeffs(
            c * GaussianRational.of(d - i) for i, c in enumerate(self.coeffs[:-1])
        )

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Long division; coefficients live in a field so this is exact."""
        if not isinstance(other, UniPoly):
            return NotImplemented
        if other.is_zero:
            raise ZeroPolynomialError("division by the zero polynomial")
        if self.degree < other.degree:
            return UniPoly(()), self
        inv_lead = other.leading.inverse()
        rem = list(self.coeffs)
        dq = self.degree - other.degree
        quo = [GQ_ZERO] * (dq + 1)
        for k in range(dq + 1):
            c = rem[k] * inv_lead
            if c.is_zero:
                continue
            quo[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly.from_coeffs(quo), UniPoly.from_coeffs(rem[dq + 1 :])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def squarefree_parts(self) -> list[tuple["UniPoly", int]]:
        """Split into [(factor, multiplicity)] with square-free monic factors.

        Yun's method: pairwise-coprime factors, one per multiplicity level
        that actually occurs, in increasing multiplicity order. The product
        of factor**multiplicity recovers the monic part of the polynomial.
        Root finding runs on the factors, where every root is simple.
        """
        if self.degree < 1:
            return []
        f, _ = self.monic()
        df = f.derivative()
        a = poly_gcd(f, df)
        b = f // a
        d = (df // a) - b.derivative()
        out = []
        mult = 1
        while b.degree > 0:
            g = poly_gcd(b, d)
            if g.degree > 0:
                out.append((g, mult))
            b = b // g
            d = (d // g) - b.derivative()
            mult += 1
        return out

    def shift(self, c) -> "UniPoly":
        """Taylor shift: the polynomial w -> P(w + c), computed exactly.

        Repeated synthetic division by c; pass k of the outer loop leaves the
        coefficient of w^k behind.
        """
        c = GaussianRational.of(c)
        if self.is_zero or c.is_zero:
            return self
        work = list(self.coeffs)
        n = len(work)
        shifted_ascending = []
        for k in range(n):
            for i in range(1, n - k):
                work[i] = work[i] + work[i - 1] * c
            shifted_ascending.append(work[n - 1 - k])
        return UniPoly.from_coeffs(reversed(shifted_ascending))

    def __str__(self) -> str:
        return format_unipoly(self)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor by the Euclidean remainder sequence.

    Remainders are re-normalized to monic each step, which keeps the
    rational coefficients from compounding across iterations.
    """
    while not b.is_zero:
        a, b = b, a % b
        if not b.is_zero:
            b, _ = b.monic()
    if a.is_zero:
        return a
    return a.monic()[0]


def taylor_shift(poly: UniPoly, c) -> UniPoly:
    """Functional alias for UniPoly.shift."""
    return poly.shift(c)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b), a and b nonnegative."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_x, x = x, old_x - qt * x
        old_y, y = y, old_y - qt * y
    return old_r, old_x, old_y


def gcd_bezout(indices: Sequence[int]) -> tuple[int, list[int]]:
    """gcd of a nonempty list of positive ints plus Bezout coefficients.

    Returns (d, coeffs) with sum(coeffs[t] * indices[t]) == d.
    """
    if not indices:
        raise ValueError("gcd_bezout needs a nonempty index list")
    for n in indices:
        if not isinstance(n, int) or n < 1:
            raise ValueError("indices must be positive integers")
    g = indices[0]
    coeffs = [1]
    for n in indices[1:]:
        g2, x, y = _ext_gcd(g, n)
        coeffs = [c * x for c in coeffs]
        coeffs.append(y)
        g = g2
    return g, coeffs


def _fraction_str(f: Fraction) -> str:
    return str(f)


def _coeff_needs_parens(c: GaussianRational) -> bool:
    return not c.is_rational


def format_coefficient(c: GaussianRational) -> str:
    """Render a coefficient the way the bivariate printer does.

    Rational values print bare ("3", "-1/2"); anything with an imaginary
    part prints in parenthesized re+im form ("(1+1i)", "(0-2/3i)") so that
    the result re-parses unambiguously.
    """
    if c.is_rational:
        return _fraction_str(c.re)
    sign = "+" if c.im >= 0 else "-"
    return f"({_fraction_str(c.re)}{sign}{_fraction_str(abs(c.im))}i)"


def format_unipoly(poly: UniPoly, var: str = "w") -> str:
    """Deterministic degree-descending rendering, e.g. "w^2 - 3*w + 2"."""
    if poly.is_zero:
        return "0"
    parts = []
    d = poly.degree
    for i, c in enumerate(poly.coeffs):
        if c.is_zero:
            continue
        k = d - i
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        if c.is_rational:
            neg = c.re < 0
            mag = abs(c.re)
            body = _fraction_str(mag) if (mag != 1 or not mono) else ""
        else:
            neg = False
            body = format_coefficient(c)
        if body and mono:
            text = f"{body}*{mono}"
        else:
            text = body or mono
        if not parts:
            parts.append(("-" if neg else "") + text)
        else:
            parts.append(("- " if neg else "+ ") + text)
    return " ".join(parts)

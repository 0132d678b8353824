"""Exact arbitrary-precision arithmetic: integers, rationals, rational polynomials.

Every computation in this package runs over one of three exact domains:
Python ``int``, ``fractions.Fraction``, or the dense rational polynomial
``Poly`` defined here.  The three mix freely in arithmetic; ``unify`` picks
the smallest domain that holds a list of results exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def factorial(n: int) -> int:
    """n! for n >= 0."""
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k) for integer n >= 0, with C(n, k) = 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError("binomial requires n >= 0")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def gen_binomial(z: Scalar, k: int) -> Fraction:
    """Generalized binomial C(z, k) = z(z-1)...(z-k+1)/k! for rational z, k >= 0.

    Agrees with ``binomial`` whenever z is an integer with 0 <= k <= z.
    """
    if k < 0:
        raise ValueError("gen_binomial requires k >= 0")
    prod = Fraction(1)
    for i in range(k):
        prod *= Fraction(z) - i
    return prod / factorial(k)


class Poly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of x**i.  Trailing zeros are trimmed on
    construction; the zero polynomial stores an empty tuple.  Instances are
    treated as immutable.  Arithmetic accepts ints and Fractions on either
    side, so polynomials slot into generic code written for scalars.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()) -> None:
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other: object) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        return None

    def __add__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        a, b = self.coeffs, rhs.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Poly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Poly":
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Poly(c / other for c in self.coeffs)

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            if not self.coeffs:
                return other == 0
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __call__(self, point: Scalar) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __repr__(self) -> str:
        return "Poly([%s])" % ", ".join(str(c) for c in self.coeffs)


#: The indeterminate, for building polynomials as expressions: 2 * X**2 - 1.
X = Poly((0, 1))

RingElem = Union[int, Fraction, Poly]


def poly_eval(p: Poly, point: Scalar) -> Fraction:
    """Evaluate a polynomial at a rational point, exactly."""
    return p(point)


def as_poly(value: RingElem) -> Poly:
    return value if isinstance(value, Poly) else Poly((value,))


def as_integer(value: RingElem) -> int:
    """Demote to int; raises ValueError if the value is not an exact integer."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    raise ValueError(f"expected an exact integer, got {value!r}")


def invert(value: RingElem) -> RingElem:
    """Multiplicative inverse of a nonzero rational or constant polynomial."""
    if isinstance(value, Poly):
        if value.degree != 0:
            raise ValueError("polynomial is not invertible (degree != 0)")
        return Poly((Fraction(1) / value.coeffs[0],))
    if value == 0:
        raise ValueError("zero is not invertible")
    return Fraction(1) / Fraction(value)


def unify(values: Iterable[RingElem]) -> list[RingElem]:
    """Coerce a list of results into one canonical domain.

    Polynomials win over scalars; among scalars, the list demotes to ints
    exactly when every entry is integral.
    """
    vals = list(values)
    if any(isinstance(v, Poly) for v in vals):
        return [as_poly(v) for v in vals]
    if all(v.denominator == 1 for v in vals):
        return [int(v) for v in vals]
    return [Fraction(v) for v in vals]

"""Multifold self-convolutions of fundamental sequences, three independent ways.

For y the fundamental sequence of (c1, ..., cd), the r-fold convolution
y^(r) collects sums of products y_{m1} * ... * y_{mr} over compositions
m1 + ... + mr = n.  The three routes:

  * ``conv_direct``      -- raise the truncated series to the r-th power;
  * ``conv_bell``        -- closed Bell-polynomial sum, including a uniform
                            shift delta applied to every factor;
  * ``conv_recurrence``  -- the weighted recurrence
                            n * y_n^(r) = sum_m (n + m(r-1)) * c_m * y_{n-m}^(r).

They must agree exactly; the verification suites and the CLI ``conv`` command
cross-check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bell import bell_table, scale_inputs
from .linrec import Seq, invert_transform
from .ring import Poly, RingElem, as_integer, binomial, factorial, gen_binomial, unify
from .series import TruncSeries, ps_pow


@dataclass(frozen=True)
class ConvSpec:
    """An r-fold self-convolution request: coefficients c, fold count r >= 0,
    uniform index shift delta >= 0, and truncation order n_max >= 0."""

    c: tuple[RingElem, ...]
    r: int
    delta: int
    n_max: int

    def __init__(self, c: Sequence[RingElem], r: int, n_max: int, delta: int = 0) -> None:
        if r < 0:
            raise ValueError("fold count r must be >= 0")
        if delta < 0:
            raise ValueError("shift delta must be >= 0")
        if n_max < 0:
            raise ValueError("n_max must be >= 0")
        object.__setattr__(self, "c", tuple(c))
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "n_max", n_max)


@dataclass(frozen=True)
class GenFamilySpec:
    """Parameters of the two-parameter binomial family built on B(n, k):

        y_0 = 1,  y_n = sum_k C(a*n + b*k, k-1) * ((k-1)!/n!) * B(n, k)(1!c1, ...).

    a and b are arbitrary rationals; a = 0, b = 1 recovers the fundamental
    sequence of c.
    """

    a: Fraction
    b: Fraction
    c: tuple[RingElem, ...]

    def __init__(self, a: int | Fraction, b: int | Fraction, c: Sequence[RingElem]) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", tuple(c))


def conv_direct(spec: ConvSpec) -> Seq:
    """Shift the fundamental sequence by delta and raise the series to the r-th
    power.  r = 0 gives the identity series (1, 0, 0, ...)."""
    y = invert_transform(spec.c, spec.n_max)
    shifted = ([0] * spec.delta + list(y.values))[: spec.n_max + 1]
    powered = ps_pow(TruncSeries(shifted), spec.r)
    return Seq(unify(powered.coeffs), "convolution-direct")


def conv_bell(spec: ConvSpec) -> Seq:
    """Closed Bell-polynomial form of the shifted r-fold convolution:

        coefficient n = sum_k C(k+r-1, k) * (k!/m!) * B(m, k)(1!c1, 2!c2, ...)

    with m = n - delta*r, and 0 whenever m < 0.  Requires r >= 1.
    """
    if spec.r < 1:
        raise ValueError("conv_bell requires r >= 1")
    top = max(spec.n_max - spec.delta * spec.r, 0)
    table = bell_table(scale_inputs(spec.c), top)
    fact = [factorial(i) for i in range(top + 1)]
    values: list[RingElem] = []
    for n in range(spec.n_max + 1):
        m = n - spec.delta * spec.r
        if m < 0:
            values.append(0)
            continue
        acc: RingElem = 0
        for k in range(m + 1):
            e = table.entry(m, k)
            if e == 0:
                continue
            acc = acc + binomial(k + spec.r - 1, k) * Fraction(fact[k], fact[m]) * e
        values.append(acc)
    values = unify(values)
    if all(isinstance(cj, int) for cj in spec.c):
        values = [as_integer(v) for v in values]
    return Seq(values, "convolution-bell")


def conv_recurrence(spec: ConvSpec) -> Seq:
    """Run n * y_n^(r) = sum_m (n + m(r-1)) * c_m * y_{n-m}^(r) from y_0^(r) = 1.

    Only the unshifted convolution satisfies this recurrence, so delta must
    be 0 (and r >= 1).  The division by n happens in the rational domain;
    when every c_m is an integer each value is asserted integral before
    being demoted, so a non-exact division fails loudly.
    """
    if spec.r < 1:
        raise ValueError("conv_recurrence requires r >= 1")
    if spec.delta != 0:
        raise ValueError("conv_recurrence requires delta == 0")
    cs = spec.c
    integral = all(isinstance(cj, int) for cj in cs)
    values: list[RingElem] = [1]
    for n in range(1, spec.n_max + 1):
        acc: RingElem = 0
        for m in range(1, min(n, len(cs)) + 1):
            cm = cs[m - 1]
            if cm == 0:
                continue
            acc = acc + (n + m * (spec.r - 1)) * cm * values[n - m]
        if isinstance(acc, Poly):
            value: RingElem = acc / n
        else:
            value = Fraction(acc, n)
            if integral:
                value = as_integer(value)
        values.append(value)
    return Seq(unify(values), "convolution-recurrence")


def padovan_conv_binomial(r: int, n: int) -> int:
    """Pure-binomial form of the r-fold self-convolution of 1, 0, 0, 1, 0, 1, ...
    (the a_n = a_{n-2} + a_{n-3} sequence with init 1, 0, 0):

        sum_{l=1}^{r} C(r, l) * sum_k C(k+l-1, k) * C(k, n-3l-2k).

    Valid for n >= 1.  At n = 0 the sum over l >= 1 is empty and returns 0,
    while the true convolution is 1 (the all-zeros composition); an l = 0
    term would contribute exactly that missing 1.
    """
    if r < 1:
        raise ValueError("padovan_conv_binomial requires r >= 1")
    if n < 0:
        raise ValueError("padovan_conv_binomial requires n >= 0")
    total = 0
    for l in range(1, r + 1):
        inner = 0
        for k in range(max(n - 3 * l, -1) + 1):
            inner += binomial(k + l - 1, k) * binomial(k, n - 3 * l - 2 * k)
        total += binomial(r, l) * inner
    return total


def genfam_seq(spec: GenFamilySpec, n_max: int) -> Seq:
    """Terms of the two-parameter binomial family for the given a, b, c."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    table = bell_table(scale_inputs(spec.c), n_max)
    fact = [factorial(i) for i in range(n_max + 1)]
    values: list[RingElem] = [1]
    for n in range(1, n_max + 1):
        acc: RingElem = 0
        for k in range(1, n + 1):
            e = table.entry(n, k)
            if e == 0:
                continue
            w = gen_binomial(spec.a * n + spec.b * k, k - 1) * Fraction(fact[k - 1], fact[n])
            if w == 0:
                continue
            acc = acc + w * e
        values.append(acc)
    return Seq(unify(values), "bell-formula")


def genfam_conv_check(spec: GenFamilySpec, r: int, n_max: int) -> bool:
    """Check the family's r-fold convolution identity up to n_max:

        sum over compositions of n of y_{m1} * ... * y_{mr}
          = r * sum_k C(a*n + b*k + r - 1, k-1) * ((k-1)!/n!) * B(n, k)(1!c1, ...)

    for n >= 1 (both sides are 1 at n = 0).  Returns True iff every order
    agrees exactly.
    """
    if r < 1:
        raise ValueError("genfam_conv_check requires r >= 1")
    y = genfam_seq(spec, n_max)
    lhs = ps_pow(TruncSeries(y.values), r).coeffs

    table = bell_table(scale_inputs(spec.c), n_max)
    fact = [factorial(i) for i in range(n_max + 1)]
    for n in range(n_max + 1):
        if n == 0:
            rhs: RingElem = 1
        else:
            acc: RingElem = 0
            for k in range(1, n + 1):
                e = table.entry(n, k)
                if e == 0:
                    continue
                w = gen_binomial(spec.a * n + spec.b * k + (r - 1), k - 1)
                if w == 0:
                    continue
                acc = acc + w * Fraction(fact[k - 1], fact[n]) * e
            rhs = r * acc
        if lhs[n] != rhs:
            return False
    return True

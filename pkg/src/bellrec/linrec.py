"""Linear recurrences with fixed coefficients, and their Bell-basis form.

A sequence satisfying a_n = c1*a_{n-1} + ... + cd*a_{n-d} decomposes as a
short linear combination of shifts of one fundamental sequence y: the
coefficient sequence of 1/(1 - c1*t - ... - cd*t^d), a.k.a. the INVERT
transform of (c1, ..., cd).  ``invert_transform`` computes y two independent
ways (Bell-polynomial sum and series reciprocal) and insists they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bell import bell_table, scale_inputs
from .errors import PathMismatchError
from .ring import Poly, RingElem, as_integer, binomial, factorial, unify
from .series import TruncSeries, ps_recip

#: Provenance tags for how a sequence's values were produced.
METHODS = frozenset({
    "direct-recurrence",
    "bell-formula",
    "series-reciprocal",
    "closed-form",
    "convolution-direct",
    "convolution-bell",
    "convolution-recurrence",
})


@dataclass(frozen=True)
class RecurrenceSpec:
    """Recurrence a_n = sum_j coeffs[j-1] * a_{n-j} with initial terms ``init``.

    The order d is len(coeffs), which must equal len(init) and be >= 1.
    """

    coeffs: tuple[RingElem, ...]
    init: tuple[RingElem, ...]

    def __init__(self, coeffs: Sequence[RingElem], init: Sequence[RingElem]) -> None:
        coeffs = tuple(coeffs)
        init = tuple(init)
        if len(coeffs) != len(init):
            raise ValueError("coeffs and init must have the same length")
        if not coeffs:
            raise ValueError("recurrence order must be >= 1")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "init", init)

    @property
    def d(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class Seq:
    """A finite run of sequence values a_0 .. a_{n_max} plus a provenance tag."""

    values: tuple[RingElem, ...]
    method: str

    def __init__(self, values: Sequence[RingElem], method: str) -> None:
        if method not in METHODS:
            raise ValueError(f"unknown method tag: {method!r}")
        object.__setattr__(self, "values", tuple(values))
        object.__setattr__(self, "method", method)

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> RingElem:
        return self.values[n]

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class Decomposition:
    """Weights (lambda_0, ..., lambda_{d-1}) expressing a recurrent sequence as
    sum_k lambda_k * y_{n-k} over the fundamental sequence y of its coefficients.
    lambda_0 always equals a_0 of the source spec."""

    lambdas: tuple[RingElem, ...]

    def __init__(self, lambdas: Sequence[RingElem]) -> None:
        if not len(lambdas):
            raise ValueError("a decomposition needs at least lambda_0")
        object.__setattr__(self, "lambdas", tuple(lambdas))

    @property
    def d(self) -> int:
        return len(self.lambdas)


def eval_recurrence(spec: RecurrenceSpec, n_max: int) -> Seq:
    """Run the recurrence forward from its initial terms."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values: list[RingElem] = list(spec.init[: n_max + 1])
    for n in range(spec.d, n_max + 1):
        acc: RingElem = 0
        for j, cj in enumerate(spec.coeffs, start=1):
            if cj == 0:
                continue
            acc = acc + cj * values[n - j]
        values.append(acc)
    return Seq(unify(values), "direct-recurrence")


def invert_transform(c: Sequence[RingElem], n_max: int) -> Seq:
    """Fundamental sequence of (c1, ..., cd): coefficients of 1/(1 - sum c_j t^j).

    Computed independently as y_n = sum_k (k!/n!) * B(n, k)(1!c1, 2!c2, ...)
    and as a truncated series reciprocal; the two must agree exactly, and a
    disagreement raises PathMismatchError.  When every c_j is an integer the
    values are asserted integral and demoted.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    cs = list(c)
    table = bell_table(scale_inputs(cs), n_max)
    fact = [factorial(i) for i in range(n_max + 1)]
    bell_vals: list[RingElem] = []
    for n in range(n_max + 1):
        acc: RingElem = 0
        for k in range(n + 1):
            e = table.entry(n, k)
            if e == 0:
                continue
            acc = acc + e * Fraction(fact[k], fact[n])
        bell_vals.append(acc)

    q_coeffs: list[RingElem] = [1] + [0] * n_max
    for j, cj in enumerate(cs[:n_max], start=1):
        q_coeffs[j] = -cj
    series_vals = ps_recip(TruncSeries(q_coeffs)).coeffs

    for n in range(n_max + 1):
        if bell_vals[n] != series_vals[n]:
            raise PathMismatchError(
                f"invert_transform paths disagree at n={n}: "
                f"bell={bell_vals[n]!r} series={series_vals[n]!r}"
            )

    values = unify(bell_vals)
    if all(isinstance(cj, int) for cj in cs):
        values = [as_integer(v) for v in values]
    return Seq(values, "bell-formula")


def decompose(spec: RecurrenceSpec) -> Decomposition:
    """Weights of a recurrent sequence over the fundamental sequence of its
    coefficients: lambda_0 = a_0 and lambda_n = a_n - sum_{j<=n} c_j a_{n-j}."""
    lambdas: list[RingElem] = [spec.init[0]]
    for n in range(1, spec.d):
        acc: RingElem = spec.init[n]
        for j in range(1, n + 1):
            cj = spec.coeffs[j - 1]
            if cj == 0:
                continue
            acc = acc - cj * spec.init[n - j]
        lambdas.append(acc)
    return Decomposition(unify(lambdas))


def reconstruct(lambdas: Decomposition, c: Sequence[RingElem], n_max: int) -> Seq:
    """Rebuild a_n = sum_k lambda_k * y_{n-k} (terms with n < k drop out)."""
    y = invert_transform(c, n_max)
    values: list[RingElem] = []
    for n in range(n_max + 1):
        acc: RingElem = 0
        for k, lam in enumerate(lambdas.lambdas):
            if k > n or lam == 0:
                continue
            acc = acc + lam * y.values[n - k]
        values.append(acc)
    return Seq(unify(values), "bell-formula")


def fibonacci_closed(alpha: RingElem, c1: RingElem, c2: RingElem, n: int) -> RingElem:
    """Term n >= 1 of the order-2 recurrence with init (0, alpha):
    alpha * sum_j C(n-1-j, j) * c1^(n-1-2j) * c2^j."""
    if n < 1:
        raise ValueError("fibonacci_closed requires n >= 1")
    acc: RingElem = 0
    for j in range(n):
        b = binomial(n - 1 - j, j)
        if b == 0:
            continue
        acc = acc + b * c1 ** (n - 1 - 2 * j) * c2 ** j
    return alpha * acc


def padovan_closed(n: int) -> int:
    """Term n >= 3 of P_n = P_{n-2} + P_{n-3}, init (1, 0, 0):
    sum_k C(k, n-3-2k)."""
    if n < 3:
        raise ValueError("padovan_closed requires n >= 3")
    return sum(binomial(k, n - 3 - 2 * k) for k in range(n - 2))


def tribonacci_closed(n: int) -> int:
    """Term n >= 2 of t_n = t_{n-1} + t_{n-2} + t_{n-3}, init (0, 0, 1):
    sum_j sum_k C(k, j-k) * C(j-k, n-2-j)."""
    if n < 2:
        raise ValueError("tribonacci_closed requires n >= 2")
    total = 0
    for j in range(n - 1):
        for k in range(j + 1):
            total += binomial(k, j - k) * binomial(j - k, n - 2 - j)
    return total


def chebyshev_t(n: int) -> Poly:
    """Chebyshev polynomial of the first kind, as an exact coefficient list.

    For n >= 1: sum_k (-1)^k * (n / (2(n-k))) * C(n-k, k) * (2x)^(n-2k).
    """
    if n < 0:
        raise ValueError("chebyshev_t requires n >= 0")
    if n == 0:
        return Poly((1,))
    two_x = Poly((0, 2))
    acc = Poly()
    for k in range(n // 2 + 1):
        coeff = (-1) ** k * Fraction(n, 2 * (n - k)) * binomial(n - k, k)
        acc = acc + coeff * two_x ** (n - 2 * k)
    return acc


def chebyshev_u(n: int) -> Poly:
    """Chebyshev polynomial of the second kind, as an exact coefficient list.

    For n >= 1: sum_k (-1)^k * C(n-k, k) * (2x)^(n-2k).
    """
    if n < 0:
        raise ValueError("chebyshev_u requires n >= 0")
    if n == 0:
        return Poly((1,))
    two_x = Poly((0, 2))
    acc = Poly()
    for k in range(n // 2 + 1):
        acc = acc + (-1) ** k * binomial(n - k, k) * two_x ** (n - 2 * k)
    return acc

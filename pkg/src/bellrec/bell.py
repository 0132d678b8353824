"""Partial Bell polynomials B(n, k) over exact domains.

``bell_table`` fills a triangular table of values B(n, k)(x1, x2, ...) by the
classical recurrence

    B(n, k) = sum_{j=1}^{n-k+1} C(n-1, j-1) * x_j * B(n-j, k-1),

with B(0, 0) = 1 and B(n, 0) = 0 for n >= 1.  Inputs may be integers,
rationals, or polynomials.  The module also carries closed forms for the
specializations that only feed on the first few x_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .ring import RingElem, binomial, factorial


@dataclass(frozen=True)
class BellTable:
    """Triangular table of B(n, k) values for 0 <= k <= n <= n_max.

    Built by ``bell_table``; ``rows[n][k]`` holds B(n, k) at the stored
    inputs.  ``entry`` extends the triangle with the convention
    B(n, k) = 0 for k > n (and for k < 0).
    """

    n_max: int
    args: tuple[RingElem, ...]
    rows: tuple[tuple[RingElem, ...], ...]

    def entry(self, n: int, k: int) -> RingElem:
        if not 0 <= n <= self.n_max:
            raise IndexError(f"n={n} outside table range 0..{self.n_max}")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def arg(self, j: int) -> RingElem:
        """The input x_j (1-indexed); entries beyond the stored list are 0."""
        if 1 <= j <= len(self.args):
            return self.args[j - 1]
        return 0


def bell_table(x: Sequence[RingElem], n_max: int) -> BellTable:
    """Fill the triangle of B(n, k)(x1, x2, ...) values up to n_max.

    Entries of ``x`` beyond the given list are treated as 0, so the inner
    sum never ranges past len(x) terms.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    args = tuple(x)
    rows: list[tuple[RingElem, ...]] = [(1,)]
    for n in range(1, n_max + 1):
        row: list[RingElem] = [0]
        for k in range(1, n + 1):
            acc: RingElem = 0
            for j in range(1, min(n - k + 1, len(args)) + 1):
                xj = args[j - 1]
                if xj == 0:
                    continue
                acc = acc + binomial(n - 1, j - 1) * xj * rows[n - j][k - 1]
            row.append(acc)
        rows.append(tuple(row))
    return BellTable(n_max, args, tuple(rows))


def scale_inputs(c: Sequence[RingElem]) -> list[RingElem]:
    """Map (c1, c2, ...) to (1!*c1, 2!*c2, ...), the arguments every
    generating-function identity here feeds to B(n, k)."""
    return [factorial(j) * cj for j, cj in enumerate(c, start=1)]


def check_key_identity(table: BellTable, n: int, k: int) -> bool:
    """Check n * B(n, k) = sum_{j=1}^{n-k+1} j * C(n, j) * x_j * B(n-j, k-1).

    This is the weighted row identity that drives the convolution
    recurrence; it must hold identically in the inputs.
    """
    if not 1 <= k <= n <= table.n_max:
        raise IndexError(f"(n, k)=({n}, {k}) outside 1 <= k <= n <= {table.n_max}")
    lhs = n * table.entry(n, k)
    rhs: RingElem = 0
    for j in range(1, n - k + 2):
        xj = table.arg(j)
        if xj == 0:
            continue
        rhs = rhs + j * binomial(n, j) * xj * table.entry(n - j, k - 1)
    return lhs == rhs


def bell_two_term(c1: RingElem, c2: RingElem, n: int, k: int) -> RingElem:
    """B(n, k)(1!*c1, 2!*c2, 0, 0, ...) in closed form:
    (n!/k!) * C(k, n-k) * c1^(2k-n) * c2^(n-k), zero when C(k, n-k) = 0."""
    if not 0 <= k <= n:
        raise ValueError("bell_two_term requires 0 <= k <= n")
    b = binomial(k, n - k)
    if b == 0:
        return 0
    coeff = factorial(n) // factorial(k) * b
    return coeff * c1 ** (2 * k - n) * c2 ** (n - k)


def bell_023(n: int, k: int) -> int:
    """B(n, k)(0, 2!, 3!, 0, ...) = (n!/k!) * C(k, n-2k)."""
    if not 0 <= k <= n:
        raise ValueError("bell_023 requires 0 <= k <= n")
    b = binomial(k, n - 2 * k)
    if b == 0:
        return 0
    return factorial(n) // factorial(k) * b


def bell_123(n: int, k: int) -> int:
    """B(n, k)(1!, 2!, 3!, 0, ...) = (n!/k!) * sum_l C(k, k-l) * C(k-l, n+l-2k)."""
    if not 0 <= k <= n:
        raise ValueError("bell_123 requires 0 <= k <= n")
    total = 0
    for l in range(k + 1):
        total += binomial(k, k - l) * binomial(k - l, n + l - 2 * k)
    return factorial(n) // factorial(k) * total

"""Power sums of roots from elementary symmetric functions, three ways.

Given roots x1, ..., xd (or just their elementary symmetric functions
e1, ..., ed), the power sums s_n = x1^n + ... + xd^n come out of

  * ``power_sums_direct``  -- summing explicit n-th powers of the roots;
  * ``power_sums_newton``  -- Newton's identities, then the order-d recurrence
                              s_n = sum_j c_j s_{n-j} with c_j = (-1)^(j-1) e_j;
  * ``power_sums_bell``    -- the alternating Bell-polynomial sum
                              s_n = sum_k (-1)^(n+k) ((k-1)!/(n-1)!) B(n,k)(1!e1, ..., d!ed).

All three agree exactly and s_0 = d throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bell import bell_table, scale_inputs
from .linrec import Seq
from .ring import RingElem, factorial, unify


@dataclass(frozen=True)
class SymSpec:
    """d roots given by their elementary symmetric functions, and optionally
    the roots themselves (in which case the two must be consistent)."""

    d: int
    elems: tuple[RingElem, ...]
    roots: tuple[RingElem, ...] | None

    def __init__(
        self,
        elems: Sequence[RingElem],
        roots: Sequence[RingElem] | None = None,
    ) -> None:
        elems = tuple(elems)
        if not elems:
            raise ValueError("need at least one elementary symmetric function")
        if roots is not None:
            roots = tuple(roots)
            if len(roots) != len(elems):
                raise ValueError("roots and elems must have the same length")
            if elem_from_roots(roots) != list(elems):
                raise ValueError("elems are not the elementary symmetric functions of roots")
        object.__setattr__(self, "d", len(elems))
        object.__setattr__(self, "elems", elems)
        object.__setattr__(self, "roots", roots)

    @classmethod
    def from_roots(cls, roots: Sequence[RingElem]) -> "SymSpec":
        return cls(elem_from_roots(roots), roots)


def elem_from_roots(roots: Sequence[RingElem]) -> list[RingElem]:
    """Elementary symmetric functions e_1, ..., e_d of the given roots,
    read off the coefficients of prod_i (1 + x_i t)."""
    poly: list[RingElem] = [1]
    for x in roots:
        nxt: list[RingElem] = [1]
        for i in range(1, len(poly) + 1):
            prev = poly[i] if i < len(poly) else 0
            nxt.append(prev + x * poly[i - 1])
        poly = nxt
    return unify(poly[1:])


def power_sums_direct(roots: Sequence[RingElem], n_max: int) -> Seq:
    """s_n = sum_i x_i^n by explicit powering; s_0 = d."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    xs = list(roots)
    powers: list[RingElem] = [1] * len(xs)
    values: list[RingElem] = [len(xs)]
    for _ in range(1, n_max + 1):
        powers = [p * x for p, x in zip(powers, xs)]
        acc: RingElem = 0
        for p in powers:
            acc = acc + p
        values.append(acc)
    return Seq(unify(values), "closed-form")


def power_sums_newton(e: Sequence[RingElem], d: int, n_max: int) -> Seq:
    """Newton's identities for n < d, then the order-d recurrence
    s_n = sum_j c_j s_{n-j} with c_j = (-1)^(j-1) e_j; s_0 = d."""
    if len(e) != d or d < 1:
        raise ValueError("need exactly d >= 1 elementary symmetric functions")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    cs = [(-1) ** (j - 1) * e[j - 1] for j in range(1, d + 1)]
    values: list[RingElem] = [d]
    for n in range(1, n_max + 1):
        acc: RingElem = 0
        if n < d:
            for j in range(1, n):
                acc = acc + cs[j - 1] * values[n - j]
            acc = acc + n * cs[n - 1]
        else:
            for j in range(1, d + 1):
                acc = acc + cs[j - 1] * values[n - j]
        values.append(acc)
    return Seq(unify(values), "direct-recurrence")


def power_sums_bell(e: Sequence[RingElem], d: int, n_max: int) -> Seq:
    """The alternating Bell-polynomial sum over B(n, k)(1!e1, ..., d!ed, 0, ...);
    s_0 = d."""
    if len(e) != d or d < 1:
        raise ValueError("need exactly d >= 1 elementary symmetric functions")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    table = bell_table(scale_inputs(e), n_max)
    fact = [factorial(i) for i in range(n_max + 1)]
    values: list[RingElem] = [d]
    for n in range(1, n_max + 1):
        acc: RingElem = 0
        for k in range(1, n + 1):
            entry = table.entry(n, k)
            if entry == 0:
                continue
            acc = acc + (-1) ** (n + k) * Fraction(fact[k - 1], fact[n - 1]) * entry
        values.append(acc)
    return Seq(unify(values), "bell-formula")

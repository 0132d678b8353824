"""Truncated power series with exact coefficients.

A ``TruncSeries`` holds coefficients of t^0 .. t^n_max.  Operations require
matching truncation orders; there is no implicit extension or shortening.
"""

from __future__ import annotations

from typing import Iterable

from .ring import RingElem, invert


class TruncSeries:
    """A power series truncated past t^n_max (coefficient list, exact)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RingElem]) -> None:
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the t^0 coefficient")
        self.coeffs = cs

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncSeries({list(self.coeffs)!r})"


def ps_one(n_max: int) -> TruncSeries:
    """The multiplicative identity 1 + 0*t + ... truncated at n_max."""
    return TruncSeries([1] + [0] * n_max)


def _check_orders(f: TruncSeries, g: TruncSeries) -> None:
    if f.n_max != g.n_max:
        raise ValueError(f"truncation order mismatch: {f.n_max} != {g.n_max}")


def ps_mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Cauchy product, truncated at the common order."""
    _check_orders(f, g)
    n_max = f.n_max
    out: list[RingElem] = []
    for n in range(n_max + 1):
        acc: RingElem = 0
        for i in range(n + 1):
            fi = f.coeffs[i]
            if fi == 0:
                continue
            acc = acc + fi * g.coeffs[n - i]
        out.append(acc)
    return TruncSeries(out)


def ps_recip(f: TruncSeries) -> TruncSeries:
    """Multiplicative inverse: the unique g with f * g = 1 up to the truncation.

    Requires an invertible constant term (nonzero rational, or a nonzero
    constant polynomial).
    """
    y0 = invert(f.coeffs[0])
    ys: list[RingElem] = [y0]
    for n in range(1, f.n_max + 1):
        acc: RingElem = 0
        for i in range(1, n + 1):
            fi = f.coeffs[i]
            if fi == 0:
                continue
            acc = acc + fi * ys[n - i]
        ys.append(-(y0 * acc))
    return TruncSeries(ys)


def ps_pow(f: TruncSeries, r: int) -> TruncSeries:
    """r-th power by repeated multiplication; r = 0 gives the identity."""
    if r < 0:
        raise ValueError("ps_pow requires r >= 0")
    result = ps_one(f.n_max)
    for _ in range(r):
        result = ps_mul(result, f)
    return result

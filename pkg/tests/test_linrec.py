"""Recurrence evaluation, the fundamental-sequence transform, decompositions,
and the closed-form families."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from bellrec.linrec import (
    Decomposition,
    RecurrenceSpec,
    Seq,
    chebyshev_t,
    chebyshev_u,
    decompose,
    eval_recurrence,
    fibonacci_closed,
    invert_transform,
    padovan_closed,
    reconstruct,
    tribonacci_closed,
)
from bellrec.ring import Poly, X, poly_eval
from bellrec.series import TruncSeries, ps_recip

FIB = RecurrenceSpec([1, 1], [0, 1])
PADOVAN = RecurrenceSpec([0, 1, 1], [1, 0, 0])
TRIBONACCI = RecurrenceSpec([1, 1, 1], [0, 0, 1])


def test_spec_validation():
    with pytest.raises(ValueError):
        RecurrenceSpec([1, 1], [0])
    with pytest.raises(ValueError):
        RecurrenceSpec([], [])
    assert FIB.d == 2


def test_seq_rejects_unknown_tag():
    with pytest.raises(ValueError):
        Seq([1, 2], "guesswork")


def test_eval_recurrence_examples():
    assert eval_recurrence(FIB, 7).values == (0, 1, 1, 2, 3, 5, 8, 13)
    assert eval_recurrence(PADOVAN, 8).values == (1, 0, 0, 1, 0, 1, 1, 1, 2)
    assert eval_recurrence(TRIBONACCI, 10).values == (0, 0, 1, 1, 2, 4, 7, 13, 24, 44, 81)
    assert eval_recurrence(FIB, 7).method == "direct-recurrence"


def test_eval_recurrence_short_runs_truncate_init():
    assert eval_recurrence(TRIBONACCI, 2).values == (0, 0, 1)
    assert eval_recurrence(TRIBONACCI, 1).values == (0, 0)
    assert eval_recurrence(TRIBONACCI, 0).values == (0,)


def test_fundamental_sequence_examples():
    assert invert_transform([1, 1], 7).values == (1, 1, 2, 3, 5, 8, 13, 21)
    assert invert_transform([1, 1, 1], 6).values == (1, 1, 2, 4, 7, 13, 24)
    assert invert_transform([], 4).values == (1, 0, 0, 0, 0)


def test_fundamental_sequence_rational_coefficients():
    y = invert_transform([Fraction(3, 2)], 5)
    assert y.values == tuple(Fraction(3, 2) ** n for n in range(6))


def test_fundamental_sequence_integrality_demotion():
    y = invert_transform([2, -5, 3], 20)
    assert all(isinstance(v, int) for v in y.values)


def test_fundamental_sequence_satisfies_its_own_recurrence():
    rng = random.Random(5)
    for _ in range(10):
        d = rng.randint(1, 5)
        cs = [rng.randint(-6, 6) for _ in range(d)]
        y = invert_transform(cs, 30)
        for n in range(1, 31):
            expected = sum(cs[j - 1] * y[n - j] for j in range(1, min(n, d) + 1))
            assert y[n] == expected


def test_fundamental_sequence_agrees_with_series_reciprocal():
    # recompute the series route in the test, independent of the library call
    cs = [Fraction(1, 2), -2, Fraction(5, 3)]
    y = invert_transform(cs, 12)
    q = [1] + [-c for c in cs] + [0] * 9
    assert tuple(ps_recip(TruncSeries(q)).coeffs) == y.values


def test_decompose_examples():
    assert decompose(PADOVAN).lambdas == (1, 0, -1)
    assert decompose(TRIBONACCI).lambdas == (0, 0, 1)
    assert decompose(RecurrenceSpec([7], [4])).lambdas == (4,)


def test_decompose_chebyshev_weights():
    lam = decompose(RecurrenceSpec([2 * X, Poly([-1])], [Poly([1]), X]))
    assert lam.lambdas == (1, -X)


def test_reconstruct_unit_weight_returns_fundamental_sequence():
    got = reconstruct(Decomposition([1]), [1, 1], 6)
    assert got.values == invert_transform([1, 1], 6).values


def test_reconstruct_round_trip_examples():
    for spec in (FIB, PADOVAN, TRIBONACCI):
        direct = eval_recurrence(spec, 25)
        rebuilt = reconstruct(decompose(spec), spec.coeffs, 25)
        assert direct.values == rebuilt.values


def test_reconstruct_round_trip_random_specs():
    rng = random.Random(99)
    for _ in range(20):
        d = rng.randint(1, 5)
        spec = RecurrenceSpec(
            [rng.randint(-9, 9) for _ in range(d)],
            [rng.randint(-9, 9) for _ in range(d)],
        )
        direct = eval_recurrence(spec, 30)
        rebuilt = reconstruct(decompose(spec), spec.coeffs, 30)
        assert direct.values == rebuilt.values


def test_decomposition_matrix_statement():
    # rows (1), (y1, 1), (y2, y1, 1), ... map the weights to the initial
    # terms, and the inverse rows carry -c_j below the unit diagonal
    rng = random.Random(14)
    for _ in range(10):
        d = rng.randint(1, 5)
        spec = RecurrenceSpec(
            [rng.randint(-7, 7) for _ in range(d)],
            [rng.randint(-7, 7) for _ in range(d)],
        )
        lam = decompose(spec).lambdas
        y = invert_transform(spec.coeffs, d - 1)
        for i in range(d):
            assert sum(y[i - j] * lam[j] for j in range(i + 1)) == spec.init[i]
        for i in range(d):
            acc = spec.init[i]
            for j in range(i):
                acc = acc - spec.coeffs[i - j - 1] * spec.init[j]
            assert acc == lam[i]


def test_fibonacci_closed_form():
    for n in range(1, 26):
        assert fibonacci_closed(1, 1, 1, n) == eval_recurrence(FIB, n).values[n]
    spec = RecurrenceSpec([3, -2], [0, 2])
    for n in range(1, 20):
        assert fibonacci_closed(2, 3, -2, n) == eval_recurrence(spec, n).values[n]
    alpha, c1, c2 = Fraction(1, 2), Fraction(2, 3), Fraction(-1, 4)
    spec = RecurrenceSpec([c1, c2], [0, alpha])
    for n in range(1, 15):
        assert fibonacci_closed(alpha, c1, c2, n) == eval_recurrence(spec, n).values[n]
    with pytest.raises(ValueError):
        fibonacci_closed(1, 1, 1, 0)


def test_padovan_closed_form():
    expected = eval_recurrence(PADOVAN, 25)
    for n in range(3, 26):
        assert padovan_closed(n) == expected.values[n]
    with pytest.raises(ValueError):
        padovan_closed(2)


def test_tribonacci_closed_form():
    expected = eval_recurrence(TRIBONACCI, 25)
    for n in range(2, 26):
        assert tribonacci_closed(n) == expected.values[n]
    with pytest.raises(ValueError):
        tribonacci_closed(1)


def test_chebyshev_first_kind():
    assert chebyshev_t(0) == 1
    assert chebyshev_t(1) == X
    assert chebyshev_t(2) == 2 * X ** 2 - 1
    spec = RecurrenceSpec([2 * X, Poly([-1])], [Poly([1]), X])
    run = eval_recurrence(spec, 15)
    for n in range(16):
        assert chebyshev_t(n) == run.values[n]


def test_chebyshev_second_kind():
    assert chebyshev_u(0) == 1
    assert chebyshev_u(1) == 2 * X
    assert chebyshev_u(3) == 8 * X ** 3 - 4 * X
    spec = RecurrenceSpec([2 * X, Poly([-1])], [Poly([1]), 2 * X])
    run = eval_recurrence(spec, 15)
    for n in range(16):
        assert chebyshev_u(n) == run.values[n]


def test_chebyshev_point_evaluation():
    # T_n(1) = 1 and U_n(1) = n + 1 for every n
    for n in range(12):
        assert poly_eval(chebyshev_t(n), 1) == 1
        assert poly_eval(chebyshev_u(n), 1) == n + 1
    assert poly_eval(chebyshev_t(5), Fraction(1, 2)) == Fraction(1, 2)

"""Multifold self-convolutions: three computation paths and the binomial family."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

import oracles
from bellrec.convolve import (
    ConvSpec,
    GenFamilySpec,
    conv_bell,
    conv_direct,
    conv_recurrence,
    genfam_conv_check,
    genfam_seq,
    padovan_conv_binomial,
)
from bellrec.linrec import RecurrenceSpec, eval_recurrence, invert_transform
from bellrec.ring import Poly, X
from bellrec.series import TruncSeries, ps_mul


def test_spec_validation():
    with pytest.raises(ValueError):
        ConvSpec([1], r=-1, n_max=4)
    with pytest.raises(ValueError):
        ConvSpec([1], r=1, n_max=4, delta=-2)
    with pytest.raises(ValueError):
        ConvSpec([1], r=1, n_max=-1)


def test_single_fold_is_the_fundamental_sequence():
    spec = ConvSpec([1, 1], r=1, n_max=8)
    y = invert_transform([1, 1], 8).values
    assert conv_direct(spec).values == y
    assert conv_bell(spec).values == y
    assert conv_recurrence(spec).values == y


def test_double_fold_example():
    spec = ConvSpec([1, 1], r=2, n_max=6)
    expected = (1, 2, 5, 10, 20, 38, 71)
    assert conv_direct(spec).values == expected
    assert conv_bell(spec).values == expected
    assert conv_recurrence(spec).values == expected
    assert conv_direct(spec).method == "convolution-direct"
    assert conv_bell(spec).method == "convolution-bell"
    assert conv_recurrence(spec).method == "convolution-recurrence"


def test_folds_match_brute_force_composition_sums():
    y = invert_transform([1, 1], 12).values
    for r in (2, 3, 4):
        got = conv_direct(ConvSpec([1, 1], r=r, n_max=12)).values
        for n in range(13):
            assert got[n] == oracles.brute_convolution(y, r, n)


def test_zero_folds_gives_identity_series():
    assert conv_direct(ConvSpec([3, -2], r=0, n_max=5)).values == (1, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        conv_bell(ConvSpec([3, -2], r=0, n_max=5))
    with pytest.raises(ValueError):
        conv_recurrence(ConvSpec([3, -2], r=0, n_max=5))


def test_recurrence_path_rejects_shifts():
    with pytest.raises(ValueError):
        conv_recurrence(ConvSpec([1, 1], r=2, n_max=5, delta=1))


def test_shifted_convolution_example():
    spec = ConvSpec([0, 1, 1], r=2, n_max=10, delta=2)
    expected = (0, 0, 0, 0, 1, 0, 2, 2, 3, 6, 7)
    assert conv_direct(spec).values == expected
    assert conv_bell(spec).values == expected


def test_shifted_convolution_matches_brute_force():
    y = invert_transform([0, 1, 1], 12).values
    shifted = (0, 0) + y[:11]
    spec = ConvSpec([0, 1, 1], r=3, n_max=12, delta=2)
    got = conv_bell(spec).values
    for n in range(13):
        assert got[n] == oracles.brute_convolution(shifted, 3, n)


def test_shift_past_truncation_is_all_zeros():
    spec = ConvSpec([1, 1], r=2, n_max=5, delta=4)
    assert conv_direct(spec).values == (0,) * 6
    assert conv_bell(spec).values == (0,) * 6


def test_three_paths_agree_on_random_specs():
    rng = random.Random(31)
    for _ in range(15):
        d = rng.randint(1, 5)
        spec = ConvSpec(
            [rng.randint(-9, 9) for _ in range(d)],
            r=rng.randint(1, 5),
            n_max=30,
        )
        direct = conv_direct(spec).values
        assert conv_bell(spec).values == direct
        assert conv_recurrence(spec).values == direct


def test_rational_coefficients():
    spec = ConvSpec([Fraction(1, 2), Fraction(-2, 3)], r=2, n_max=15)
    direct = conv_direct(spec).values
    assert conv_bell(spec).values == direct
    assert conv_recurrence(spec).values == direct


def test_polynomial_coefficients():
    spec = ConvSpec([X, Poly([1])], r=2, n_max=8)
    direct = conv_direct(spec).values
    assert conv_bell(spec).values == direct
    assert conv_recurrence(spec).values == direct


def test_fold_counts_add_under_series_product():
    spec_a = ConvSpec([2, -1, 3], r=2, n_max=20)
    spec_b = ConvSpec([2, -1, 3], r=3, n_max=20)
    spec_ab = ConvSpec([2, -1, 3], r=5, n_max=20)
    prod = ps_mul(
        TruncSeries(conv_direct(spec_a).values),
        TruncSeries(conv_direct(spec_b).values),
    )
    assert tuple(prod.coeffs) == conv_direct(spec_ab).values


PAD = RecurrenceSpec([0, 1, 1], [1, 0, 0])


def test_padovan_binomial_convolution_matches_brute_force_for_positive_n():
    pad = eval_recurrence(PAD, 15).values
    for r in (1, 2, 3):
        for n in range(1, 16):
            assert padovan_conv_binomial(r, n) == oracles.brute_convolution(pad, r, n)


def test_padovan_binomial_convolution_misses_only_the_origin():
    # the sum over l >= 1 drops the all-zeros composition, so n = 0 gives 0
    pad = eval_recurrence(PAD, 1).values
    for r in (1, 2, 3, 4):
        assert padovan_conv_binomial(r, 0) == 0
        assert oracles.brute_convolution(pad, r, 0) == 1


def test_padovan_binomial_convolution_validation():
    with pytest.raises(ValueError):
        padovan_conv_binomial(0, 3)
    with pytest.raises(ValueError):
        padovan_conv_binomial(2, -1)


def test_genfam_reduces_to_fundamental_sequence():
    rng = random.Random(8)
    for _ in range(8):
        cs = [rng.randint(-6, 6) for _ in range(rng.randint(1, 4))]
        got = genfam_seq(GenFamilySpec(0, 1, cs), 15)
        assert got.values == invert_transform(cs, 15).values


def test_genfam_example_values():
    assert genfam_seq(GenFamilySpec(0, 1, [1, 1]), 6).values == (1, 1, 2, 3, 5, 8, 13)


def test_genfam_convolution_identity_spot_checks():
    assert genfam_conv_check(GenFamilySpec(1, -1, [1, 1]), 3, 16)
    assert genfam_conv_check(GenFamilySpec(Fraction(1, 2), 2, [1, 0, 1]), 2, 14)
    assert genfam_conv_check(GenFamilySpec(-1, 2, [2, -3]), 4, 12)
    assert genfam_conv_check(GenFamilySpec(2, 0, [1, 1, 1]), 2, 12)


def test_genfam_single_fold_is_trivially_consistent():
    assert genfam_conv_check(GenFamilySpec(1, 1, [3, 1]), 1, 10)


def test_genfam_rejects_zero_folds():
    with pytest.raises(ValueError):
        genfam_conv_check(GenFamilySpec(1, 1, [1]), 0, 5)

"""Randomized self-verification suites behind the CLI ``verify`` command.

Each suite draws random inputs from a seeded generator and checks one family
of exact identities.  A fixed seed gives a fully deterministic run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bell import bell_table, check_key_identity
from .convolve import ConvSpec, GenFamilySpec, conv_bell, conv_direct, conv_recurrence, genfam_conv_check
from .linrec import RecurrenceSpec, decompose, eval_recurrence, reconstruct
from .symfun import elem_from_roots, power_sums_bell, power_sums_direct, power_sums_newton


@dataclass
class SuiteResult:
    suite: str
    trials: int
    passed: bool
    failures: list[str] = field(default_factory=list)


def _rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _rand_int_coeffs(rng: random.Random, max_len: int) -> list[int]:
    return [rng.randint(-9, 9) for _ in range(rng.randint(1, max_len))]


def _suite_lemma_key(rng: random.Random, trials: int) -> SuiteResult:
    """The weighted row identity on full random rational tables, n up to 25."""
    failures = []
    for t in range(trials):
        xs = [_rand_fraction(rng) for _ in range(25)]
        table = bell_table(xs, 25)
        bad = [
            (n, k)
            for n in range(1, 26)
            for k in range(1, n + 1)
            if not check_key_identity(table, n, k)
        ]
        if bad:
            failures.append(f"trial {t}: fails at (n, k) = {bad[0]}")
    return SuiteResult("lemma-key", trials, not failures, failures)


def _suite_prop1(rng: random.Random, trials: int) -> SuiteResult:
    """Decompose-then-reconstruct round trip against the direct recurrence."""
    failures = []
    for t in range(trials):
        d = rng.randint(1, 5)
        spec = RecurrenceSpec(
            [rng.randint(-9, 9) for _ in range(d)],
            [rng.randint(-9, 9) for _ in range(d)],
        )
        direct = eval_recurrence(spec, 60)
        rebuilt = reconstruct(decompose(spec), spec.coeffs, 60)
        if direct.values != rebuilt.values:
            failures.append(f"trial {t}: spec {spec} round trip mismatch")
    return SuiteResult("prop1", trials, not failures, failures)


def _suite_cor3(rng: random.Random, trials: int) -> SuiteResult:
    """Bell-sum convolution against the series power, with random shifts."""
    failures = []
    for t in range(trials):
        spec = ConvSpec(
            _rand_int_coeffs(rng, 5),
            r=rng.randint(1, 4),
            n_max=40,
            delta=rng.randint(0, 3),
        )
        if conv_bell(spec).values != conv_direct(spec).values:
            failures.append(f"trial {t}: {spec} bell/direct mismatch")
    return SuiteResult("cor3", trials, not failures, failures)


def _suite_thm4(rng: random.Random, trials: int) -> SuiteResult:
    """Three-path agreement: direct, Bell sum, and the weighted recurrence."""
    failures = []
    for t in range(trials):
        spec = ConvSpec(_rand_int_coeffs(rng, 5), r=rng.randint(1, 5), n_max=60)
        direct = conv_direct(spec).values
        if conv_bell(spec).values != direct or conv_recurrence(spec).values != direct:
            failures.append(f"trial {t}: {spec} three-path mismatch")
    return SuiteResult("thm4", trials, not failures, failures)


def _suite_genfam(rng: random.Random, trials: int) -> SuiteResult:
    """Convolution identity for the two-parameter binomial family."""
    pool = [Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2)]
    failures = []
    for t in range(trials):
        spec = GenFamilySpec(rng.choice(pool), rng.choice(pool), _rand_int_coeffs(rng, 4))
        r = rng.randint(1, 4)
        if not genfam_conv_check(spec, r, 30):
            failures.append(f"trial {t}: {spec} r={r} identity fails")
    return SuiteResult("genfam", trials, not failures, failures)


def _suite_girard_waring(rng: random.Random, trials: int) -> SuiteResult:
    """Power sums of random rational roots, three routes, plus the linear
    weights lambda_j = (j - d) c_j of the power-sum sequence."""
    failures = []
    for t in range(trials):
        d = rng.randint(1, 6)
        roots = [_rand_fraction(rng) for _ in range(d)]
        e = elem_from_roots(roots)
        direct = power_sums_direct(roots, 40)
        newton = power_sums_newton(e, d, 40)
        bell = power_sums_bell(e, d, 40)
        if direct.values != newton.values or direct.values != bell.values:
            failures.append(f"trial {t}: roots {roots} route mismatch")
            continue
        cs = [(-1) ** (j - 1) * e[j - 1] for j in range(1, d + 1)]
        lam = decompose(RecurrenceSpec(cs, direct.values[:d])).lambdas
        if any(lam[j] != (j - d) * cs[j - 1] for j in range(1, d)):
            failures.append(f"trial {t}: roots {roots} weight identity fails")
    return SuiteResult("girard-waring", trials, not failures, failures)


SUITES = {
    "lemma-key": _suite_lemma_key,
    "prop1": _suite_prop1,
    "cor3": _suite_cor3,
    "thm4": _suite_thm4,
    "genfam": _suite_genfam,
    "girard-waring": _suite_girard_waring,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suites(suite: str, seed: int, trials: int) -> list[SuiteResult]:
    """Run one suite (or all of them) deterministically for the given seed."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite: {suite!r}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    names = list(SUITES) if suite == "all" else [suite]
    results = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        results.append(SUITES[name](rng, trials))
    return results

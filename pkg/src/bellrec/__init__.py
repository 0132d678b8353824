"""Exact-arithmetic linear recurrence sequences in the partial Bell polynomial basis.

The package represents any fixed-coefficient linear recurrence as a short
linear combination of shifts of one fundamental sequence (the coefficient
sequence of 1 / (1 - c1 t - ... - cd t^d)), computes multifold
self-convolutions by three independent exact methods, and machine-verifies
the identities tying the methods together.  All arithmetic is exact:
arbitrary-precision integers, rationals, or rational polynomials.
"""

from .bell import (
    BellTable,
    bell_023,
    bell_123,
    bell_table,
    bell_two_term,
    check_key_identity,
    scale_inputs,
)
from .convolve import (
    ConvSpec,
    GenFamilySpec,
    conv_bell,
    conv_direct,
    conv_recurrence,
    genfam_conv_check,
    genfam_seq,
    padovan_conv_binomial,
)
from .errors import PathMismatchError
from .linrec import (
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
from .ring import (
    Poly,
    RingElem,
    X,
    as_integer,
    binomial,
    factorial,
    gen_binomial,
    poly_eval,
    unify,
)
from .series import TruncSeries, ps_mul, ps_one, ps_pow, ps_recip
from .symfun import (
    SymSpec,
    elem_from_roots,
    power_sums_bell,
    power_sums_direct,
    power_sums_newton,
)
from .verify import SuiteResult, run_suites

__version__ = "0.1.0"

"""Exact Bernoulli numbers, Faulhaber power sums, and a constant-time
integrality test for the average of the first n k-th powers.

Everything is computed in exact arithmetic (Python ints and
``fractions.Fraction``); no value in this package is ever a float.
"""

from .bernoulli import (
    DEFAULT_TABLE_CAP,
    BernoulliTable,
    bernoulli_egf,
    bernoulli_recursive,
    is_regular,
    vsc_denominator,
)
from .exact import binomial, format_rational, is_integer, modpow, reduce_fraction
from .integrality import (
    RULE_EVEN,
    RULE_K1,
    RULE_ODD,
    ResiduePrediction,
    Verdict,
    decide,
    grid,
    predict_residue,
    prime_block_sum,
)
from .powersum import (
    Average,
    InconsistencyError,
    PowerSumQuery,
    mu,
    s_brute,
    s_faulhaber,
    s_mod,
    s_recursive,
)
from .primes import (
    Factorization,
    FactorizationError,
    PrimeSieve,
    factorize,
    sieve,
    vsc_primes,
)

__version__ = "1.0.0"

__all__ = [
    "BernoulliTable",
    "DEFAULT_TABLE_CAP",
    "bernoulli_egf",
    "bernoulli_recursive",
    "is_regular",
    "vsc_denominator",
    "binomial",
    "format_rational",
    "is_integer",
    "modpow",
    "reduce_fraction",
    "RULE_EVEN",
    "RULE_K1",
    "RULE_ODD",
    "ResiduePrediction",
    "Verdict",
    "decide",
    "grid",
    "predict_residue",
    "prime_block_sum",
    "Average",
    "InconsistencyError",
    "PowerSumQuery",
    "mu",
    "s_brute",
    "s_faulhaber",
    "s_mod",
    "s_recursive",
    "Factorization",
    "FactorizationError",
    "PrimeSieve",
    "factorize",
    "sieve",
    "vsc_primes",
]

"""Bernoulli numbers by two independent routes, plus their denominators.

Convention: B_1 = -1/2 throughout.  The two routes share no algorithmic
code, which lets each serve as an oracle for the other:

* ``bernoulli_recursive`` unwinds the binomial recurrence
  B_0 = 1,  (k+1) B_k = -sum_{j=0}^{k-1} C(k+1, j) B_j.

* ``bernoulli_egf`` long-divides the power series x by (e^x - 1) in exact
  rationals and reads B_k off as k! times the k-th quotient coefficient.

``vsc_denominator`` is a third, arithmetic-free route to the denominators
alone: by von Staudt-Clausen, for even k the denominator of B_k in lowest
terms is the (square-free) product of all primes p with (p-1) | k.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import primes

__all__ = [
    "BernoulliTable",
    "bernoulli_recursive",
    "bernoulli_egf",
    "vsc_denominator",
    "is_regular",
    "DEFAULT_TABLE_CAP",
]

# cap on the CLI-facing table index; the recursion is O(K^2) big-rational ops
DEFAULT_TABLE_CAP = 512


@dataclass(frozen=True)
class BernoulliTable:
    """Immutable table of B_0..B_limit with the route that produced it."""

    limit: int
    values: tuple[Fraction, ...]
    route: str

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.limit:
            raise IndexError(f"index {k} outside table range 0..{self.limit}")
        return self.values[k]

    def numerator(self, k: int) -> int:
        return self[k].numerator

    def denominator(self, k: int) -> int:
        return self[k].denominator


# per-process memo, grown on demand; duplicate extension under a race is
# idempotent, the lock just keeps the growth single-threaded
_lock = threading.Lock()
_recursive_values: list[Fraction] = [Fraction(1)]
_egf_coeffs: list[Fraction] = [Fraction(1)]  # coefficients of x/(e^x - 1)


def _extend_recursive(limit: int) -> None:
    vals = _recursive_values
    for k in range(len(vals), limit + 1):
        acc = Fraction(0)
        for j in range(k):
            if vals[j]:
                acc += math.comb(k + 1, j) * vals[j]
        vals.append(-acc / (k + 1))


def _extend_egf(limit: int) -> None:
    # q = x / (e^x - 1) as a truncated series; with d_i = 1/(i+1)! the
    # divisor (e^x - 1)/x has d_0 = 1, so long division reads
    #   q_i = -(d_1 q_{i-1} + ... + d_i q_0)
    q = _egf_coeffs
    if len(q) > limit:
        return
    d = [Fraction(1, math.factorial(j + 1)) for j in range(limit + 1)]
    for i in range(len(q), limit + 1):
        q.append(-sum(d[j] * q[i - j] for j in range(1, i + 1)))


def bernoulli_recursive(limit: int) -> BernoulliTable:
    """Exact table B_0..B_limit from the binomial recurrence."""
    if limit < 0:
        raise ValueError(f"table limit must be >= 0, got {limit}")
    with _lock:
        _extend_recursive(limit)
        vals = tuple(_recursive_values[: limit + 1])
    return BernoulliTable(limit=limit, values=vals, route="recursive")


def bernoulli_egf(limit: int) -> BernoulliTable:
    """Exact table B_0..B_limit from series division of x by (e^x - 1)."""
    if limit < 0:
        raise ValueError(f"table limit must be >= 0, got {limit}")
    with _lock:
        _extend_egf(limit)
        vals = tuple(math.factorial(k) * _egf_coeffs[k] for k in range(limit + 1))
    return BernoulliTable(limit=limit, values=vals, route="egf")


@lru_cache(maxsize=None)
def vsc_denominator(k: int) -> int:
    """Product of all primes p with (p-1) | k, for even k >= 2.

    Equals the denominator of B_k in lowest terms, and is square-free.
    Needs only a sieve up to k + 1, never a Bernoulli table.
    """
    return math.prod(primes.vsc_primes(k))


def is_regular(p: int) -> tuple[bool, tuple[int, ...]]:
    """Kummer regularity of an odd prime p >= 5.

    Returns ``(True, ())`` when p divides none of the numerators of
    B_2, B_4, ..., B_{p-3}, else ``(False, offending_indices)``.
    """
    if p < 5 or not primes.is_prime(p):
        raise ValueError(f"regularity is defined for primes >= 5, got {p}")
    table = bernoulli_recursive(p - 3)
    offending = tuple(k for k in range(2, p - 2, 2) if table.numerator(k) % p == 0)
    return (not offending, offending)

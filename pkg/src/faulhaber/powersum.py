"""Power sums S_k(n) = 1^k + 2^k + ... + n^k by three independent routes.

* ``s_brute``      -- direct accumulation; the ground-truth oracle.
* ``s_faulhaber``  -- the Bernoulli closed form
                      (k+1) S_k(n) = sum_{j=0}^{k} C(k+1, j) B_j (n+1)^{k+1-j},
                      evaluated in exact rationals.
* ``s_recursive``  -- the Ars-Conjectandi triangular system
                      (n+1)^{k+1} = (n+1) + sum_{j=1}^{k} C(k+1, j) S_j(n),
                      solved bottom-up with exact divisions.

``s_mod`` computes S_k(n) mod m without ever building the exact sum, and
``mu`` forms the average S_k(n)/n whose integrality the rest of the
library is about.

Queries are validated once, in ``PowerSumQuery``: the theory here starts
at k = 1, so k = 0 is rejected rather than silently extended, and n >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import bernoulli

__all__ = [
    "PowerSumQuery",
    "Average",
    "InconsistencyError",
    "s_brute",
    "s_faulhaber",
    "s_recursive",
    "s_mod",
    "mu",
]


class InconsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, never bad input."""


@dataclass(frozen=True)
class PowerSumQuery:
    """Validated (k, n) pair for S_k(n); the single k,n sanity gate."""

    k: int
    n: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"exponent k must be >= 1, got {self.k}")
        if self.n < 1:
            raise ValueError(f"upper limit n must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Average:
    """Exact value of S_k(n)/n together with its integrality flag."""

    value: Fraction
    integral: bool


def s_brute(q: PowerSumQuery) -> int:
    """Direct exact summation.

    >>> s_brute(PowerSumQuery(k=2, n=4))
    30
    """
    return sum(j**q.k for j in range(1, q.n + 1))


def s_faulhaber(q: PowerSumQuery, table: bernoulli.BernoulliTable | None = None) -> int:
    """Evaluate the Bernoulli closed form exactly and return the integer sum.

    The accumulation stays rational until the final division by k + 1; the
    exactness check at the end doubles as a self-test of the table.
    """
    k, n = q.k, q.n
    if table is None:
        table = bernoulli.bernoulli_recursive(k)
    elif table.limit < k:
        raise ValueError(f"table covers 0..{table.limit}, need index {k}")
    acc = Fraction(0)
    power = 1  # (n+1)^(k+1-j), built up as j descends from k to 0
    for j in range(k, -1, -1):
        power *= n + 1
        bj = table[j]
        if bj:
            acc += math.comb(k + 1, j) * bj * power
    s = acc / (k + 1)
    if s.denominator != 1:
        raise InconsistencyError(f"closed form gave non-integer {s} for {q}")
    return s.numerator


def s_recursive(kmax: int, n: int) -> list[int]:
    """All of S_1(n)..S_kmax(n) from the triangular recurrence.

    Each division in the back-substitution is exact; a nonzero remainder
    would mean a bug and is surfaced loudly.
    """
    PowerSumQuery(k=kmax, n=n)
    sums: list[int] = []
    for k in range(1, kmax + 1):
        acc = (n + 1) ** (k + 1) - (n + 1)
        for j in range(1, k):
            acc -= math.comb(k + 1, j) * sums[j - 1]
        s, rem = divmod(acc, k + 1)  # C(k+1, k) = k+1
        if rem:
            raise InconsistencyError(f"recurrence left remainder {rem} at k={k}, n={n}")
        sums.append(s)
    return sums


def s_mod(q: PowerSumQuery, m: int) -> int:
    """S_k(n) mod m by modular summation; never builds the exact sum."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    k = q.k
    return sum(pow(j, k, m) for j in range(1, q.n + 1)) % m


def mu(q: PowerSumQuery) -> Average:
    """The average of the first n k-th powers, exactly.

    >>> mu(PowerSumQuery(k=3, n=2)).value
    Fraction(9, 2)
    """
    value = Fraction(s_faulhaber(q), q.n)
    return Average(value=value, integral=value.denominator == 1)

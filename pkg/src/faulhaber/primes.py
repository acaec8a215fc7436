"""Prime generation, the (p-1) | k prime filter, and trial-division factoring.

The filter is the workhorse of the whole library: for even k, the primes p
with (p-1) | k are exactly the primes appearing in the denominator of the
k-th Bernoulli number (von Staudt-Clausen), and they drive the fast
integrality test.  Since (p-1) | k forces p <= k + 1, a sieve up to k + 1
is always enough.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "PrimeSieve",
    "Factorization",
    "FactorizationError",
    "sieve",
    "is_prime",
    "vsc_primes",
    "factorize",
    "DEFAULT_FACTOR_BOUND",
]

DEFAULT_FACTOR_BOUND = 10**6


class FactorizationError(Exception):
    """Raised when a cofactor survives the trial-division budget unfactored."""


@dataclass(frozen=True)
class PrimeSieve:
    """Eratosthenes primality table for 0..limit, immutable once built."""

    limit: int
    flags: bytes

    def is_prime(self, n: int) -> bool:
        if n < 0 or n > self.limit:
            raise ValueError(f"{n} is outside the sieved range 0..{self.limit}")
        return bool(self.flags[n])

    def primes(self) -> list[int]:
        return [i for i, f in enumerate(self.flags) if f]

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.limit and bool(self.flags[n])


@dataclass(frozen=True)
class Factorization:
    """Complete factorization as (prime, exponent) pairs, primes ascending."""

    factors: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return math.prod(p**a for p, a in self.factors)

    def exponent_of(self, p: int) -> int:
        for q, a in self.factors:
            if q == p:
                return a
        return 0

    def __iter__(self):
        return iter(self.factors)


def sieve(limit: int) -> PrimeSieve:
    """Sieve of Eratosthenes up to and including ``limit`` (must be >= 2)."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(flags[p * p :: p]))
    return PrimeSieve(limit=limit, flags=bytes(flags))


def is_prime(n: int) -> bool:
    """Trial-division primality check; exact for any nonnegative int."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vsc_primes(k: int) -> list[int]:
    """All primes p with (p-1) | k, ascending, for even k >= 2.

    Always contains 2 and 3, and nothing above k + 1.
    """
    if k < 2 or k % 2 != 0:
        raise ValueError(f"k must be a positive even integer, got {k}")
    return [p for p in sieve(k + 1).primes() if k % (p - 1) == 0]


def factorize(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> Factorization:
    """Factor n >= 2 by trial division with divisors capped at ``bound``.

    Raises ``FactorizationError`` once a cofactor cannot be certified within
    the budget -- never returns a wrong or partial answer.
    """
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    factors: list[tuple[int, int]] = []
    r = n
    d = 2
    while d * d <= r:
        if d > bound:
            # all divisors <= bound are gone, so r >= bound^2 and composite-or-unknown
            raise FactorizationError(
                f"cofactor {r} of {n} exceeds the trial-division bound {bound}"
            )
        if r % d == 0:
            a = 0
            while r % d == 0:
                r //= d
                a += 1
            factors.append((d, a))
        d += 1 if d == 2 else 2
    if r > 1:
        factors.append((r, 1))
    return Factorization(factors=tuple(factors))

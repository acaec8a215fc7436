"""Decides whether the average of the first n k-th powers is an integer.

The decision never sums anything and never factors n:

* k = 1:        integral  <=>  n is odd.
* odd k >= 3:   integral  <=>  n is not congruent to 2 mod 4.
* even k:       integral  <=>  gcd(n, D) = 1, where D is the square-free
                product of the primes p with (p-1) | k -- the denominator
                of the k-th Bernoulli number.  One gcd against a
                precomputed modulus decides any n, however large.

Every negative verdict carries a machine-checkable witness: the offending
residue for the odd rules, or the set of primes dividing both n and D for
the even rule (recovered by trial-dividing the gcd by the few candidate
primes, which is exact because D is square-free).

``prime_block_sum`` and ``predict_residue`` expose the congruences the
even rule rests on, so the theory behind the verdict can be checked
directly against modular summation:

* sum_{m=1}^{p} m^k is -1 mod p when (p-1) | k, else 0 mod p.
* for even k and p^a exactly dividing n:
      S_k(n) mod p^a  =  0             when (p-1) does not divide k,
      S_k(n) mod p^a  =  -(n/p) mod p^a  when (p-1) | k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import bernoulli, primes

__all__ = [
    "RULE_K1",
    "RULE_ODD",
    "RULE_EVEN",
    "Verdict",
    "ResiduePrediction",
    "decide",
    "prime_block_sum",
    "predict_residue",
    "grid",
]

RULE_K1 = "k=1"
RULE_ODD = "odd-k"
RULE_EVEN = "even-k"


@dataclass(frozen=True)
class Verdict:
    """Integrality decision plus the obstruction that justifies a "no".

    ``witness_primes`` is nonempty exactly for even-k failures; for the
    odd rules ``witness_residue`` holds n mod 4 (odd k >= 3) or n mod 2
    (k = 1).  An integral verdict carries no witness.
    """

    integral: bool
    rule: str
    witness_primes: tuple[int, ...] = ()
    witness_residue: int | None = None

    def witness_text(self) -> str:
        if self.integral:
            return ""
        if self.rule == RULE_EVEN:
            return "witness primes " + ",".join(str(p) for p in self.witness_primes)
        if self.rule == RULE_ODD:
            return "n ≡ 2 (mod 4)"
        return "n even"


@dataclass(frozen=True)
class ResiduePrediction:
    """Predicted S_k(n) mod p^a for a prime p with p^a exactly dividing n."""

    p: int
    a: int
    predicted: int

    @property
    def modulus(self) -> int:
        return self.p**self.a


def decide(k: int, n: int) -> Verdict:
    """Integrality of the average of the first n k-th powers, with witness.

    Cost after the per-k precomputation: one gcd, no factorization of n.
    """
    if k < 1:
        raise ValueError(f"exponent k must be >= 1, got {k}")
    if n < 1:
        raise ValueError(f"upper limit n must be >= 1, got {n}")
    if k == 1:
        if n % 2 == 1:
            return Verdict(integral=True, rule=RULE_K1)
        return Verdict(integral=False, rule=RULE_K1, witness_residue=n % 2)
    if k % 2 == 1:
        if n % 4 != 2:
            return Verdict(integral=True, rule=RULE_ODD)
        return Verdict(integral=False, rule=RULE_ODD, witness_residue=n % 4)
    g = math.gcd(n, bernoulli.vsc_denominator(k))
    if g == 1:
        return Verdict(integral=True, rule=RULE_EVEN)
    # g divides the square-free modulus, so one pass over its prime
    # candidates recovers the witness set exactly
    witness = tuple(p for p in primes.vsc_primes(k) if g % p == 0)
    return Verdict(integral=False, rule=RULE_EVEN, witness_primes=witness)


def prime_block_sum(p: int, k: int) -> int:
    """sum_{m=1}^{p} m^k mod p, computed directly by modular summation.

    This is the checkable side of the congruence the even rule rests on:
    the result is p - 1 when (p-1) | k and 0 otherwise.
    """
    if k < 1:
        raise ValueError(f"exponent k must be >= 1, got {k}")
    if not primes.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    return sum(pow(m, k, p) for m in range(1, p + 1)) % p


def predict_residue(k: int, n: int, p: int) -> ResiduePrediction:
    """Predicted S_k(n) mod p^a for even k and a prime p dividing n.

    The caller can cross-check the prediction against modular summation;
    together the two branches cover every prime-power divisor of n.
    """
    if k < 1 or k % 2 != 0:
        raise ValueError(f"prediction applies to even k >= 2, got {k}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not primes.is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n % p != 0:
        raise ValueError(f"{p} does not divide {n}")
    a = 0
    rest = n
    while rest % p == 0:
        rest //= p
        a += 1
    pa = p**a
    if k % (p - 1) == 0:
        predicted = (-(n // p)) % pa
    else:
        predicted = 0
    return ResiduePrediction(p=p, a=a, predicted=predicted)


def grid(kmax: int, nmax: int) -> list[list[Verdict]]:
    """Verdicts for every 1 <= k <= kmax, 1 <= n <= nmax, row-per-k."""
    if kmax < 1 or nmax < 1:
        raise ValueError("grid bounds must be >= 1")
    return [[decide(k, n) for n in range(1, nmax + 1)] for k in range(1, kmax + 1)]

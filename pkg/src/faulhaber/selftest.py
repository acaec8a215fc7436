"""Runnable invariant suite: every library-level property, at full ranges.

Each group re-derives one invariant from scratch and raises
``InvariantViolation`` naming the first counterexample.  ``quick=True``
shrinks the ranges (same checks, smaller grids) for fast smoke runs.

The groups deliberately cross module boundaries -- e.g. the Bernoulli
denominators are recomputed from the prime filter, and the theorem-based
integrality verdicts are replayed against modular summation -- so a fault
injected into any one route is caught by its counterpart.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import bernoulli, integrality, powersum, primes
from .exact import binomial, modpow, reduce_fraction
from .powersum import PowerSumQuery

__all__ = ["InvariantViolation", "GroupResult", "GROUPS", "run_groups"]


class InvariantViolation(Exception):
    """An invariant group failed; the message carries the counterexample."""


@dataclass(frozen=True)
class GroupResult:
    name: str
    passed: bool
    detail: str
    elapsed: float


def _fail(msg: str) -> None:
    raise InvariantViolation(msg)


# --- exact arithmetic -------------------------------------------------


def _rational_canonical(quick: bool) -> None:
    lim = 12 if quick else 24
    for num in range(-lim, lim + 1):
        for den in range(-lim, lim + 1):
            if den == 0:
                continue
            q = reduce_fraction(num, den)
            if q.denominator <= 0 or math.gcd(abs(q.numerator), q.denominator) != 1:
                _fail(f"non-canonical fraction for ({num}, {den}): {q!r}")


def _pascal_identity(quick: bool) -> None:
    top = 16 if quick else 64
    for n in range(1, top + 1):
        for j in range(1, n + 1):
            if binomial(n, j) != binomial(n - 1, j - 1) + binomial(n - 1, j):
                _fail(f"Pascal identity broken at ({n}, {j})")


def _modpow_exact(quick: bool) -> None:
    blim, mlim = (8, 40) if quick else (12, 100)
    for b in range(blim + 1):
        for e in range(blim + 1):
            for m in range(1, mlim + 1):
                if modpow(b, e, m) != (b**e) % m:
                    _fail(f"modpow({b}, {e}, {m}) != exact residue")


# --- primes -----------------------------------------------------------


def _vsc_square_free(quick: bool) -> None:
    top = 60 if quick else 200
    for k in range(2, top + 1, 2):
        ps = primes.vsc_primes(k)
        if any(a >= b for a, b in zip(ps, ps[1:])):
            _fail(f"repeated or unsorted prime in filter output for k={k}: {ps}")
        if ps[:2] != [2, 3]:
            _fail(f"prime filter for k={k} must start with 2, 3: {ps}")


def _vsc_monotone(quick: bool) -> None:
    top, mtop = (20, 3) if quick else (40, 6)
    for k in range(2, top + 1, 2):
        base = set(primes.vsc_primes(k))
        for m in range(1, mtop + 1):
            if not base <= set(primes.vsc_primes(m * k)):
                _fail(f"prime filter not monotone: k={k}, m={m}")


def _factorize_roundtrip(quick: bool) -> None:
    top = 2000 if quick else 10**4
    for n in range(2, top + 1):
        f = primes.factorize(n)
        if f.value != n:
            _fail(f"factorization of {n} reassembles to {f.value}")
        ps = [p for p, _ in f]
        if ps != sorted(set(ps)):
            _fail(f"factor list for {n} not strictly ascending: {ps}")


# --- bernoulli --------------------------------------------------------


def _route_equivalence(quick: bool) -> None:
    top = 16 if quick else 40
    rec = bernoulli.bernoulli_recursive(top)
    egf = bernoulli.bernoulli_egf(top)
    for k in range(top + 1):
        if rec[k] != egf[k]:
            _fail(f"routes disagree at index {k}: {rec[k]} vs {egf[k]}")


def _odd_vanishing(quick: bool) -> None:
    mtop = 10 if quick else 24
    rec = bernoulli.bernoulli_recursive(2 * mtop + 1)
    egf = bernoulli.bernoulli_egf(2 * mtop + 1)
    for m in range(1, mtop + 1):
        if rec[2 * m + 1] != 0 or egf[2 * m + 1] != 0:
            _fail(f"odd-index value B_{2 * m + 1} is nonzero")


def _vsc_consistency(quick: bool) -> None:
    top = 30 if quick else 60
    table = bernoulli.bernoulli_recursive(top)
    for k in range(2, top + 1, 2):
        d = bernoulli.vsc_denominator(k)
        if table.denominator(k) != d:
            _fail(f"denominator of B_{k} is {table.denominator(k)}, prime product {d}")
        if math.gcd(table.numerator(k), d) != 1:
            _fail(f"numerator of B_{k} shares a factor with its denominator")


def _irregular_scan(quick: bool) -> None:
    top, expected = (50, {37}) if quick else (100, {37, 59, 67})
    found = set()
    for p in primes.sieve(top - 1).primes():
        if p < 5:
            continue
        regular, _ = bernoulli.is_regular(p)
        if not regular:
            found.add(p)
    if found != expected:
        _fail(f"irregular primes below {top}: {sorted(found)}, expected {sorted(expected)}")


# --- power sums -------------------------------------------------------


def _three_route_agreement(quick: bool) -> None:
    ktop, ntop = (8, 20) if quick else (12, 60)
    table = bernoulli.bernoulli_recursive(ktop)
    for n in range(1, ntop + 1):
        rec = powersum.s_recursive(ktop, n)
        for k in range(1, ktop + 1):
            q = PowerSumQuery(k=k, n=n)
            b = powersum.s_brute(q)
            f = powersum.s_faulhaber(q, table)
            if not (b == f == rec[k - 1]):
                _fail(f"routes disagree at k={k}, n={n}: {b}, {f}, {rec[k - 1]}")


def _telescoping(quick: bool) -> None:
    ktop, ntop = (6, 20) if quick else (10, 50)
    for k in range(1, ktop + 1):
        prev = powersum.s_brute(PowerSumQuery(k=k, n=1))
        for n in range(2, ntop + 1):
            cur = powersum.s_brute(PowerSumQuery(k=k, n=n))
            if cur - prev != n**k:
                _fail(f"telescoping broken at k={k}, n={n}")
            prev = cur


def _modular_consistency(quick: bool) -> None:
    ktop, ntop, mtop = (5, 20, 12) if quick else (8, 40, 30)
    for k in range(1, ktop + 1):
        for n in range(1, ntop + 1):
            q = PowerSumQuery(k=k, n=n)
            exact = powersum.s_brute(q)
            for m in range(2, mtop + 1):
                if powersum.s_mod(q, m) != exact % m:
                    _fail(f"modular sum wrong at k={k}, n={n}, m={m}")


def _closed_form_spot(quick: bool) -> None:
    ntop = 12 if quick else 30
    for n in range(1, ntop + 1):
        m2 = powersum.mu(PowerSumQuery(k=2, n=n)).value
        if m2 * 6 != (n + 1) * (2 * n + 1):
            _fail(f"quadratic average closed form fails at n={n}")
        m4 = powersum.mu(PowerSumQuery(k=4, n=n)).value
        if m4 * 30 != (n + 1) * (2 * n + 1) * (3 * n * n + 3 * n - 1):
            _fail(f"quartic average closed form fails at n={n}")


def _average_iff_zero_residue(quick: bool) -> None:
    ktop, ntop = (6, 24) if quick else (12, 60)
    for k in range(1, ktop + 1):
        for n in range(1, ntop + 1):
            q = PowerSumQuery(k=k, n=n)
            if powersum.mu(q).integral != (powersum.s_mod(q, n) == 0):
                _fail(f"integrality flag disagrees with residue at k={k}, n={n}")


# --- integrality ------------------------------------------------------


def _theorem_vs_oracle(quick: bool) -> None:
    ktop, ntop = (10, 100) if quick else (30, 500)
    for k in range(1, ktop + 1):
        for n in range(1, ntop + 1):
            q = PowerSumQuery(k=k, n=n)
            by_rule = integrality.decide(k, n).integral
            by_residue = powersum.s_mod(q, n) == 0
            by_average = powersum.mu(q).integral
            if not (by_rule == by_residue == by_average):
                _fail(
                    f"verdict disagreement at k={k}, n={n}: "
                    f"rule={by_rule}, residue={by_residue}, average={by_average}"
                )


def _block_sum_residues(quick: bool) -> None:
    ptop, ktop = (23, 24) if quick else (47, 50)
    for p in primes.sieve(ptop).primes():
        for k in range(1, ktop + 1):
            got = integrality.prime_block_sum(p, k)
            want = p - 1 if k % (p - 1) == 0 else 0
            if got != want:
                _fail(f"block sum at p={p}, k={k} is {got}, expected {want}")


def _lemma_zero_residue(quick: bool) -> None:
    ktop = 10 if quick else 20
    for p in (2, 3, 5):
        for a in (1, 2, 3):
            for k in range(1, ktop + 1):
                if k % (p - 1) == 0:
                    continue
                pa = p**a
                if powersum.s_mod(PowerSumQuery(k=k, n=pa), pa) != 0:
                    _fail(f"prime-power block sum nonzero at p={p}, a={a}, k={k}")


def _residue_prediction(quick: bool) -> None:
    ktop, ntop = (6, 80) if quick else (12, 200)
    for n in range(2, ntop + 1):
        for p, _a in primes.factorize(n):
            for k in range(2, ktop + 1, 2):
                pred = integrality.predict_residue(k, n, p)
                got = powersum.s_mod(PowerSumQuery(k=k, n=n), pred.modulus)
                if got != pred.predicted:
                    _fail(
                        f"residue prediction wrong at k={k}, n={n}, p={p}: "
                        f"predicted {pred.predicted}, got {got}"
                    )


def _denominator_equivalence(quick: bool) -> None:
    ktop, ntop = (24, 60) if quick else (40, 200)
    by_den: dict[int, list[int]] = {}
    for k in range(2, ktop + 1, 2):
        by_den.setdefault(bernoulli.vsc_denominator(k), []).append(k)
    for den, ks in by_den.items():
        first = ks[0]
        for k in ks[1:]:
            for n in range(1, ntop + 1):
                if integrality.decide(first, n) != integrality.decide(k, n):
                    _fail(
                        f"k={first} and k={k} share denominator {den} "
                        f"but disagree at n={n}"
                    )


def _periodicity(quick: bool) -> None:
    ks = (2, 4) if quick else (2, 4, 6, 8, 10, 12)
    ntop = 30 if quick else 100
    for k in ks:
        period = 4 * bernoulli.vsc_denominator(k)
        for n in range(1, ntop + 1):
            if integrality.decide(k, n) != integrality.decide(k, n + period):
                _fail(f"verdict not {period}-periodic at k={k}, n={n}")


GROUPS: list[tuple[str, Callable[[bool], None]]] = [
    ("rational-canonical", _rational_canonical),
    ("pascal-identity", _pascal_identity),
    ("modpow-exact", _modpow_exact),
    ("vsc-square-free", _vsc_square_free),
    ("vsc-monotone", _vsc_monotone),
    ("factorize-roundtrip", _factorize_roundtrip),
    ("route-equivalence", _route_equivalence),
    ("odd-vanishing", _odd_vanishing),
    ("vsc-consistency", _vsc_consistency),
    ("irregular-scan", _irregular_scan),
    ("three-route-agreement", _three_route_agreement),
    ("telescoping", _telescoping),
    ("modular-consistency", _modular_consistency),
    ("closed-form-spot", _closed_form_spot),
    ("average-iff-zero-residue", _average_iff_zero_residue),
    ("theorem-vs-oracle", _theorem_vs_oracle),
    ("block-sum-residues", _block_sum_residues),
    ("lemma-zero-residue", _lemma_zero_residue),
    ("residue-prediction", _residue_prediction),
    ("denominator-equivalence", _denominator_equivalence),
    ("periodicity", _periodicity),
]


def run_groups(quick: bool = False) -> list[GroupResult]:
    """Run every invariant group; failures are collected, not raised."""
    results = []
    for name, check in GROUPS:
        start = time.perf_counter()
        try:
            check(quick)
            results.append(GroupResult(name, True, "", time.perf_counter() - start))
        except InvariantViolation as exc:
            results.append(GroupResult(name, False, str(exc), time.perf_counter() - start))
    return results

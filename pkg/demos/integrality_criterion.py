#!/usr/bin/env python3
"""Walkthrough: deciding whether the average of the first n k-th powers
is an integer -- instantly, with a checkable witness -- and the
congruences that make the rule work.

Run:  python3 demos/integrality_criterion.py
"""

from faulhaber import (
    PowerSumQuery,
    decide,
    factorize,
    grid,
    predict_residue,
    prime_block_sum,
    s_mod,
    vsc_denominator,
)

print("The verdict grid")
print("----------------")
KMAX, NMAX = 8, 20
rows = grid(KMAX, NMAX)
print("     " + " ".join(f"{n:>2}" for n in range(1, NMAX + 1)))
for k, row in enumerate(rows, start=1):
    cells = " ".join(" +" if v.integral else " ." for v in row)
    print(f"k={k:<2} {cells}")
print()
print("k=1 alternates with parity; odd k >= 3 fails only at n = 2 mod 4;")
print("even k fails exactly at multiples of the primes in its denominator.")
print()

print("Witnesses are machine-checkable")
print("-------------------------------")
for k, n in [(1, 4), (3, 6), (2, 6), (4, 7), (6, 35), (1000, 10**9)]:
    v = decide(k, n)
    text = "integral" if v.integral else f"not integral ({v.witness_text()})"
    print(f"  k={k:<5} n={n:<11} {text}")
print()
print("The last verdict never factored n: one gcd against")
print(f"{vsc_denominator(1000)} (the k=1000 denominator) settles it.")
print()

print("Why it works, part 1: full blocks mod p")
print("---------------------------------------")
print("Summing m^k over one block 1..p collapses mod p to -1 or 0,")
print("depending on whether (p-1) divides k:")
for p in (5, 7):
    for k in (3, 4, 6):
        r = prime_block_sum(p, k)
        tag = "-1 branch" if r == p - 1 else " 0 branch"
        print(f"  p={p} k={k}: block sum = {r}  ({tag})")
print()

print("Why it works, part 2: residues at prime powers")
print("----------------------------------------------")
print("For even k and p^a exactly dividing n, the residue of the sum")
print("mod p^a is forced -- and modular summation confirms it:")
for k, n in [(2, 4), (2, 9), (4, 9), (2, 25), (6, 72)]:
    for p, _ in factorize(n):
        pred = predict_residue(k, n, p)
        got = s_mod(PowerSumQuery(k=k, n=n), pred.modulus)
        assert got == pred.predicted
        print(f"  k={k} n={n:<3} p={p}: predicted {pred.predicted} mod {pred.modulus}, summation gives {got}")

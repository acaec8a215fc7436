"""Wall-clock comparison: theorem-based verdict vs modular / exact summation.

Each cell times three ways of answering "is the average of the first n
k-th powers an integer?":

* ``decide``  -- one gcd against a precomputed prime product,
* ``s_mod``   -- modular summation of n terms,
* ``s_brute`` -- the exact sum, then a divisibility check.

The summation methods run under a per-cell time budget (default 5 s) and
are marked infeasible instead of hanging; an estimated total time is
extrapolated from the progress made, so the report still shows the gap.
Whenever two methods both finish a cell, their verdicts are cross-checked.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import integrality
from .powersum import InconsistencyError

__all__ = ["BenchCell", "DEFAULT_CELLS", "DEFAULT_BUDGET_MS", "run_bench"]

DEFAULT_CELLS: tuple[tuple[int, int], ...] = (
    (2, 100),
    (8, 10_000),
    (20, 1_000_000),
    (1000, 1_000_000_000),
)
DEFAULT_BUDGET_MS = 5000.0

_CHUNK = 2048  # iterations between deadline checks


@dataclass(frozen=True)
class BenchCell:
    k: int
    n: int
    method: str  # "decide" | "s_mod" | "s_brute"
    status: str  # "ok" | "infeasible"
    elapsed_ms: float
    integral: bool | None  # None when the method did not finish
    est_ms: float | None  # extrapolated total when infeasible


def _budgeted_mod_sum(k: int, n: int, m: int, budget_s: float) -> tuple[int | None, int]:
    """S_k(n) mod m with a deadline; returns (residue | None, terms done)."""
    deadline = time.perf_counter() + budget_s
    total = 0
    j = 1
    while j <= n:
        hi = min(n, j + _CHUNK - 1)
        total = (total + sum(pow(x, k, m) for x in range(j, hi + 1))) % m
        j = hi + 1
        if time.perf_counter() > deadline:
            return None, j - 1
    return total, n


def _budgeted_exact_sum(k: int, n: int, budget_s: float) -> tuple[int | None, int]:
    """Exact S_k(n) with a deadline; returns (sum | None, terms done)."""
    deadline = time.perf_counter() + budget_s
    total = 0
    j = 1
    while j <= n:
        hi = min(n, j + _CHUNK - 1)
        total += sum(x**k for x in range(j, hi + 1))
        j = hi + 1
        if time.perf_counter() > deadline:
            return None, j - 1
    return total, n


def _cell(k: int, n: int, method: str, elapsed: float, integral: bool | None, done: int) -> BenchCell:
    if integral is None:
        est = elapsed * 1000.0 * (n / max(done, 1))
        return BenchCell(k, n, method, "infeasible", round(elapsed * 1000.0, 3), None, round(est, 3))
    return BenchCell(k, n, method, "ok", round(elapsed * 1000.0, 3), integral, None)


def run_bench(
    cells: tuple[tuple[int, int], ...] = DEFAULT_CELLS,
    budget_ms: float = DEFAULT_BUDGET_MS,
) -> list[BenchCell]:
    """Time every method on every cell; raises on verdict disagreement."""
    budget_s = budget_ms / 1000.0
    out: list[BenchCell] = []
    for k, n in cells:
        start = time.perf_counter()
        verdict = integrality.decide(k, n)
        out.append(_cell(k, n, "decide", time.perf_counter() - start, verdict.integral, n))

        start = time.perf_counter()
        residue, done = _budgeted_mod_sum(k, n, n, budget_s)
        mod_integral = None if residue is None else residue == 0
        out.append(_cell(k, n, "s_mod", time.perf_counter() - start, mod_integral, done))

        start = time.perf_counter()
        total, done = _budgeted_exact_sum(k, n, budget_s)
        brute_integral = None if total is None else total % n == 0
        out.append(_cell(k, n, "s_brute", time.perf_counter() - start, brute_integral, done))

        for finished in (mod_integral, brute_integral):
            if finished is not None and finished != verdict.integral:
                raise InconsistencyError(
                    f"summation verdict {finished} contradicts rule verdict "
                    f"{verdict.integral} at k={k}, n={n}"
                )
    return out


def speedup_estimate(results: list[BenchCell]) -> tuple[int, int, float] | None:
    """(k, n, ratio) of s_mod cost to decide cost at the largest cell timed."""
    best = None
    by_key: dict[tuple[int, int], dict[str, BenchCell]] = {}
    for c in results:
        by_key.setdefault((c.k, c.n), {})[c.method] = c
    for (k, n), methods in by_key.items():
        dec, smod = methods.get("decide"), methods.get("s_mod")
        if dec is None or smod is None:
            continue
        cost = smod.elapsed_ms if smod.status == "ok" else (smod.est_ms or 0.0)
        ratio = cost / max(dec.elapsed_ms, 1e-3)
        if best is None or n > best[1]:
            best = (k, n, round(ratio, 1))
    return best

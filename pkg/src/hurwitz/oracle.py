"""Brute-force Hurwitz numbers by exhaustive monodromy enumeration.

``H_g(n | b)`` equals ``1/n!`` times the number of tuples
``(sigma, tau_1, ..., tau_r)`` with ``sigma`` an n-cycle, each ``tau_i`` a
transposition and ``tau_r o ... o tau_1 o sigma`` of cycle type ``b``, where
``r = 2g + q - 1``. All n-cycles are conjugate and contribute equally, so we
fix ``sigma = (1 2 ... n)``, count transposition tuples only, and divide
by ``n``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import HurwitzKey, Partition, num_branch_points, partitions
from .permgroup import Permutation, all_ncycles, canonical_ncycle, cycle_lengths

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**8


class InfeasibleError(RuntimeError):
    """The enumeration would exceed the configured tuple budget."""

    def __init__(self, key, required: int, budget: int):
        self.key = key
        self.required = required
        self.budget = budget
        super().__init__(
            f"oracle infeasible for {key}: {required} tuple evaluations required, "
            f"budget is {budget}"
        )


def required_tuples(n: int, r: int) -> int:
    """Number of transposition tuples visited for fixed sigma."""
    return (n * (n - 1) // 2) ** r


def _count_subtree(start: tuple[int, ...], r: int, target: tuple[int, ...],
                   firsts: Sequence[int] | None = None) -> int:
    """Count transposition r-tuples taking the 0-based image ``start`` to ``target``.

    Depth-first walk over the odometer of transposition indices, keeping the
    prefix product so each step is one composition. When ``firsts`` is given
    only those values of the first index are visited.
    """
    n = len(start)
    pairs = list(combinations(range(n), 2))
    if r == 0:
        return int(cycle_lengths(start) == target)
    if not pairs:
        return 0

    # Cached on the image tuple; both caches stay small for S_n with n <= 8.
    compose_cache: dict[tuple[tuple[int, ...], int], tuple[int, ...]] = {}
    type_cache: dict[tuple[int, ...], bool] = {}

    def step(img, t):
        key = (img, t)
        out = compose_cache.get(key)
        if out is None:
            a, b = pairs[t]
            # tau o P with tau = (a b): swap the values a and b in P's images
            out = tuple(b if x == a else a if x == b else x for x in img)
            compose_cache[key] = out
        return out

    def hits(img):
        h = type_cache.get(img)
        if h is None:
            h = cycle_lengths(img) == target
            type_cache[img] = h
        return h

    npairs = len(pairs)

    def walk(img, depth):
        if depth == 1:
            return sum(1 for t in range(npairs) if hits(step(img, t)))
        return sum(walk(step(img, t), depth - 1) for t in range(npairs))

    first_range = range(npairs) if firsts is None else firsts
    if r == 1:
        return sum(1 for t in first_range if hits(step(start, t)))
    return sum(walk(step(start, t), r - 1) for t in first_range)


def _worker(args):
    start, r, target, firsts = args
    return _count_subtree(start, r, target, firsts)


def count_tuples(sigma: Permutation, r: int, target: Partition, workers: int = 1) -> int:
    """Number of r-tuples of transpositions with ``tau_r o ... o tau_1 o sigma`` of type ``target``.

    Accepts any ``r`` (not only ``2g + q - 1``), so wrong-parity inputs give 0.
    With ``workers > 1`` the first transposition index is split across
    processes; the sum is exact and independent of the split.
    """
    start = tuple(sigma(i) - 1 for i in range(1, sigma.n + 1))
    tgt = target.parts
    if target.degree() != sigma.n:
        return 0
    npairs = sigma.n * (sigma.n - 1) // 2
    if workers <= 1 or r == 0 or npairs < 2:
        return _count_subtree(start, r, tgt)
    chunks = [list(range(w, npairs, workers)) for w in range(min(workers, npairs))]
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        return sum(pool.map(_worker, [(start, r, tgt, c) for c in chunks]))


def count_tuples_all_cycles(n: int, r: int, target: Partition) -> int:
    """Same count summed over every n-cycle sigma (no conjugation reduction)."""
    return sum(count_tuples(s, r, target) for s in all_ncycles(n))


def oracle_hurwitz(g: int, b: Partition, budget: int = DEFAULT_BUDGET, workers: int = 1) -> Fraction:
    """``H_g(n | b)`` by enumeration.

    Raises :class:`InfeasibleError` when ``(n(n-1)/2)**r`` exceeds ``budget``.
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    n = b.degree()
    r = num_branch_points(g, b)
    need = required_tuples(n, r)
    if need > budget:
        raise InfeasibleError(HurwitzKey(g, b), need, budget)
    count = count_tuples(canonical_ncycle(n), r, b, workers=workers)
    return Fraction(count, n)


def oracle_table(max_n: int, max_g: int, budget: int = DEFAULT_BUDGET, workers: int = 1):
    """Oracle values for every partition of n <= max_n and g <= max_g that fits the budget.

    Returns ``(table, skipped)`` where ``skipped`` lists the keys left out
    because of the budget.
    """
    table: dict[HurwitzKey, Fraction] = {}
    skipped: list[HurwitzKey] = []
    for n in range(1, max_n + 1):
        for b in partitions(n):
            for g in range(max_g + 1):
                key = HurwitzKey(g, b)
                try:
                    table[key] = oracle_hurwitz(g, b, budget, workers)
                except InfeasibleError as exc:
                    log.info("%s", exc)
                    skipped.append(key)
    return table, skipped

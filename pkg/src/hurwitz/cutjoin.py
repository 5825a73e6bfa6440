"""Memoized cut-and-join recursion for ``H'_g(n | b) = |aut(b)| * H_g(n | b)``.

For ``r = 2g + q - 1 > 0``::

    H'_g(b) = 1/2 * sum_i sum_{c + d = b_i} c * d * H'_{g-1}(b - b_i + {c, d})
            + 1/2 * sum_{i != j} (b_i + b_j) * H'_g(b - b_i - b_j + {b_i + b_j})

Both sums run over ordered choices (ordered splits ``(c, d)``, ordered index
pairs ``(i, j)``). The base case ``r = 0`` forces ``g = 0, b = (n)`` and gives
``1/n``. Every recursive call lowers ``r`` by one.
"""

from __future__ import annotations

import threading
from fractions import Fraction

from .core import (
    HurwitzKey,
    Partition,
    aut_order,
    format_rational,
    num_branch_points,
    partitions,
    to_hat,
)


class CutJoin:
    """A memo table of ``H'`` values keyed by :class:`HurwitzKey`.

    Values are deterministic, so concurrent writers of one key always agree;
    the lock only guards the dict against interleaved resizes.
    """

    def __init__(self):
        self._memo: dict[HurwitzKey, Fraction] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._memo)

    def __contains__(self, key) -> bool:
        return key in self._memo

    def cached(self) -> dict[HurwitzKey, Fraction]:
        with self._lock:
            return dict(self._memo)

    def hprime(self, g: int, b: Partition) -> Fraction:
        if g < 0:
            return Fraction(0)
        key = HurwitzKey(g, b)
        val = self._memo.get(key)
        if val is None:
            val = self._compute(g, b)
            with self._lock:
                val = self._memo.setdefault(key, val)
        return val

    def _compute(self, g: int, b: Partition) -> Fraction:
        parts = b.parts
        q = len(parts)
        if num_branch_points(g, b) == 0:
            return Fraction(1, parts[0])

        total = Fraction(0)
        if g > 0:
            for i, bi in enumerate(parts):
                rest = parts[:i] + parts[i + 1:]
                for c in range(1, bi):
                    d = bi - c
                    total += c * d * self.hprime(g - 1, Partition(rest + (c, d)))
        for i in range(q):
            for j in range(q):
                if i == j:
                    continue
                s = parts[i] + parts[j]
                rest = tuple(p for k, p in enumerate(parts) if k != i and k != j)
                total += s * self.hprime(g, Partition(rest + (s,)))
        return total / 2

    def hurwitz_raw(self, g: int, b: Partition) -> Fraction:
        return self.hprime(g, b) / aut_order(b)

    def hurwitz_hat(self, g: int, b: Partition) -> Fraction:
        return to_hat(g, b, self.hurwitz_raw(g, b))

    def fill(self, max_n: int, max_g: int) -> None:
        """Bottom-up tabulation: every key with n <= max_n, g <= max_g, in order of r."""
        keys = [HurwitzKey(g, b) for n in range(1, max_n + 1) for b in partitions(n)
                for g in range(max_g + 1)]
        keys.sort(key=lambda k: k.branch_points)
        for g, b in keys:
            self.hprime(g, b)


_default = CutJoin()


def default_engine() -> CutJoin:
    return _default


def hprime(g: int, b: Partition) -> Fraction:
    return _default.hprime(g, b)


def hurwitz_raw(g: int, b: Partition) -> Fraction:
    return _default.hurwitz_raw(g, b)


def hurwitz_hat(g: int, b: Partition) -> Fraction:
    return _default.hurwitz_hat(g, b)


TABLE_FIELDS = ("g", "b", "n", "q", "r", "H", "Hprime", "Hhat")


def table_rows(max_n: int, max_g: int, engine: CutJoin | None = None) -> list[dict]:
    """Rows ``(g, b, n, q, r, H, Hprime, Hhat)`` sorted by g, n, then partition descending.

    Rational entries are exact strings.
    """
    engine = engine or _default
    engine.fill(max_n, max_g)
    rows = []
    for g in range(max_g + 1):
        for n in range(1, max_n + 1):
            for b in partitions(n):
                h = engine.hurwitz_raw(g, b)
                rows.append({
                    "g": g,
                    "b": str(b),
                    "n": n,
                    "q": b.length(),
                    "r": num_branch_points(g, b),
                    "H": format_rational(h),
                    "Hprime": format_rational(engine.hprime(g, b)),
                    "Hhat": format_rational(to_hat(g, b, h)),
                })
    return rows

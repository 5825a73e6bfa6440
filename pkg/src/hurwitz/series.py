"""Truncated generating function of one-part Hurwitz numbers and its cut-and-join PDE.

    F(theta, x_1, x_2, ...) = sum_{g, b} H_g(n | b) * theta**r / r! * x_{b_1} ... x_{b_q},
    r = 2g + q - 1,

with one monomial per multiset ``b``. The operators below act on monomials by
formal differentiation only; they never call into the recursion code.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .core import Partition, format_rational, partitions
from .cutjoin import CutJoin, default_engine
from .oracle import DEFAULT_BUDGET, oracle_hurwitz

Key = tuple[int, Partition]


class TruncatedSeries:
    """Finitely supported map ``(r, b) -> coefficient`` of ``theta**r * x_b``.

    ``max_degree`` bounds ``degree(b)`` and ``max_order`` bounds ``r``.
    """

    def __init__(self, max_degree: int, max_order: int,
                 coeffs: Mapping[Key, Fraction] | Iterable[tuple[Key, Fraction]] = ()):
        self.max_degree = max_degree
        self.max_order = max_order
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Key, Fraction] = {}
        for (r, b), c in items:
            if r < 0 or r > max_order or b.degree() > max_degree:
                raise ValueError(f"key {(r, b)} outside bounds N={max_degree}, R={max_order}")
            acc[(r, b)] = acc.get((r, b), 0) + Fraction(c)
        self.coeffs = {k: v for k, v in acc.items() if v != 0}

    def coefficient(self, r: int, b: Partition) -> Fraction:
        return self.coeffs.get((r, b), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _bounds(self, other: TruncatedSeries) -> tuple[int, int]:
        return max(self.max_degree, other.max_degree), max(self.max_order, other.max_order)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        return TruncatedSeries(*self._bounds(other),
                               list(self.coeffs.items()) + list(other.coeffs.items()))

    def __neg__(self) -> TruncatedSeries:
        return self.scale(-1)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def scale(self, c) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries(self.max_degree, self.max_order,
                               {k: c * v for k, v in self.coeffs.items()})

    def restrict(self, max_degree: int, max_order: int) -> TruncatedSeries:
        return TruncatedSeries(max_degree, max_order,
                               {(r, b): c for (r, b), c in self.coeffs.items()
                                if r <= max_order and b.degree() <= max_degree})

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def sorted_items(self) -> list[tuple[Key, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0][0], kv[0][1].degree(), kv[0][1].parts))

    def dump(self) -> str:
        """One ``theta^r | b | coefficient`` line per term, sorted by (r, degree, partition)."""
        return "".join(f"theta^{r} | {b} | {format_rational(c)}\n"
                       for (r, b), c in self.sorted_items())

    def __repr__(self) -> str:
        return f"TruncatedSeries(N={self.max_degree}, R={self.max_order}, terms={len(self.coeffs)})"


def build_F(N: int, R: int, source: str = "recursion", engine: CutJoin | None = None,
            budget: int = DEFAULT_BUDGET) -> TruncatedSeries:
    """Coefficients ``H_g(n | b) / r!`` for all ``degree(b) <= N`` and ``r <= R``.

    ``source`` is ``"recursion"`` or ``"oracle"``.
    """
    engine = engine or default_engine()
    coeffs = {}
    for n in range(1, N + 1):
        for b in partitions(n):
            q = b.length()
            g = 0
            while 2 * g + q - 1 <= R:
                r = 2 * g + q - 1
                if source == "recursion":
                    h = engine.hurwitz_raw(g, b)
                elif source == "oracle":
                    h = oracle_hurwitz(g, b, budget)
                else:
                    raise ValueError(f"unknown source {source!r}")
                coeffs[(r, b)] = h / factorial(r)
                g += 1
    return TruncatedSeries(N, R, coeffs)


def theta_derivative(F: TruncatedSeries) -> TruncatedSeries:
    out = {(r - 1, b): r * c for (r, b), c in F.coeffs.items() if r > 0}
    return TruncatedSeries(F.max_degree, max(F.max_order - 1, 0), out)


def _d_dx(k: int, mono: Counter) -> tuple[int, Counter] | None:
    """Formal ``d/dx_k`` of ``x^mono``: the exponent of ``x_k`` as factor, one ``x_k`` removed."""
    m = mono.get(k, 0)
    if m == 0:
        return None
    out = mono.copy()
    out[k] -= 1
    if out[k] == 0:
        del out[k]
    return m, out


def _times(mono: Counter, *ks: int) -> Partition:
    out = mono.copy()
    for k in ks:
        out[k] += 1
    return Partition(out.elements())


def cutjoin_operator(F: TruncatedSeries) -> TruncatedSeries:
    """``1/2 * sum_{i,j>=1} (i j x_{i+j} d2F/dx_i dx_j + (i+j) x_i x_j dF/dx_{i+j})``.

    Resulting monomials of degree above ``F.max_degree`` are dropped; the
    operator preserves degree, so none arise in practice.
    """
    half = Fraction(1, 2)
    out: dict[Key, Fraction] = {}

    def emit(r, b, c):
        if b.degree() <= F.max_degree:
            out[(r, b)] = out.get((r, b), 0) + c

    for (r, b), c in F.coeffs.items():
        mono = Counter(b.parts)
        values = sorted(mono)
        # i j x_{i+j} d^2/dx_i dx_j: only i, j occurring in the monomial survive
        for j in values:
            mj, after_j = _d_dx(j, mono)
            for i in values:
                d = _d_dx(i, after_j)
                if d is None:
                    continue
                mi, after_ij = d
                emit(r, _times(after_ij, i + j), half * i * j * mj * mi * c)
        # (i+j) x_i x_j d/dx_{i+j}: only i + j = k occurring in the monomial survives
        for k in values:
            mk, after_k = _d_dx(k, mono)
            for i in range(1, k):
                emit(r, _times(after_k, i, k - i), half * k * mk * c)
    return TruncatedSeries(F.max_degree, F.max_order, out)


def pde_residual(N: int, R: int, F: TruncatedSeries | None = None) -> TruncatedSeries:
    """``dF/dtheta`` minus the cut-and-join operator applied to ``F``, on the exact window ``r <= R - 1``."""
    if F is None:
        F = build_F(N, R)
    lhs = theta_derivative(F)
    rhs = cutjoin_operator(F)
    return (lhs - rhs).restrict(N, R - 1)

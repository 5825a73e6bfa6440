"""Genus-2 closed form for the hat-normalized Hurwitz numbers.

``Hhat_2(b) = (A**2 / 2 - B / 5) / 576`` with ``A = -1 + sum b_i**2`` and
``B = -1 + sum b_i**4``. The shifted combination
``Q(A, B) - 2 Q(A+1, B+1) + Q(A+2, B+2)`` with ``Q = A**2/2 - B/5`` is
identically 1; :func:`eq4_identity_residual` checks that symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .core import Partition


@dataclass(frozen=True)
class ABPair:
    A: Fraction
    B: Fraction


def ab_of(b: Partition) -> ABPair:
    return ABPair(Fraction(-1 + sum(x * x for x in b)), Fraction(-1 + sum(x**4 for x in b)))


def _q(A, B):
    return Fraction(1, 2) * A * A - Fraction(1, 5) * B


def genus2_hat(b: Partition) -> Fraction:
    ab = ab_of(b)
    return _q(ab.A, ab.B) / 576


def hat_closed_form(g: int, b: Partition) -> Fraction:
    """Closed-form ``Hhat_g(b)``; only genus 0 (constant 1) and genus 2 are known."""
    if g == 0:
        return Fraction(1)
    if g == 2:
        return genus2_hat(b)
    raise ValueError(f"no closed form for genus {g}; only g in {{0, 2}}")


class Poly:
    """Polynomial in the formal variables ``A`` and ``B`` with rational coefficients.

    Stored as ``{(i, j): c}`` for the monomial ``c * A**i * B**j``; zero
    coefficients are dropped.
    """

    def __init__(self, terms: Mapping[tuple[int, int], Fraction] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, c) -> Poly:
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def A(cls) -> Poly:
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def B(cls) -> Poly:
        return cls({(0, 1): Fraction(1)})

    @staticmethod
    def _lift(x) -> Poly:
        return x if isinstance(x, Poly) else Poly.const(x)

    def __add__(self, other) -> Poly:
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> Poly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> Poly:
        return self._lift(other) - self

    def __mul__(self, other) -> Poly:
        other = self._lift(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, A, B) -> Fraction:
        return sum((c * Fraction(A) ** i * Fraction(B) ** j for (i, j), c in self.terms.items()),
                   Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (self - self._lift(other)).is_zero()

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(s for s in (f"A^{i}" if i else "", f"B^{j}" if j else "") if s)
            out.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(out)


def eq4_lhs() -> Poly:
    """``Q(A,B) - 2 Q(A+1,B+1) + Q(A+2,B+2)`` expanded in ``A`` and ``B``."""
    A, B = Poly.A(), Poly.B()
    return _q(A, B) - 2 * _q(A + 1, B + 1) + _q(A + 2, B + 2)


def eq4_identity_residual() -> Poly:
    """The expanded left-hand side minus 1; the zero polynomial when the identity holds."""
    return eq4_lhs() - 1

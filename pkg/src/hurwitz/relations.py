"""The alternating binomial relation among hat-normalized Hurwitz numbers.

For every genus ``g`` and partition ``b``::

    sum_{k=0..g} (-1)**k * C(g, k) * Hhat_g(b + {1^k}) == (-1)**g / 24**g
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .closedform import genus2_hat
from .core import Partition, format_rational
from .cutjoin import CutJoin, default_engine


@dataclass
class Theorem1Verdict:
    genus: int
    profile: Partition
    lhs: Fraction
    rhs: Fraction
    terms: list[Fraction] = field(default_factory=list)  # Hhat_g(b + {1^k}), k = 0..g

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def report(self) -> str:
        status = "ok" if self.equal else "FAIL"
        terms = ", ".join(format_rational(t) for t in self.terms)
        return (f"[{status}] g={self.genus} b={self.profile} lhs={format_rational(self.lhs)} "
                f"rhs={format_rational(self.rhs)} terms=[{terms}]")


def theorem1_terms(g: int, b: Partition, engine: CutJoin | None = None,
                   method: str = "recursion") -> list[Fraction]:
    """``Hhat_g(b + {1^k})`` for k = 0..g.

    ``method="closed-form"`` uses the genus-2 formula instead of the recursion
    and is only valid for ``g == 2``.
    """
    if method == "closed-form":
        if g != 2:
            raise ValueError("closed-form terms exist only for genus 2")
        return [genus2_hat(b.with_ones(k)) for k in range(g + 1)]
    if method != "recursion":
        raise ValueError(f"unknown method {method!r}")
    engine = engine or default_engine()
    return [engine.hurwitz_hat(g, b.with_ones(k)) for k in range(g + 1)]


def _alternate(g: int, terms: list[Fraction]) -> Fraction:
    return sum(((-1) ** k * comb(g, k) * t for k, t in enumerate(terms)), Fraction(0))


def theorem1_lhs(g: int, b: Partition, engine: CutJoin | None = None) -> Fraction:
    return _alternate(g, theorem1_terms(g, b, engine))


def theorem1_rhs(g: int) -> Fraction:
    if g < 0:
        raise ValueError("genus must be non-negative")
    return Fraction((-1) ** g, 24**g)


def verify_theorem1(g: int, b: Partition, engine: CutJoin | None = None,
                    method: str = "recursion") -> Theorem1Verdict:
    terms = theorem1_terms(g, b, engine, method)
    return Theorem1Verdict(g, b, _alternate(g, terms), theorem1_rhs(g), terms)

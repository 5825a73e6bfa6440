"""Partitions, exact rationals and the three normalizations of Hurwitz numbers.

Every Hurwitz quantity is a :class:`fractions.Fraction`. Three conventions
are in use for the one-part number with profile ``b`` over infinity:

* raw ``H``: the weighted count of covers,
* prime ``H' = |aut(b)| * H``, the native convention of the cut-and-join
  recursion,
* hat ``Hhat = |aut(b)| * H / (n**(2g+q-2) * (2g+q-1)!)``.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator, NamedTuple

ExactRational = Fraction


class Partition:
    """An integer partition stored as a non-increasing tuple of parts."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int]):
        parts = tuple(parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise ValueError(f"parts must be positive, got {p}")
        self._parts = tuple(sorted(parts, reverse=True))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the comma-joined form, e.g. ``"2,1,1"``."""
        try:
            parts = [int(t) for t in text.split(",")]
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    def degree(self) -> int:
        return sum(self._parts)

    def length(self) -> int:
        return len(self._parts)

    def multiplicities(self) -> Counter:
        return Counter(self._parts)

    def with_ones(self, k: int) -> Partition:
        """This partition with ``k`` extra parts equal to 1."""
        return Partition(self._parts + (1,) * k)

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, i):
        return self._parts[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __lt__(self, other: Partition) -> bool:
        return self._parts < other._parts

    def __repr__(self) -> str:
        return f"Partition{self._parts}"

    def __str__(self) -> str:
        return ",".join(map(str, self._parts))


def make_partition(parts: Iterable[int]) -> Partition:
    return Partition(parts)


def partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n``, in lexicographically descending order."""

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    if n < 1:
        return
    for parts in rec(n, n):
        yield Partition(parts)


def aut_order(b: Partition) -> int:
    """Order of the group permuting equal parts: product of multiplicity factorials."""
    return prod(factorial(m) for m in b.multiplicities().values())


class HurwitzKey(NamedTuple):
    genus: int
    profile: Partition

    @property
    def branch_points(self) -> int:
        """Number ``r = 2g + q - 1`` of simple branch points."""
        return num_branch_points(self.genus, self.profile)


def num_branch_points(g: int, b: Partition) -> int:
    return 2 * g + b.length() - 1


def _hat_factor(g: int, b: Partition) -> Fraction:
    n = b.degree()
    r = num_branch_points(g, b)
    # exponent is -1 when g == 0 and q == 1; Fraction handles negative powers
    return Fraction(aut_order(b)) / (Fraction(n) ** (r - 1) * factorial(r))


def to_hat(g: int, b: Partition, h: Fraction) -> Fraction:
    return _hat_factor(g, b) * h


def from_hat(g: int, b: Partition, hhat: Fraction) -> Fraction:
    return Fraction(hhat) / _hat_factor(g, b)


def to_prime(b: Partition, h: Fraction) -> Fraction:
    return Fraction(h) * aut_order(b)


def from_prime(b: Partition, hprime: Fraction) -> Fraction:
    return Fraction(hprime) / aut_order(b)


def convert(g: int, b: Partition, h: Fraction, normalization: str) -> Fraction:
    """Express a raw Hurwitz number in ``raw``, ``prime`` or ``hat`` form."""
    if normalization == "raw":
        return Fraction(h)
    if normalization == "prime":
        return to_prime(b, h)
    if normalization == "hat":
        return to_hat(g, b, h)
    raise ValueError(f"unknown normalization {normalization!r}")


def format_rational(x: Fraction) -> str:
    """``"p/q"`` in lowest terms, or ``"p"`` for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)

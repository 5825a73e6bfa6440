"""Permutations of {1, ..., n} stored as dense image tuples.

Composition convention: ``compose(a, b)`` applies ``b`` first, then ``a``,
i.e. ``compose(a, b)(i) == a(b(i))``.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .core import Partition


class Permutation:
    """A bijection of {1, ..., n}.

    ``images[i - 1]`` is the image of ``i``. Internally images are 0-based.
    """

    __slots__ = ("_img",)

    def __init__(self, images: Sequence[int]):
        img = tuple(int(i) - 1 for i in images)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation: {tuple(images)}")
        self._img = img

    @classmethod
    def _from_zero_based(cls, img: tuple[int, ...]) -> Permutation:
        p = cls.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._from_zero_based(tuple(range(n)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        """The transposition swapping ``i`` and ``j`` (1-based) in S_n."""
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"bad transposition ({i} {j}) in S_{n}")
        img = list(range(n))
        img[i - 1], img[j - 1] = j - 1, i - 1
        return cls._from_zero_based(tuple(img))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b - 1
        return cls(i + 1 for i in img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in self._img)

    @property
    def n(self) -> int:
        return len(self._img)

    def __call__(self, i: int) -> int:
        return self._img[i - 1] + 1

    def inverse(self) -> Permutation:
        inv = [0] * len(self._img)
        for i, j in enumerate(self._img):
            inv[j] = i
        return Permutation._from_zero_based(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles in 1-based notation, each starting at its smallest element."""
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self._img[i]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation({self.images})"

    def __str__(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a o b``: apply ``b`` first, then ``a``."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: S_{a.n} vs S_{b.n}")
    ai = a._img
    return Permutation._from_zero_based(tuple(ai[j] for j in b._img))


def cycle_lengths(img: Sequence[int]) -> tuple[int, ...]:
    """Sorted (non-increasing) cycle lengths of a 0-based image sequence."""
    n = len(img)
    seen = [False] * n
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = img[i]
            length += 1
        lengths.append(length)
    lengths.sort(reverse=True)
    return tuple(lengths)


def cycle_type(p: Permutation) -> Partition:
    return Partition(cycle_lengths(p._img))


def all_transpositions(n: int) -> list[Permutation]:
    """The n(n-1)/2 transpositions of S_n, ordered lexicographically by (i, j)."""
    return [Permutation.transposition(n, i, j) for i, j in combinations(range(1, n + 1), 2)]


def canonical_ncycle(n: int) -> Permutation:
    """The cycle (1 2 ... n)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Permutation._from_zero_based(tuple((i + 1) % n for i in range(n)))


def all_permutations(n: int) -> Iterator[Permutation]:
    for img in permutations(range(n)):
        yield Permutation._from_zero_based(img)


def all_ncycles(n: int) -> list[Permutation]:
    """Every n-cycle in S_n; there are (n-1)! of them."""
    return [p for p in all_permutations(n) if len(cycle_lengths(p._img)) == 1]

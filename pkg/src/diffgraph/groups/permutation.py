"""Permutations of {1..n} as image tuples.

Composition is right-to-left: ``(a * b)(i) == a(b(i))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)
        object.__setattr__(self, "_hash", hash(imgs))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Build from disjoint cycles in 1-based notation, e.g. ``[[1, 2, 3], [4, 5]]``."""
        img = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen or not 1 <= a <= n:
                    raise ValueError(f"bad cycle entry {a} for degree {n}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        a = self.images
        return Permutation(tuple(a[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = Permutation.identity(self.degree)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Nontrivial cycles, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self.images[start - 1] == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self.images[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return tuple(out)

    def moved_points(self) -> frozenset[int]:
        return frozenset(i for i, j in enumerate(self.images, start=1) if i != j)

    def support(self) -> int:
        return sum(1 for i, j in enumerate(self.images, start=1) if i != j)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles), reverse=True))

    def sign(self) -> int:
        # (-1)^(support - number of nontrivial cycles)
        return -1 if (self.support() - len(self.cycles)) % 2 else 1

    def in_alternating(self) -> bool:
        return self.sign() == 1

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles)) if self.cycles else 1

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def support(sigma: Permutation) -> int:
    return sigma.support()


def sign(sigma: Permutation) -> int:
    return sigma.sign()


def in_alternating(sigma: Permutation) -> bool:
    return sigma.in_alternating()

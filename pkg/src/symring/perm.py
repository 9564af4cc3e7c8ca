"""
Permutations of ``{1, ..., r}`` in one-line (image list) notation.

Composition follows ``(p * q)(i) == p(q(i))``; every other module inherits
this convention.

>>> p = Permutation([2, 3, 1]); q = Permutation([2, 1, 3])
>>> p * q
Permutation([3, 2, 1])
>>> p.inverse()
Permutation([3, 1, 2])
"""

from __future__ import annotations

from functools import total_ordering
from itertools import permutations as _iter_permutations
from math import factorial
from typing import Iterator, Sequence

from .errors import DegreeMismatchError, GuardError, ParseError

DEFAULT_GUARD = 8

__all__ = [
    "Permutation", "compose", "inverse", "cycle_type_and_sign", "enumerate_group",
    "class_data", "identity", "transposition", "z_coefficient", "DEFAULT_GUARD",
    "check_guard",
]


@total_ordering
class Permutation:
    """An immutable bijection of ``{1..r}`` stored as its image list."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        object.__setattr__(p, "_hash", hash(images))
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise DegreeMismatchError(f"degrees {self.degree} and {other.degree} differ")
        a = self.images
        return Permutation._trusted(tuple(a[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation._trusted(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element, fixed points included."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if (self.degree - len(self.cycles())) % 2 else 1

    def inversions(self) -> int:
        a = self.images
        return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        return " ".join(map(str, self.images))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        try:
            return cls([int(tok) for tok in text.split()])
        except ValueError as exc:
            raise ParseError(f"bad permutation {text!r}: {exc}") from None

    def __reduce__(self):
        return (Permutation, (self.images,))


def identity(r: int) -> Permutation:
    return Permutation._trusted(tuple(range(1, r + 1)))


def transposition(r: int, i: int, j: int) -> Permutation:
    images = list(range(1, r + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation._trusted(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def cycle_type_and_sign(p: Permutation) -> tuple[tuple[int, ...], int]:
    return p.cycle_type(), p.sign()


def check_guard(r: int, guard: int = DEFAULT_GUARD, force: bool = False) -> None:
    if r < 1:
        raise ValueError("degree must be >= 1")
    if r > guard and not force:
        raise GuardError(r, guard)


def enumerate_group(r: int, guard: int = DEFAULT_GUARD, force: bool = False) -> Iterator[Permutation]:
    """All of S_r in lexicographic order of image lists."""
    check_guard(r, guard, force)
    for images in _iter_permutations(range(1, r + 1)):
        yield Permutation._trusted(images)


def _partitions_ascending(r: int) -> list[tuple[int, ...]]:
    from .partitions import enumerate_partitions
    return list(reversed(enumerate_partitions(r)))


def class_representative(mu: Sequence[int]) -> Permutation:
    """Cycles of lengths mu[0], mu[1], ... on consecutive points."""
    images = []
    start = 1
    for m in mu:
        images.extend(range(start + 1, start + m))
        images.append(start)
        start += m
    return Permutation(images)


def z_coefficient(mu: Sequence[int]) -> int:
    """Centralizer order of a permutation with cycle type mu."""
    z = 1
    for part in set(mu):
        k = list(mu).count(part)
        z *= part ** k * factorial(k)
    return z


def class_data(r: int, guard: int = DEFAULT_GUARD, force: bool = False):
    """(cycle type, class size, representative) for every class, identity class first."""
    check_guard(r, guard, force)
    n = factorial(r)
    return [(mu, n // z_coefficient(mu), class_representative(mu)) for mu in _partitions_ascending(r)]

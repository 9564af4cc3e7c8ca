"""Partitions, standard Young tableaux, hook lengths and tableau groups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Sequence

from .errors import ParseError
from .perm import Permutation

Partition = tuple[int, ...]

__all__ = [
    "Partition", "enumerate_partitions", "check_partition", "conjugate", "hook_lengths",
    "dimension", "StandardTableau", "standard_tableaux", "TableauGroups", "tableau_groups",
    "parse_partition", "format_partition", "dominates", "row_tableau",
]


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError(f"{parts} is not a partition: parts must be positive")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not a partition: parts must be weakly decreasing")
    return parts


@lru_cache(maxsize=None)
def enumerate_partitions(r: int) -> tuple[Partition, ...]:
    """All partitions of r in reverse-lexicographic order, ``(r,)`` first."""
    if r < 1:
        raise ValueError("r must be >= 1")
    out = []

    def rec(remaining, bound, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, bound), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(r, r, [])
    return tuple(out)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff lam dominates mu (both partitions of the same number)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def hook_lengths(lam: Partition) -> list[list[int]]:
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


@lru_cache(maxsize=None)
def dimension(lam: Partition) -> int:
    """f^lam by the hook-length formula."""
    lam = check_partition(lam)
    return factorial(sum(lam)) // prod(h for row in hook_lengths(lam) for h in row)


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("[]()")
    try:
        return check_partition(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}: {exc}") from None


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam))


@dataclass(frozen=True, order=True)
class StandardTableau:
    """
    A filling of a Young diagram with 1..r, rows and columns strictly increasing.

    Ordering compares row-reading words, so ``min`` picks the lexicographically
    smallest tableau of a shape.
    """

    word_key: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, rows: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "word_key", tuple(x for row in rows for x in row))
        check_partition(len(row) for row in rows)
        n = len(self.word_key)
        if sorted(self.word_key) != list(range(1, n + 1)):
            raise ValueError("entries must be exactly 1..r")
        for i, row in enumerate(rows):
            if any(row[j] >= row[j + 1] for j in range(len(row) - 1)):
                raise ValueError(f"row {i} is not increasing")
            if i and any(rows[i - 1][j] >= row[j] for j in range(len(row))):
                raise ValueError(f"column violation in row {i}")

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    @property
    def degree(self) -> int:
        return len(self.word_key)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row[j] for row in self.rows if len(row) > j) for j in range(len(self.rows[0])))

    def position(self, entry: int) -> tuple[int, int]:
        for i, row in enumerate(self.rows):
            if entry in row:
                return i, row.index(entry)
        raise KeyError(entry)

    def row_of(self) -> tuple[int, ...]:
        """Row index of each entry 1..r (the row tabloid of the tableau)."""
        out = [0] * self.degree
        for i, row in enumerate(self.rows):
            for x in row:
                out[x - 1] = i
        return tuple(out)

    def __str__(self):
        return "/".join(" ".join(map(str, row)) for row in self.rows)


def row_tableau(lam: Partition) -> StandardTableau:
    """The lexicographically smallest standard tableau: rows filled consecutively."""
    rows, start = [], 1
    for part in lam:
        rows.append(tuple(range(start, start + part)))
        start += part
    return StandardTableau(rows)


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[StandardTableau, ...]:
    """All standard tableaux of shape lam, sorted by row-reading word."""
    lam = check_partition(lam)
    n = sum(lam)
    out = []
    filling = [[] for _ in lam]

    def rec(k):
        if k > n:
            out.append(StandardTableau(filling))
            return
        for i, part in enumerate(lam):
            if len(filling[i]) < part and (i == 0 or len(filling[i - 1]) > len(filling[i])):
                filling[i].append(k)
                rec(k + 1)
                filling[i].pop()

    rec(1)
    return tuple(sorted(out))


def _set_permutations(r: int, blocks: Sequence[Sequence[int]]) -> list[Permutation]:
    """All permutations of S_r that map each block onto itself."""
    blocks = [tuple(b) for b in blocks if len(b) > 1]
    out = []
    for choice in product(*(permutations(b) for b in blocks)):
        images = list(range(1, r + 1))
        for block, image in zip(blocks, choice):
            for x, y in zip(block, image):
                images[x - 1] = y
        out.append(Permutation._trusted(tuple(images)))
    return sorted(out)


@dataclass(frozen=True)
class TableauGroups:
    horizontal: tuple[Permutation, ...]
    vertical: tuple[Permutation, ...]
    row_swap: tuple[Permutation, ...]
    group: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.group)


def row_swap_group(t: StandardTableau) -> list[Permutation]:
    """Permutations moving complete rows of length 2 onto each other as rigid blocks."""
    r = t.degree
    pairs = [row for row in t.rows if len(row) == 2]
    out = []
    for image in permutations(range(len(pairs))):
        images = list(range(1, r + 1))
        for k, s in enumerate(image):
            for x, y in zip(pairs[k], pairs[s]):
                images[x - 1] = y
        out.append(Permutation._trusted(tuple(images)))
    return sorted(out)


def tableau_groups(t: StandardTableau) -> TableauGroups:
    r = t.degree
    horizontal = _set_permutations(r, t.rows)
    vertical = _set_permutations(r, t.columns)
    row_swap = row_swap_group(t)
    group = sorted({h * q for h in horizontal for q in row_swap})
    return TableauGroups(tuple(horizontal), tuple(vertical), tuple(row_swap), tuple(group))

"""
Irreducible characters of S_r, Littlewood-Richardson products and plethysms.

Characters come from the Murnaghan-Nakayama rule evaluated on beta-sets
(rim hooks of length m are bead moves b -> b - m). Plethysms ``alpha (.) [n]``
are computed from the character of the wreath product S_m wr S_n induced to
S_mn, summed class by class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import NotIdempotentError
from .partitions import Partition, check_partition, dimension, enumerate_partitions, format_partition, parse_partition
from .perm import DEFAULT_GUARD, check_guard, class_data, z_coefficient

__all__ = [
    "mn_character", "character_table", "CharacterTable", "PartitionMultiset", "lr_coefficient",
    "lr_product", "plethysm", "ideal_multiplicities", "class_function_multiplicities",
]


def _beta_set(lam: Partition, k: int) -> tuple[int, ...]:
    padded = list(lam) + [0] * (k - len(lam))
    return tuple(padded[i] + k - 1 - i for i in range(k))


def _from_beta(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return tuple(p for p in (beta[i] - (k - 1 - i) for i in range(k)) if p > 0)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated on the class of cycle type mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    if not mu:
        return 1
    m, rest = mu[0], mu[1:]
    k = len(lam)
    beta = _beta_set(lam, k)
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - m
        if target < 0 or target in beads:
            continue
        crossed = sum(1 for x in beads if target < x < b)
        new = _from_beta((beads - {b}) | {target})
        total += (-1) ** crossed * mn_character(new, rest)
    return total


@dataclass(frozen=True)
class CharacterTable:
    degree: int
    irreps: tuple[Partition, ...]
    classes: tuple[Partition, ...]
    class_sizes: tuple[int, ...]
    values: tuple[tuple[int, ...], ...]

    def __getitem__(self, key):
        lam, mu = key
        return self.values[self.irreps.index(tuple(lam))][self.classes.index(tuple(mu))]

    def to_tsv(self) -> str:
        lines = ["\t".join(["irrep\\class"] + [format_partition(mu) for mu in self.classes])]
        for lam, row in zip(self.irreps, self.values):
            lines.append("\t".join([format_partition(lam)] + [str(v) for v in row]))
        return "\n".join(lines) + "\n"


def character_table(r: int, guard: int = DEFAULT_GUARD, force: bool = False) -> CharacterTable:
    """Rows in reverse-lex partition order, columns from the identity class upward."""
    check_guard(r, guard, force)
    data = class_data(r, guard, force)
    irreps = enumerate_partitions(r)
    classes = tuple(mu for mu, _, _ in data)
    values = tuple(tuple(mn_character(lam, mu) for mu in classes) for lam in irreps)
    return CharacterTable(r, irreps, classes, tuple(s for _, s, _ in data), values)


class PartitionMultiset(dict):
    """Sparse map partition -> positive multiplicity; zero entries are dropped."""

    def __init__(self, items: Mapping | Iterable = ()):
        super().__init__()
        pairs = items.items() if isinstance(items, Mapping) else items
        for lam, c in pairs:
            if c < 0:
                raise ValueError("multiplicities must be nonnegative")
            if c:
                lam = check_partition(lam)
                self[lam] = self.get(lam, 0) + c

    @property
    def weight(self) -> int | None:
        ws = {sum(lam) for lam in self}
        return ws.pop() if len(ws) == 1 else None

    def dimension(self) -> int:
        """Degree of the representation sum_lam c_lam [lam]."""
        return sum(c * dimension(lam) for lam, c in self.items())

    def sorted_items(self) -> list[tuple[Partition, int]]:
        return sorted(self.items(), reverse=True)

    def __str__(self):
        if not self:
            return "0"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + f"[{format_partition(lam)}]" for lam, c in self.sorted_items()
        )

    @classmethod
    def parse(cls, text: str) -> "PartitionMultiset":
        out = cls()
        for tok in text.split("+"):
            tok = tok.strip()
            if not tok or tok == "0":
                continue
            c = 1
            if "*" in tok:
                c_str, tok = tok.split("*", 1)
                c = int(c_str)
            lam = parse_partition(tok)
            out[lam] = out.get(lam, 0) + c
        return out

    def to_json(self) -> list:
        return [{"partition": list(lam), "multiplicity": c} for lam, c in self.sorted_items()]


def _as_multiset(x) -> PartitionMultiset:
    if isinstance(x, PartitionMultiset):
        return x
    if isinstance(x, Mapping):
        return PartitionMultiset(x)
    return PartitionMultiset({tuple(x): 1})


def _contains(nu: Partition, lam: Partition) -> bool:
    return len(lam) <= len(nu) and all(l <= n for l, n in zip(lam, nu))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Number of LR tableaux of skew shape nu/lam with content mu."""
    if sum(lam) + sum(mu) != sum(nu) or not _contains(nu, lam) or not _contains(nu, mu):
        return 0
    lam_p = list(lam) + [0] * (len(nu) - len(lam))
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, lam_p[i] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        hi = len(mu)
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((i - 1, j))
        lo = 1 if above is None else above + 1
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            total += rec(idx + 1)
            del filling[(i, j)]
            counts[v] -= 1
        return total

    return rec(0)


@lru_cache(maxsize=None)
def _lr_pair(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = sum(lam) + sum(mu)
    out = []
    for nu in enumerate_partitions(n):
        c = lr_coefficient(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def lr_product(factors: Sequence) -> PartitionMultiset:
    """
    Constituents of the induced outer product ``alpha_1 # ... # alpha_m``.

    Each factor is a partition or a PartitionMultiset (a reducible factor).
    """
    factors = [_as_multiset(f) for f in factors]
    if not factors:
        raise ValueError("need at least one factor")
    acc = factors[0]
    for f in factors[1:]:
        nxt: dict = {}
        for lam, a in acc.items():
            for mu, b in f.items():
                for nu, c in _lr_pair(lam, mu):
                    nxt[nu] = nxt.get(nu, 0) + a * b * c
        acc = PartitionMultiset(nxt)
    return acc


def _character_of(alpha: PartitionMultiset, beta: Partition) -> int:
    return sum(c * mn_character(lam, beta) for lam, c in alpha.items())


def _weighted_compositions(kinds, n):
    """Multisets of kinds (k, beta) with sum of k equal to n, as {index: count}."""

    def rec(idx, remaining):
        if remaining == 0:
            yield {}
            return
        if idx == len(kinds):
            return
        k = kinds[idx][0]
        for a in range(remaining // k, -1, -1):
            for tail in rec(idx + 1, remaining - a * k):
                if a:
                    d = dict(tail)
                    d[idx] = a
                    yield d
                else:
                    yield tail

    yield from rec(0, n)


def plethysm(alpha, n: int, guard: int = DEFAULT_GUARD, force: bool = False) -> PartitionMultiset:
    """Constituents of ``alpha (.) [n]`` via the wreath-product induced character."""
    alpha = _as_multiset(alpha)
    m = alpha.weight
    if m is None:
        raise ValueError("alpha must have a single weight")
    if n < 1:
        raise ValueError("n must be >= 1")
    check_guard(m * n, guard, force)
    kinds = [(k, beta) for k in range(1, n + 1) for beta in enumerate_partitions(m)]
    chi_alpha = {beta: _character_of(alpha, beta) for beta in enumerate_partitions(m)}
    # class function on S_mn: cycle type -> averaged induced character weight
    weights: dict[Partition, Fraction] = {}
    for comp in _weighted_compositions(kinds, n):
        w = Fraction(1)
        parts = []
        for idx, a in comp.items():
            k, beta = kinds[idx]
            w *= Fraction(chi_alpha[beta] ** a, (k * z_coefficient(beta)) ** a * factorial(a))
            parts.extend([k * b for b in beta] * a)
        if w:
            key = tuple(sorted(parts, reverse=True))
            weights[key] = weights.get(key, 0) + w
    out = {}
    for nu in enumerate_partitions(m * n):
        c = sum(w * mn_character(nu, key) for key, w in weights.items())
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral multiplicity {c} for {nu}")
        if c:
            out[nu] = int(c)
    return PartitionMultiset(out)


def class_function_multiplicities(r: int, values: Mapping[Partition, object]) -> PartitionMultiset:
    """Decompose a class function given as cycle type -> value into irreducibles."""
    n = factorial(r)
    out = {}
    for lam in enumerate_partitions(r):
        c = sum(Fraction(n // z_coefficient(mu)) * Fraction(v) * mn_character(lam, mu) for mu, v in values.items()) / n
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"not a character: multiplicity {c} at {lam}")
        if c:
            out[lam] = int(c)
    return PartitionMultiset(out)


def ideal_multiplicities(e, check: bool = True) -> PartitionMultiset:
    """Multiplicity of [lam] in Q[S_r]*e, read off as the rank of block lam of fourier(e)."""
    from .dft import fourier
    from .wedderburn import BlockAlgebraElement

    E = e if isinstance(e, BlockAlgebraElement) else fourier(e)
    if check and not E.is_idempotent():
        raise NotIdempotentError("ideal_multiplicities needs an idempotent")
    return PartitionMultiset({lam: rk for lam, rk in E.block_ranks().items()})

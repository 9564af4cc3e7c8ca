"""
The rational group ring Q[S_r] with sparse storage.

>>> from symring.perm import Permutation
>>> s = Permutation([2, 1])
>>> one = GroupRingElement.identity(2)
>>> (one + GroupRingElement.from_perm(s)) * (one - GroupRingElement.from_perm(s))
GroupRingElement(2, {})
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Sequence

from .errors import DegreeMismatchError, NotASubgroupError
from .partitions import StandardTableau, dimension, tableau_groups
from .perm import Permutation, identity

__all__ = ["GroupRingElement", "young_symmetrizer", "group_sum", "embed", "closure"]


class GroupRingElement:
    """Finite sum ``a = sum a(p) p`` with exact rational coefficients."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Permutation, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for p, c in items:
            if p.degree != degree:
                raise DegreeMismatchError(f"permutation {p} does not have degree {degree}")
            c = Fraction(c)
            if c:
                clean[p] = clean.get(p, 0) + c
                if not clean[p]:
                    del clean[p]
        self.degree = degree
        self.terms = clean

    @classmethod
    def _trusted(cls, degree: int, terms: dict) -> "GroupRingElement":
        a = object.__new__(cls)
        a.degree = degree
        a.terms = terms
        return a

    @classmethod
    def identity(cls, r: int) -> "GroupRingElement":
        return cls._trusted(r, {identity(r): Fraction(1)})

    @classmethod
    def zero(cls, r: int) -> "GroupRingElement":
        return cls._trusted(r, {})

    @classmethod
    def from_perm(cls, p: Permutation, c=1) -> "GroupRingElement":
        return cls(p.degree, {p: c})

    @classmethod
    def from_images(cls, *image_lists: Sequence[int]) -> "GroupRingElement":
        """Sum of the given permutations, each with coefficient 1."""
        perms = [Permutation(x) for x in image_lists]
        return cls(perms[0].degree, [(p, 1) for p in perms])

    def coefficient(self, p: Permutation) -> Fraction:
        return self.terms.get(p, Fraction(0))

    def __getitem__(self, p: Permutation) -> Fraction:
        return self.coefficient(p)

    def support(self) -> list[Permutation]:
        return sorted(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "GroupRingElement"):
        if self.degree != other.degree:
            raise DegreeMismatchError(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            v = out.get(p, 0) + c
            if v:
                out[p] = v
            else:
                out.pop(p, None)
        return GroupRingElement._trusted(self.degree, out)

    def __neg__(self):
        return GroupRingElement._trusted(self.degree, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "GroupRingElement":
        c = Fraction(c)
        if not c:
            return GroupRingElement.zero(self.degree)
        return GroupRingElement._trusted(self.degree, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupRingElement):
            return self.mul(other)
        if isinstance(other, Permutation):
            return self.mul(GroupRingElement.from_perm(other))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Permutation):
            return GroupRingElement.from_perm(other).mul(self)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def mul(self, other: "GroupRingElement") -> "GroupRingElement":
        """Convolution product: sum a(p) b(q) (p*q)."""
        self._check(other)
        out: dict = {}
        bterms = [(q.images, c) for q, c in other.terms.items()]
        for p, a in self.terms.items():
            img = p.images
            for qimg, b in bterms:
                key = tuple(img[j - 1] for j in qimg)
                out[key] = out.get(key, 0) + a * b
        return GroupRingElement._trusted(
            self.degree, {Permutation._trusted(k): v for k, v in out.items() if v}
        )

    def star(self) -> "GroupRingElement":
        """The anti-involution p -> p^{-1} extended linearly."""
        return GroupRingElement._trusted(self.degree, {p.inverse(): c for p, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def is_idempotent(self) -> bool:
        return self * self == self

    def denominator_lcm(self) -> int:
        from math import lcm
        out = 1
        for c in self.terms.values():
            out = lcm(out, c.denominator)
        return out

    def __repr__(self):
        body = ", ".join(f"{list(p.images)}: {c}" for p, c in sorted(self.terms.items()))
        return f"GroupRingElement({self.degree}, {{{body}}})"


def young_symmetrizer(t: StandardTableau) -> GroupRingElement:
    """Row sum times signed column sum of the tableau."""
    groups = tableau_groups(t)
    r = t.degree
    rows = GroupRingElement(r, [(h, 1) for h in groups.horizontal])
    cols = GroupRingElement(r, [(v, v.sign()) for v in groups.vertical])
    return rows * cols


def closure(generators: Iterable[Permutation]) -> list[Permutation]:
    """The subgroup generated by ``generators``, sorted."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    r = gens[0].degree
    seen = {identity(r)}
    frontier = [identity(r)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


def group_sum(G: Sequence[Permutation], check: bool = True) -> GroupRingElement:
    """1_G for a finite subgroup G, given as an explicit element list."""
    G = list(G)
    if not G:
        raise NotASubgroupError("empty set is not a group")
    if check:
        elems = set(G)
        if len(elems) != len(G):
            raise NotASubgroupError("element list has repetitions")
        if not all(p * q in elems for p in G for q in G):
            raise NotASubgroupError("set is not closed under composition")
    return GroupRingElement(G[0].degree, [(g, 1) for g in G])


def embed(a: GroupRingElement, offset: int, r: int) -> GroupRingElement:
    """Shift the support of ``a`` onto points offset+1 .. offset+deg(a) inside S_r."""
    m = a.degree
    if offset < 0 or offset + m > r:
        raise ValueError(f"cannot place degree {m} at offset {offset} inside S_{r}")
    base = list(range(1, r + 1))
    terms = {}
    for p, c in a.terms.items():
        images = list(base)
        for k in range(1, m + 1):
            images[offset + k - 1] = offset + p(k)
        terms[Permutation._trusted(tuple(images))] = c
    return GroupRingElement._trusted(r, terms)


def symmetrizer_constant(t: StandardTableau) -> Fraction:
    """The scalar c with y_t * y_t = c * y_t."""
    return Fraction(factorial(t.degree), dimension(t.shape))

"""
Linear identities between index-permuted tensor coordinates.

An expression ``tau = sum_p c_p T_{i_p(1) .. i_p(r)}`` is a coefficient
vector over a candidate set P of permutations. A vector x is an identity for
the class when ``sum_p x_p h(p) = 0`` for every h in W (the span of the
T_b, or of their contraction sums). Identities are returned in reduced
echelon form with the columns ordered from the lexicographically largest
permutation down, so reduction eliminates large arrangements first and
normal forms live on small ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .errors import DegreeMismatchError
from .group_ring import GroupRingElement
from .perm import Permutation

__all__ = [
    "Expression", "IdentityBasis", "orthogonal_identities", "reduce_expression",
    "split_by_idempotents", "coefficient_table", "identity_value", "standard_identity_expression",
]


@dataclass
class Expression:
    """tau = sum c_p T_(p); ``spec`` records the contraction pattern when there is one."""

    degree: int
    terms: dict[Permutation, Fraction]
    spec: object = None

    def __post_init__(self):
        clean = {}
        for p, c in dict(self.terms).items():
            if p.degree != self.degree:
                raise DegreeMismatchError(f"permutation {p} does not have degree {self.degree}")
            c = Fraction(c)
            if c:
                clean[p] = c
        self.terms = clean

    @classmethod
    def from_terms(cls, degree: int, pairs: Iterable[tuple], spec=None) -> "Expression":
        acc: dict = {}
        for c, p in pairs:
            acc[p] = acc.get(p, 0) + Fraction(c)
        return cls(degree, acc, spec)

    @classmethod
    def from_element(cls, a: GroupRingElement, spec=None) -> "Expression":
        return cls(a.degree, dict(a.terms), spec)

    def to_element(self) -> GroupRingElement:
        return GroupRingElement(self.degree, self.terms)

    def support(self) -> list[Permutation]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, Expression):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __sub__(self, other: "Expression") -> "Expression":
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out.get(p, 0) - c
        return Expression(self.degree, out, self.spec)

    def sorted_terms(self) -> list[tuple[Fraction, Permutation]]:
        return [(self.terms[p], p) for p in sorted(self.terms)]


@dataclass
class IdentityBasis:
    """Reduced echelon basis of the identities over ``candidates``; ``pivots[i]`` leads ``vectors[i]``."""

    degree: int
    candidates: list[Permutation]
    vectors: list[dict[Permutation, Fraction]]
    pivots: list[Permutation]
    w_rank: int
    w_basis: list = field(default_factory=list, repr=False)

    def __len__(self):
        return len(self.vectors)

    def expressions(self, spec=None) -> list[Expression]:
        return [Expression(self.degree, dict(v), spec) for v in self.vectors]

    def normal_support(self) -> list[Permutation]:
        """Permutations that survive reduction."""
        piv = set(self.pivots)
        return [p for p in self.candidates if p not in piv]


def coefficient_table(elements: Sequence, perms: Sequence[Permutation]) -> list[list[Fraction]]:
    """Rows [h(p) for p in perms] for group-ring, block or rank-one elements h."""
    from .wedderburn import RankOneElement
    from .dft import evaluate_rank_one

    rows: list = [None] * len(elements)
    rank_one = [i for i, h in enumerate(elements) if isinstance(h, RankOneElement)]
    if rank_one:
        vals = evaluate_rank_one([elements[i] for i in rank_one], perms)
        for i, v in zip(rank_one, vals):
            rows[i] = v
    for i, h in enumerate(elements):
        if rows[i] is None:
            rows[i] = [Fraction(h.coefficient(p)) for p in perms]
    return rows


def orthogonal_identities(w_basis: Sequence, candidates: Sequence[Permutation]) -> IdentityBasis:
    """
    Nullspace of the system ``sum_{p in P} h_i(p) x_p = 0``.

    ``w_basis`` items need a ``coefficient(p)`` method (group-ring, block and
    rank-one elements all qualify). An empty basis means W = 0, in which case
    every coordinate in P is itself an identity.
    """
    cands = list(dict.fromkeys(candidates))
    if not cands:
        raise ValueError("candidate set is empty")
    r = cands[0].degree
    if any(p.degree != r for p in cands):
        raise DegreeMismatchError("candidates have different degrees")
    cols = sorted(cands, reverse=True)
    n = len(cols)
    H = coefficient_table(list(w_basis), cols)
    H = [row for row in H if any(row)]
    R, piv = la.rref(H) if H else ([], [])
    null = la.nullspace(R, n) if R else [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    E, epiv = la.rref(null) if null else ([], [])
    vectors = [{cols[j]: x for j, x in enumerate(row) if x} for row in E]
    pivots = [cols[j] for j in epiv]
    return IdentityBasis(r, cands, vectors, pivots, len(piv), list(w_basis))


def reduce_expression(tau: Expression, ids: IdentityBasis) -> Expression:
    """Eliminate every pivot coordinate of tau using the identities; a linear projection."""
    allowed = set(ids.candidates)
    missing = [p for p in tau.terms if p not in allowed]
    if missing:
        raise ValueError(f"expression uses permutations outside the candidate set, e.g. {missing[0]}")
    if tau.degree != ids.degree:
        raise DegreeMismatchError("expression and identities have different degrees")
    vec = dict(tau.terms)
    for p, x in zip(ids.pivots, ids.vectors):
        c = vec.get(p)
        if c:
            for q, v in x.items():
                vec[q] = vec.get(q, 0) - c * v
    return Expression(tau.degree, vec, tau.spec)


def split_by_idempotents(tau: Expression, parts) -> list[tuple[object, Expression]]:
    """
    tau evaluated on each component: pairs (h_k, tau) with tau read on T_k = star(h_k) T.

    The coefficients do not change; what changes is the space W_k = W(R h_k)
    used to reduce each copy. Reduced components generally cannot be
    recombined into an expression in the coordinates of T itself.
    """
    return [(h, Expression(tau.degree, dict(tau.terms), tau.spec)) for h in parts.idempotents]


def identity_value(vector: Mapping[Permutation, Fraction], T, b: Sequence[int]) -> Fraction:
    """sum_p x_p T(v_b[p(1)], .., v_b[p(r)]) for a tensor T and index tuple b."""
    total = Fraction(0)
    for p, x in vector.items():
        total += x * T.data[tuple(b[j - 1] for j in p.images)]
    return total


# product position k of A_s(1) A_s(2) A_s(3) A_s(4) -> (position in b of its row index, of its column index)
# with b = (w1, w1, w2, w2, w3, w3, i, j)
_PRODUCT_SLOTS = {1: (7, 1), 2: (2, 3), 3: (4, 5), 4: (6, 8)}


def standard_identity_expression() -> Expression:
    """
    sum_s sign(s) A_s(1) A_s(2) A_s(3) A_s(4) for 2x2 matrices, as an order-8 expression.

    The tensor is A_1 (x) A_2 (x) A_3 (x) A_4, so factor m occupies argument
    slots 2m-1, 2m; the three matrix-product contractions are the position
    pairs (1,2), (3,4), (5,6) and the free row/column indices sit at 7, 8.
    """
    from .perm import enumerate_group
    terms = {}
    for s in enumerate_group(4):
        s_inv = s.inverse()
        images = [0] * 8
        for m in range(1, 5):
            row, col = _PRODUCT_SLOTS[s_inv(m)]
            images[2 * m - 2], images[2 * m - 1] = row, col
        terms[Permutation(images)] = Fraction(s.sign())
    return Expression(8, terms)

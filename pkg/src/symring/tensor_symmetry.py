"""
Covariant tensors, symmetry operators and the group-ring data attached to them.

A tensor T of order r over a d-dimensional space is stored densely. Group
ring elements act on argument positions: ``(a T)(v_1..v_r) = sum_p a(p)
T(v_p(1), .., v_p(r))``. For a tuple b of basis indices, ``T_b`` is the
element whose coefficient at p is ``T(v_b[p(1)], .., v_b[p(r)])``; it
satisfies ``(a T)_b = T_b * star(a)``.

Symmetry classes are described by left ideals: the identities ``a_i T = 0``
hold exactly when every ``T_b`` lies in the left annihilator of the
``star(a_i)``, and then the class is ``{T : star(e) T = T}`` for a generating
idempotent e of that annihilator.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm
from typing import Sequence

import numpy as np

from . import linalg as la
from .characters import PartitionMultiset, ideal_multiplicities, lr_product, plethysm
from .dft import fourier, fourier_of_group_sum, rep_cache
from .errors import DegreeMismatchError, NotIdempotentError, ShapeMismatchError
from .group_ring import GroupRingElement, embed
from .ideal_decomp import DecompositionResult, as_block, decompose
from .partitions import Partition, enumerate_partitions
from .perm import DEFAULT_GUARD, Permutation, check_guard, enumerate_group, identity
from .wedderburn import BlockAlgebraElement, RankOneElement, row_matrix, subspace_basis_rank_one

__all__ = [
    "TensorDense", "MetricSignature", "ContractionSpec", "Grouping", "SymmetryClass", "ConstructedIdeal",
    "t_b", "apply_operator", "symmetry_ideal_from_identities", "membership", "product_ideal",
    "power_ideal", "contraction_sum", "contraction_sum_direct", "contraction_space",
    "contraction_space_blocks", "grouping", "invariant_count", "invariant_count_from_multiplicities",
    "riemann_generators", "symmetric_generators", "antisymmetric_generators", "pair_group",
]

_INT64_SAFE = 2 ** 62


# --------------------------------------------------------------------------- tensors


@dataclass(frozen=True, eq=False)
class TensorDense:
    """Order-r tensor over a d-dimensional space; ``data`` has shape (d,)*r and holds Fractions."""

    order: int
    dim: int
    data: np.ndarray

    def __post_init__(self):
        if self.data.shape != (self.dim,) * self.order:
            raise ShapeMismatchError(f"expected shape {(self.dim,) * self.order}, got {self.data.shape}")

    @classmethod
    def zeros(cls, dim: int, order: int) -> "TensorDense":
        data = np.empty((dim,) * order, dtype=object)
        data.fill(Fraction(0))
        return cls(order, dim, data)

    @classmethod
    def from_coordinates(cls, dim: int, order: int, coords: Sequence) -> "TensorDense":
        if len(coords) != dim ** order:
            raise ShapeMismatchError(f"need {dim ** order} coordinates, got {len(coords)}")
        data = np.empty(len(coords), dtype=object)
        for i, c in enumerate(coords):
            data[i] = Fraction(c)
        return cls(order, dim, data.reshape((dim,) * order))

    @classmethod
    def from_function(cls, dim: int, order: int, fn) -> "TensorDense":
        return cls.from_coordinates(dim, order, [fn(idx) for idx in product(range(dim), repeat=order)])

    @classmethod
    def random(cls, dim: int, order: int, rng: _random.Random | None = None, lo: int = -5, hi: int = 5) -> "TensorDense":
        rng = rng or _random.Random()
        return cls.from_coordinates(dim, order, [rng.randint(lo, hi) for _ in range(dim ** order)])

    @classmethod
    def metric(cls, g: "MetricSignature") -> "TensorDense":
        return cls.from_function(g.dim, 2, lambda ij: g.entries[ij[0]] if ij[0] == ij[1] else 0)

    def coordinates(self) -> list[Fraction]:
        return list(self.data.reshape(-1))

    def __getitem__(self, idx) -> Fraction:
        return self.data[tuple(idx)]

    def __eq__(self, other):
        if not isinstance(other, TensorDense):
            return NotImplemented
        return self.order == other.order and self.dim == other.dim and bool(np.all(self.data == other.data))

    __hash__ = None

    def __add__(self, other: "TensorDense") -> "TensorDense":
        return TensorDense(self.order, self.dim, self.data + other.data)

    def __sub__(self, other: "TensorDense") -> "TensorDense":
        return TensorDense(self.order, self.dim, self.data - other.data)

    def scale(self, c) -> "TensorDense":
        return TensorDense(self.order, self.dim, self.data * Fraction(c))

    def is_zero(self) -> bool:
        return not any(self.data.reshape(-1))

    def permuted(self, p: Permutation) -> "TensorDense":
        """p T, i.e. the tensor (v_1..v_r) -> T(v_p(1), .., v_p(r))."""
        return TensorDense(self.order, self.dim, np.transpose(self.data, _axes(p)))

    def to_text(self) -> str:
        lines = [f"d={self.dim} r={self.order}"]
        lines.extend(str(c) for c in self.coordinates())
        return "\n".join(lines) + "\n"


def _axes(p: Permutation) -> tuple[int, ...]:
    inv = p.inverse()
    return tuple(inv(k + 1) - 1 for k in range(p.degree))


@dataclass(frozen=True)
class MetricSignature:
    """Values g(n_i, n_i) = +-1 on an orthonormal basis."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or any(x not in (1, -1) for x in self.entries):
            raise ValueError("signature entries must be +1 or -1")

    @property
    def dim(self) -> int:
        return len(self.entries)

    @classmethod
    def euclidean(cls, d: int) -> "MetricSignature":
        return cls((1,) * d)

    @classmethod
    def parse(cls, text: str) -> "MetricSignature":
        vals = []
        for tok in text.replace(" ", "").split(","):
            if tok in ("+", "+1", "1"):
                vals.append(1)
            elif tok in ("-", "-1"):
                vals.append(-1)
            else:
                raise ValueError(f"bad signature entry {tok!r}")
        return cls(tuple(vals))

    def __str__(self):
        return ",".join("+" if x > 0 else "-" for x in self.entries)


@dataclass(frozen=True)
class ContractionSpec:
    """l contractions on the position pairs (1,2),(3,4),..; b0 fixes the remaining r-2l arguments."""

    r: int
    l: int
    b0: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "b0", tuple(int(x) for x in self.b0))
        if not 2 <= 2 * self.l <= self.r:
            raise ValueError("need 2 <= 2l <= r")
        if len(self.b0) != self.r - 2 * self.l:
            raise ValueError(f"b0 must have r - 2l = {self.r - 2 * self.l} entries")
        if any(x < 0 for x in self.b0):
            raise ValueError("basis indices must be nonnegative")

    def check_dim(self, d: int) -> None:
        if any(x >= d for x in self.b0):
            raise ValueError(f"b0 entries must be < d = {d}")

    def tuples(self, d: int):
        """(b, w) for every b of the form (w1,w1,..,wl,wl,b0) with w in [0,d)^l."""
        self.check_dim(d)
        for w in product(range(d), repeat=self.l):
            b = tuple(x for wi in w for x in (wi, wi)) + self.b0
            yield b, w

    @staticmethod
    def gamma(w: Sequence[int], g: MetricSignature) -> int:
        out = 1
        for wi in w:
            out *= g.entries[wi]
        return out

    def __str__(self):
        return f"l={self.l} b0={','.join(map(str, self.b0))}"


def t_b(T: TensorDense, b: Sequence[int], guard: int = DEFAULT_GUARD, force: bool = False) -> GroupRingElement:
    """The element sum_p T(v_b[p(1)], .., v_b[p(r)]) p."""
    b = tuple(b)
    if len(b) != T.order:
        raise DegreeMismatchError(f"need {T.order} indices, got {len(b)}")
    if any(not 0 <= x < T.dim for x in b):
        raise ValueError(f"indices must lie in [0, {T.dim})")
    terms = {}
    for p in enumerate_group(T.order, guard, force):
        c = T.data[tuple(b[j - 1] for j in p.images)]
        if c:
            terms[p] = c
    return GroupRingElement._trusted(T.order, terms)


def _integer_tensor(T: TensorDense):
    flat = T.data.reshape(-1)
    D = lcm(1, *(Fraction(x).denominator for x in flat))
    ints = [int(Fraction(x) * D) for x in flat]
    return D, ints


def apply_operator(a: GroupRingElement, T: TensorDense) -> TensorDense:
    """The tensor a T; integer arithmetic in int64 when magnitudes allow it."""
    if a.degree != T.order:
        raise DegreeMismatchError(f"operator of degree {a.degree} on a tensor of order {T.order}")
    Da = a.denominator_lcm()
    terms = [(p, int(c * Da)) for p, c in a.terms.items()]
    DT, ints = _integer_tensor(T)
    shape = (T.dim,) * T.order
    tmax = max((abs(x) for x in ints), default=0)
    cmax = sum(abs(c) for _, c in terms)
    if tmax * cmax < _INT64_SAFE:
        base = np.array(ints, dtype=np.int64).reshape(shape)
        acc = np.zeros(shape, dtype=np.int64)
        for p, c in terms:
            acc += c * np.transpose(base, _axes(p))
        acc = acc.astype(object)
    else:
        base = np.array(ints, dtype=object).reshape(shape)
        acc = np.zeros(shape, dtype=object)
        for p, c in terms:
            acc = acc + c * np.transpose(base, _axes(p))
    den = Da * DT
    out = np.empty(acc.size, dtype=object)
    for i, x in enumerate(acc.reshape(-1)):
        out[i] = Fraction(int(x), den)
    return TensorDense(T.order, T.dim, out.reshape(shape))


def membership(e: GroupRingElement, T: TensorDense, check: bool = True) -> bool:
    """True iff e T = T."""
    if check and not e.is_idempotent():
        raise NotIdempotentError("membership needs an idempotent")
    return apply_operator(e, T) == T


# --------------------------------------------------------------------------- symmetry classes


def _perm(*images) -> Permutation:
    return Permutation(images)


def riemann_generators() -> list[GroupRingElement]:
    """Antisymmetry in each index pair and the cyclic sum over the last three positions."""
    one = [1, 2, 3, 4]
    return [
        GroupRingElement.from_images(one, [2, 1, 3, 4]),
        GroupRingElement.from_images(one, [1, 2, 4, 3]),
        GroupRingElement.from_images(one, [1, 3, 4, 2], [1, 4, 2, 3]),
    ]


def symmetric_generators(r: int = 2) -> list[GroupRingElement]:
    """id - s_k for all adjacent transpositions: identities of totally symmetric tensors."""
    out = []
    for k in range(1, r):
        img = list(range(1, r + 1))
        img[k - 1], img[k] = img[k], img[k - 1]
        out.append(GroupRingElement(r, [(identity(r), 1), (Permutation(img), -1)]))
    return out


def antisymmetric_generators(r: int = 2) -> list[GroupRingElement]:
    out = []
    for k in range(1, r):
        img = list(range(1, r + 1))
        img[k - 1], img[k] = img[k], img[k - 1]
        out.append(GroupRingElement(r, [(identity(r), 1), (Permutation(img), 1)]))
    return out


@dataclass
class SymmetryClass:
    """
    The tensors satisfying ``a_i T = 0``.

    ``idempotent`` generates the left ideal that all T_b of class members lie
    in; ``projection`` (its star) maps arbitrary tensors into the class.
    """

    degree: int
    generators: list
    idempotent: BlockAlgebraElement
    decomposition: DecompositionResult | None
    empty: bool
    _group_ring: GroupRingElement | None = field(default=None, repr=False)

    @property
    def dimension(self) -> int:
        return self.idempotent.ideal_dimension()

    def multiplicities(self) -> PartitionMultiset:
        return PartitionMultiset(self.idempotent.block_ranks())

    def group_ring_idempotent(self) -> GroupRingElement:
        if self._group_ring is None:
            self._group_ring = self.idempotent.to_group_ring()
        return self._group_ring

    def projection(self) -> GroupRingElement:
        return self.group_ring_idempotent().star()

    def member(self, T0: TensorDense) -> TensorDense:
        return apply_operator(self.projection(), T0)

    def contains(self, T: TensorDense) -> bool:
        return apply_operator(self.projection(), T) == T


def symmetry_ideal_from_identities(generators: Sequence[GroupRingElement], decompose_class: bool = True,
                                   degree: int | None = None) -> SymmetryClass:
    """
    Left annihilator of {star(a_i)} with its generating idempotent.

    The right ideal ``sum star(a_i) R`` is decomposed on the right; the class
    idempotent is the complement of its total. With no generators (``degree``
    then required) the class is all tensors and the idempotent is 1.
    """
    gens = list(generators)
    if not gens and degree is None:
        raise ValueError("need at least one generator or an explicit degree")
    r = gens[0].degree if gens else degree
    if any(a.degree != r for a in gens):
        raise DegreeMismatchError("generators have different degrees")
    stars = [as_block(a.star()) for a in gens if not a.is_zero()]
    shape = rep_cache(r).shape
    if stars:
        e_hat = decompose(stars, "right").total
        e = e_hat.complement()
    else:
        e = BlockAlgebraElement.identity(shape)
    for s in stars:
        if not (e * s).is_zero():
            raise ArithmeticError("class idempotent does not annihilate a generator")
    if e.is_zero():
        return SymmetryClass(r, gens, e, None, True)
    dec = decompose([e], "left") if decompose_class else None
    return SymmetryClass(r, gens, e, dec, False)


# --------------------------------------------------------------------------- product and power ideals


@dataclass
class ConstructedIdeal:
    """A left ideal built from smaller ones, with its constituent check."""

    degree: int
    idempotent: BlockAlgebraElement
    multiplicities: PartitionMultiset
    expected: PartitionMultiset
    decomposition: DecompositionResult | None = None

    @property
    def dimension(self) -> int:
        return self.idempotent.ideal_dimension()

    @property
    def consistent(self) -> bool:
        return self.multiplicities == self.expected


def _multiset_of(e) -> PartitionMultiset:
    return ideal_multiplicities(e)


def product_ideal(ideals: Sequence[tuple[int, GroupRingElement]], decompose_result: bool = True,
                  guard: int = DEFAULT_GUARD, force: bool = False) -> ConstructedIdeal:
    """
    Ideal of the outer product: e_i shifted onto the points Delta_i+1 .. Delta_i+r_i and multiplied.

    The embedded idempotents commute, so their product is an idempotent; its
    constituents are checked against the Littlewood-Richardson product.
    """
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one factor")
    r = sum(ri for ri, _ in ideals)
    check_guard(r, guard, force)
    for ri, e in ideals:
        if e.degree != ri:
            raise DegreeMismatchError(f"idempotent of degree {e.degree} declared as {ri}")
    factors = []
    offset = 0
    for ri, e in ideals:
        factors.append(fourier(embed(e, offset, r)))
        offset += ri
    prod_e = factors[0]
    for f in factors[1:]:
        prod_e = prod_e * f
    if not prod_e.is_idempotent():
        raise NotIdempotentError("inputs are not idempotents")
    got = PartitionMultiset(prod_e.block_ranks())
    expected = lr_product([_multiset_of(e) for _, e in ideals])
    dec = None
    if decompose_result:
        dec = decompose([prod_e], "left")
        prod_e = dec.total
    out = ConstructedIdeal(r, prod_e, got, expected, dec)
    if not out.consistent:
        raise ArithmeticError(f"constituents {got} differ from the outer product {expected}")
    return out


def pair_group(n: int, m: int) -> list[Permutation]:
    """Permutations of S_mn moving the n consecutive blocks of size m rigidly."""
    from itertools import permutations as _perms
    out = []
    for image in _perms(range(n)):
        images = []
        for blk in range(n):
            tgt = image[blk]
            images.extend(tgt * m + k + 1 for k in range(m))
        out.append(Permutation(images))
    return sorted(out)


def power_ideal(e0: GroupRingElement, n: int, decompose_result: bool = True,
                guard: int = DEFAULT_GUARD, force: bool = False) -> ConstructedIdeal:
    """Ideal of e0 (.) [n]: n shifted copies times the average over rigid block permutations."""
    m = e0.degree
    r = m * n
    check_guard(r, guard, force)
    block = fourier(embed(e0, 0, r))
    for i in range(1, n):
        block = block * fourier(embed(e0, i * m, r))
    Q = pair_group(n, m)
    avg = fourier(GroupRingElement(r, [(q, Fraction(1, len(Q))) for q in Q]))
    e = block * avg
    if not e.is_idempotent():
        raise NotIdempotentError("e0 must be an idempotent")
    got = PartitionMultiset(e.block_ranks())
    expected = plethysm(_multiset_of(e0), n, guard, force)
    dec = None
    if decompose_result:
        dec = decompose([e], "left")
        e = dec.total
    out = ConstructedIdeal(r, e, got, expected, dec)
    if not out.consistent:
        raise ArithmeticError(f"constituents {got} differ from the plethysm {expected}")
    return out


# --------------------------------------------------------------------------- contractions


def contraction_sum(T: TensorDense, g: MetricSignature, spec: ContractionSpec,
                    guard: int = DEFAULT_GUARD, force: bool = False) -> GroupRingElement:
    """sum over b of gamma_b T_b, cross-checked against contracting every permuted tensor."""
    left = _contraction_sum_tb(T, g, spec, guard, force)
    right = contraction_sum_direct(T, g, spec, guard, force)
    if left != right:
        raise ArithmeticError("the two contraction routes disagree")
    return left


def _contraction_sum_tb(T, g, spec, guard, force):
    _check_contraction(T, g, spec)
    acc = GroupRingElement.zero(T.order)
    for b, w in spec.tuples(T.dim):
        gamma = spec.gamma(w, g)
        acc = acc + t_b(T, b, guard, force).scale(gamma)
    return acc


def _check_contraction(T, g, spec):
    if spec.r != T.order:
        raise DegreeMismatchError("contraction spec and tensor orders differ")
    if g.dim != T.dim:
        raise ShapeMismatchError("signature length differs from the tensor dimension")


def contraction_sum_direct(T: TensorDense, g: MetricSignature, spec: ContractionSpec,
                           guard: int = DEFAULT_GUARD, force: bool = False) -> GroupRingElement:
    """sum_p (contracted p T at b0) p, contracting position pairs by signed traces."""
    _check_contraction(T, g, spec)
    spec.check_dim(T.dim)
    sig = np.array([Fraction(x) for x in g.entries], dtype=object)
    terms = {}
    for p in enumerate_group(T.order, guard, force):
        X = np.transpose(T.data, _axes(p))
        for _ in range(spec.l):
            X = (np.diagonal(X, axis1=0, axis2=1) * sig).sum(axis=-1)
        c = X[tuple(spec.b0)] if spec.b0 else X
        c = Fraction(c)
        if c:
            terms[p] = c
    return GroupRingElement._trusted(T.order, terms)


@dataclass(frozen=True)
class Grouping:
    """b rewritten as p_b applied to the canonical tuple <lam; w>: b_i = g_{p_b(i)}."""

    partition: Partition
    vectors: tuple[int, ...]
    carrier: Permutation

    def canonical(self) -> tuple[int, ...]:
        return tuple(w for w, k in zip(self.vectors, self.partition) for _ in range(k))

    def reassemble(self) -> tuple[int, ...]:
        g = self.canonical()
        return tuple(g[self.carrier(i) - 1] for i in range(1, len(g) + 1))


def grouping(b: Sequence[int]) -> Grouping:
    """
    The smallest grouping of b and its carrier permutation.

    Distinct vectors are ordered by decreasing multiplicity, ties by
    increasing basis index; among the carriers the one with the
    lexicographically smallest image list is returned.
    """
    b = tuple(b)
    if not b:
        raise ValueError("empty index tuple")
    counts: dict[int, int] = {}
    for x in b:
        counts[x] = counts.get(x, 0) + 1
    vectors = tuple(sorted(counts, key=lambda x: (-counts[x], x)))
    lam = tuple(counts[x] for x in vectors)
    start, pos = {}, 1
    for x in vectors:
        start[x] = pos
        pos += counts[x]
    nxt = dict(start)
    images = []
    for x in b:
        images.append(nxt[x])
        nxt[x] += 1
    out = Grouping(lam, vectors, Permutation(images))
    assert out.reassemble() == b
    return out


def _row_group_generators(lam: Partition) -> list[Permutation]:
    r = sum(lam)
    gens = []
    start = 1
    for part in lam:
        for k in range(start, start + part - 1):
            img = list(range(1, r + 1))
            img[k - 1], img[k] = k + 1, k
            gens.append(Permutation(img))
        start += part
    return gens or [identity(r)]


def _pair_generators(r: int, l: int) -> list[Permutation]:
    """Generators of H_t * Q for the tableau with rows (1,2),..,(2l-1,2l),(2l+1),..,(r)."""
    gens = []
    for i in range(l):
        img = list(range(1, r + 1))
        img[2 * i], img[2 * i + 1] = 2 * i + 2, 2 * i + 1
        gens.append(Permutation(img))
    for i in range(l - 1):
        img = list(range(1, r + 1))
        a, b = 2 * i, 2 * i + 2
        img[a], img[a + 1], img[b], img[b + 1] = b + 1, b + 2, a + 1, a + 2
        gens.append(Permutation(img))
    return gens


def _multipliers(r: int, spec: ContractionSpec, mode: str, d: int | None, g: MetricSignature | None):
    """The elements B with W = sum_B B R e, in the block algebra."""
    if mode == "universal":
        return [fourier_of_group_sum(_pair_generators(r, spec.l))]
    if mode not in ("dim_limited", "dim-limited"):
        raise ValueError("mode must be 'universal' or 'dim_limited'")
    if d is None:
        raise ValueError("dim_limited mode needs d")
    g = g or MetricSignature.euclidean(d)
    if g.dim != d:
        raise ShapeMismatchError("signature length differs from d")
    coeffs: dict[tuple, dict] = {}
    for b, w in spec.tuples(d):
        grp = grouping(b)
        acc = coeffs.setdefault((grp.partition, grp.vectors), {})
        q = grp.carrier.inverse()
        acc[q] = acc.get(q, 0) + spec.gamma(w, g)
    out = []
    for (lam, _), terms in sorted(coeffs.items()):
        a = GroupRingElement(r, terms)
        if a.is_zero():
            continue
        H = fourier_of_group_sum(_row_group_generators(lam))
        fa = fourier(a, blocks=sorted(H.blocks))
        B = fa * H
        if not B.is_zero():
            out.append(B)
    return out


def contraction_space_blocks(e, spec: ContractionSpec, mode: str = "universal", d: int | None = None,
                             g: MetricSignature | None = None) -> list[RankOneElement]:
    """
    Basis of W as rank-one block elements.

    universal: W = 1_G R e with G the pair group of the contraction pattern.
    dim_limited: W = sum over groupings <lam; w> of a 1_H R e with
    a = sum gamma_b p_b^-1 over the b carried by that grouping and H the
    row group of the row tableau of lam.

    R e is split blockwise into the minimal ideals generated by C_{1,a}, a
    running over the reduced rows of each block of e, and each piece is
    handled by the subspace basis construction.
    """
    E = as_block(e)
    r = E.degree
    if r != spec.r:
        raise DegreeMismatchError("idempotent and contraction spec degrees differ")
    if not E.is_idempotent():
        raise NotIdempotentError("contraction_space needs an idempotent")
    if E.is_zero():
        return []
    Bs = _multipliers(r, spec, mode, d, g)
    basis = []
    for k, M in sorted(E.blocks.items()):
        if not any(k in B.blocks for B in Bs):
            continue
        n = E.shape.sizes[k]
        for a in la.row_space(M):
            A = BlockAlgebraElement._trusted(E.shape, {k: row_matrix(n, 0, a)})
            basis.extend(subspace_basis_rank_one(Bs, A))
    return basis


def contraction_space(e, spec: ContractionSpec, mode: str = "universal", d: int | None = None,
                      g: MetricSignature | None = None) -> list[GroupRingElement]:
    """Basis of W as group-ring elements."""
    return [x.to_group_ring() for x in contraction_space_blocks(e, spec, mode, d, g)]


def invariant_count_from_multiplicities(mult: PartitionMultiset, l: int) -> int:
    """Sum over mu |- l of the multiplicity of 2 mu."""
    return sum(mult.get(tuple(2 * x for x in mu), 0) for mu in enumerate_partitions(l))


def invariant_count(e, degree: int | None = None) -> int:
    """
    Bound M for the number of independent full contractions of tensors in the class of e.

    ``e`` is an idempotent or a PartitionMultiset; an empty multiset needs
    ``degree`` and gives 0.
    """
    mult = e if isinstance(e, PartitionMultiset) else ideal_multiplicities(e)
    r = mult.weight
    if r is None:
        if mult:
            raise ValueError("multiset mixes partitions of different sizes")
        r = degree if degree is not None else getattr(e, "degree", None)
        if r is None:
            raise ValueError("degree of an empty multiset is unknown")
    if degree is not None and degree != r:
        raise ValueError(f"multiset has weight {r}, expected {degree}")
    if r % 2:
        raise ValueError("invariant counts need an even order")
    return invariant_count_from_multiplicities(mult, r // 2)

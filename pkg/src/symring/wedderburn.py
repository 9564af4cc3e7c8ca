"""
The block-matrix algebra ``(+)_lam Q^{n_lam x n_lam}`` that Q[S_r] is isomorphic to.

Elements store only their nonzero blocks. Besides the arithmetic this module
holds the two constructions the decomposition algorithms rely on: the
closed-form solver for ``e*a*x*e = e`` with e primitive, and the fast basis
of spaces ``B * Q^{n x n} * A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from . import linalg as la
from .errors import NotPrimitiveError, ShapeMismatchError, ZeroProductError
from .partitions import Partition, dimension, enumerate_partitions, format_partition

__all__ = [
    "BlockShape", "block_shape", "BlockAlgebraElement", "canonical_minimal_idempotents",
    "solve_resolvent", "subspace_basis", "subspace_basis_rank_one", "row_matrix", "RankOneElement", "left_ideal_basis",
]


@dataclass(frozen=True)
class BlockShape:
    degree: int
    partitions: tuple[Partition, ...]
    sizes: tuple[int, ...]

    def index(self, lam: Partition) -> int:
        return self.partitions.index(tuple(lam))

    def __len__(self):
        return len(self.sizes)

    @property
    def total_dimension(self) -> int:
        return sum(n * n for n in self.sizes)


@lru_cache(maxsize=None)
def block_shape(r: int) -> BlockShape:
    parts = enumerate_partitions(r)
    return BlockShape(r, parts, tuple(dimension(lam) for lam in parts))


class BlockAlgebraElement:
    """Tuple of square rational matrices, one per partition; zero blocks are elided."""

    __slots__ = ("shape", "blocks")

    def __init__(self, shape: BlockShape, blocks: dict[int, la.Matrix] | None = None):
        self.shape = shape
        clean = {}
        for k, M in (blocks or {}).items():
            n = shape.sizes[k]
            if len(M) != n or any(len(row) != n for row in M):
                raise ShapeMismatchError(f"block {k} must be {n}x{n}")
            if not la.is_zero(M):
                clean[k] = M
        self.blocks = clean

    @classmethod
    def _trusted(cls, shape, blocks):
        x = object.__new__(cls)
        x.shape = shape
        x.blocks = blocks
        return x

    @classmethod
    def identity(cls, shape: BlockShape) -> "BlockAlgebraElement":
        return cls._trusted(shape, {k: la.eye(n) for k, n in enumerate(shape.sizes)})

    @classmethod
    def zero(cls, shape: BlockShape) -> "BlockAlgebraElement":
        return cls._trusted(shape, {})

    @classmethod
    def single(cls, shape: BlockShape, k: int, M: la.Matrix) -> "BlockAlgebraElement":
        return cls(shape, {k: M})

    @classmethod
    def matrix_unit(cls, shape: BlockShape, k: int, i: int, j: int, c=1) -> "BlockAlgebraElement":
        """c * C_ij inside block k (0-based i, j)."""
        M = la.zeros(shape.sizes[k])
        M[i][j] = Fraction(c)
        return cls._trusted(shape, {k: M})

    @property
    def degree(self) -> int:
        return self.shape.degree

    def block(self, k: int) -> la.Matrix:
        M = self.blocks.get(k)
        return M if M is not None else la.zeros(self.shape.sizes[k])

    def block_of(self, lam: Partition) -> la.Matrix:
        return self.block(self.shape.index(lam))

    def nonzero_blocks(self) -> list[int]:
        return sorted(self.blocks)

    def _check(self, other):
        if self.shape != other.shape:
            raise ShapeMismatchError("block shapes differ")

    def __add__(self, other):
        if not isinstance(other, BlockAlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.blocks)
        for k, M in other.blocks.items():
            S = la.mat_add(out[k], M) if k in out else M
            if la.is_zero(S):
                out.pop(k, None)
            else:
                out[k] = S
        return BlockAlgebraElement._trusted(self.shape, out)

    def __neg__(self):
        return BlockAlgebraElement._trusted(self.shape, {k: la.mat_scale(-1, M) for k, M in self.blocks.items()})

    def __sub__(self, other):
        if not isinstance(other, BlockAlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "BlockAlgebraElement":
        c = Fraction(c)
        if not c:
            return BlockAlgebraElement.zero(self.shape)
        return BlockAlgebraElement._trusted(self.shape, {k: la.mat_scale(c, M) for k, M in self.blocks.items()})

    def __mul__(self, other):
        if isinstance(other, BlockAlgebraElement):
            self._check(other)
            out = {}
            for k in self.blocks.keys() & other.blocks.keys():
                P = la.mat_mul(self.blocks[k], other.blocks[k])
                if not la.is_zero(P):
                    out[k] = P
            return BlockAlgebraElement._trusted(self.shape, out)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def transpose(self) -> "BlockAlgebraElement":
        """Anti-automorphism onto the opposite ring, used to mirror left/right algorithms."""
        return BlockAlgebraElement._trusted(self.shape, {k: la.transpose(M) for k, M in self.blocks.items()})

    def complement(self) -> "BlockAlgebraElement":
        """1 - self."""
        return BlockAlgebraElement.identity(self.shape) - self

    def is_zero(self) -> bool:
        return not self.blocks

    def __bool__(self):
        return bool(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, BlockAlgebraElement):
            return NotImplemented
        return self.shape == other.shape and self.blocks.keys() == other.blocks.keys() and all(
            self.blocks[k] == other.blocks[k] for k in self.blocks
        )

    __hash__ = None

    def block_ranks(self) -> dict[Partition, int]:
        return {self.shape.partitions[k]: la.rank(M) for k, M in sorted(self.blocks.items())}

    def rank(self) -> int:
        return sum(self.block_ranks().values())

    def ideal_dimension(self) -> int:
        """Dimension of the left (equally, right) ideal generated by this element."""
        return sum(self.shape.sizes[self.shape.index(lam)] * rk for lam, rk in self.block_ranks().items())

    def is_idempotent(self) -> bool:
        return self * self == self

    def is_primitive_idempotent(self) -> bool:
        return len(self.blocks) == 1 and self.rank() == 1 and self.is_idempotent()

    def single_block(self) -> tuple[int, la.Matrix]:
        if len(self.blocks) != 1:
            raise NotPrimitiveError(f"expected exactly one nonzero block, found {len(self.blocks)}")
        (k, M), = self.blocks.items()
        return k, M

    def left_ideal_key(self) -> tuple:
        """Canonical invariant of the left ideal R'*self (row spaces per block)."""
        return tuple((k, tuple(map(tuple, la.row_space(M)))) for k, M in sorted(self.blocks.items()))

    def right_ideal_key(self) -> tuple:
        return self.transpose().left_ideal_key()

    def coefficient(self, p) -> Fraction:
        """Coefficient of permutation p in the inverse Fourier image."""
        from .dft import evaluate
        return evaluate(self, p)

    def to_group_ring(self):
        from .dft import inverse_fourier
        return inverse_fourier(self)

    def dump(self) -> str:
        """Per-block dense matrices in fraction text form."""
        lines = [f"r={self.degree}"]
        for k, M in sorted(self.blocks.items()):
            lines.append(f"block {format_partition(self.shape.partitions[k])}")
            for row in M:
                lines.append(" ".join(str(Fraction(x)) for x in row))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        inner = ", ".join(f"{format_partition(self.shape.partitions[k])}: rank {la.rank(M)}" for k, M in sorted(self.blocks.items()))
        return f"BlockAlgebraElement(r={self.degree}, {{{inner}}})"


def canonical_minimal_idempotents(shape: BlockShape) -> Iterator[tuple[int, int, BlockAlgebraElement]]:
    """(block, j, C_jj) in block order then j ascending; together they sum to 1."""
    for k, n in enumerate(shape.sizes):
        for j in range(n):
            yield k, j, BlockAlgebraElement.matrix_unit(shape, k, j, j)


def _first_nonzero(v) -> int:
    return next(i for i, x in enumerate(v) if x)


def _factor_rank_one(E: la.Matrix) -> tuple[list, list]:
    """Write a rank-one matrix as the outer product f^t h, h the first nonzero row of E."""
    i0 = next(i for i, row in enumerate(E) if any(row))
    h = [Fraction(x) for x in E[i0]]
    c0 = _first_nonzero(h)
    f = [Fraction(E[k][c0]) / h[c0] for k in range(len(E))]
    return f, h


def solve_resolvent(e: BlockAlgebraElement, a: BlockAlgebraElement, side: str = "left") -> BlockAlgebraElement:
    """
    Return x with ``e*a*x*e == e`` (left) or ``e*x*a*e == e`` (right).

    e must be a primitive idempotent. The solution is a scaled matrix unit
    built from the factorisation E = f^t h; it is checked before returning.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if len(e.blocks) != 1:
        raise NotPrimitiveError("e must have exactly one nonzero block")
    k, E = e.single_block()
    if la.rank(E) != 1:
        raise NotPrimitiveError("the block of e must have rank 1")
    A = a.block(k)
    f, h = _factor_rank_one(E)
    n = len(E)
    if side == "left":
        m = la.vec_mat(h, A)
        if not any(m):
            raise ZeroProductError("e*a = 0")
        j0, k0 = _first_nonzero(m), _first_nonzero(f)
        X = la.zeros(n)
        X[j0][k0] = 1 / (m[j0] * f[k0])
        x = BlockAlgebraElement._trusted(e.shape, {k: X})
        ok = e * a * x * e == e
    else:
        col = la.mat_vec(A, f)
        if not any(col):
            raise ZeroProductError("a*e = 0")
        k0, j0 = _first_nonzero(h), _first_nonzero(col)
        X = la.zeros(n)
        X[k0][j0] = 1 / (h[k0] * col[j0])
        x = BlockAlgebraElement._trusted(e.shape, {k: X})
        ok = e * x * a * e == e
    if not ok:
        raise ArithmeticError("resolvent check failed; is e idempotent?")
    return x


def row_matrix(n: int, i: int, a) -> la.Matrix:
    """C_{i,a}: row i equal to a, all other rows zero."""
    M = la.zeros(n)
    M[i] = list(a)
    return M


def _check_minimal_generator(A: BlockAlgebraElement) -> tuple[int, list]:
    if A.is_zero():
        raise ValueError("A must be nonzero")
    k, Ak = A.single_block()
    if la.rank(Ak) != 1:
        raise NotPrimitiveError("A must generate a minimal left ideal (rank one block)")
    return k, next(row for row in Ak if any(row))


def subspace_basis(B: BlockAlgebraElement, A: BlockAlgebraElement) -> list[BlockAlgebraElement]:
    """
    Basis of ``B * R' * A`` for A generating a minimal left ideal of one block.

    Picks the first nonzero row a of A, solves sum_j b_ij lambda_j = 0 and
    keeps B*C_{i,a} for every non-parameter unknown lambda_i.
    """
    if B.is_zero():
        raise ValueError("B must be nonzero")
    return [x.to_block() for x in subspace_basis_rank_one([B], A)]


def subspace_basis_rank_one(Bs: Sequence[BlockAlgebraElement], A: BlockAlgebraElement) -> list:
    """
    Basis of ``sum_i B_i * R' * A`` in factored form.

    Every B_i*C_{j,a} equals (column j of B_i) a^t, so the pivot columns of
    the concatenation [B_1 | B_2 | ..] restricted to the block of A give the
    basis; for a single B these are exactly the pivot unknowns of the system
    sum_j b_ij lambda_j = 0.
    """
    k, a = _check_minimal_generator(A)
    mats = [B.blocks[k] for B in Bs if k in B.blocks]
    if not mats:
        return []
    joined = [sum((list(M[i]) for M in mats), []) for i in range(len(a))]
    _, pivots = la.rref(joined)
    out = []
    for j in pivots:
        col = [joined[i][j] for i in range(len(a))]
        out.append(RankOneElement(A.shape, k, col, a))
    return out


class RankOneElement:
    """
    The block element ``u a^t`` living in block k only, kept in factored form.

    Bases of W and of left ideals consist of such elements; storing the two
    vectors instead of dense blocks keeps large degrees affordable.
    """

    __slots__ = ("shape", "block", "column", "row")

    def __init__(self, shape: BlockShape, block: int, column, row):
        n = shape.sizes[block]
        if len(column) != n or len(row) != n:
            raise ShapeMismatchError(f"vectors must have length {n}")
        if not any(column) or not any(row):
            raise ValueError("factors must be nonzero")
        self.shape = shape
        self.block = block
        self.column = tuple(Fraction(x) for x in column)
        self.row = tuple(Fraction(x) for x in row)

    @property
    def degree(self) -> int:
        return self.shape.degree

    @property
    def partition(self) -> Partition:
        return self.shape.partitions[self.block]

    def to_block(self) -> BlockAlgebraElement:
        M = [[u * a for a in self.row] for u in self.column]
        return BlockAlgebraElement._trusted(self.shape, {self.block: M})

    def coefficient(self, p) -> Fraction:
        from .dft import evaluate_rank_one
        return evaluate_rank_one([self], [p])[0][0]

    def to_group_ring(self):
        return self.to_block().to_group_ring()

    def __repr__(self):
        return f"RankOneElement(r={self.degree}, block={format_partition(self.partition)})"


def left_ideal_basis(E: BlockAlgebraElement) -> list[RankOneElement]:
    """Basis C_{i,a} of R'*E: i runs over all rows, a over the reduced row space of each block."""
    out = []
    for k, M in sorted(E.blocks.items()):
        n = E.shape.sizes[k]
        for a in la.row_space(M):
            for i in range(n):
                u = [0] * n
                u[i] = 1
                out.append(RankOneElement(E.shape, k, u, a))
    return out

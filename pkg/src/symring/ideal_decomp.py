"""
Generating idempotents of left and right ideals of Q[S_r] and their
decomposition into pairwise orthogonal primitive idempotents.

Everything runs in the block algebra. A left ideal ``sum_i R a_i`` is swept
by the seeds ``C_jj * a_i`` (blocks in reverse-lex order, j ascending,
generators in input order); a seed not yet inside the accumulated ideal is
turned into a primitive idempotent, orthogonalized against the running total
and appended. Right ideals go through the transpose, which is an
anti-automorphism of the block algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import linalg as la
from .errors import ContainmentError, NotIdempotentError, ZeroProductError
from .group_ring import GroupRingElement
from .partitions import Partition, format_partition
from .wedderburn import BlockAlgebraElement, solve_resolvent

__all__ = [
    "Seed", "DecompositionResult", "idempotent_from_product", "orthogonalize", "decompose",
    "idempotent_for_sum", "idempotent_for_intersection", "as_block", "generated_multiplicities",
]


def as_block(a) -> BlockAlgebraElement:
    if isinstance(a, BlockAlgebraElement):
        return a
    if isinstance(a, GroupRingElement):
        from .dft import fourier
        return fourier(a)
    raise TypeError(f"expected a group ring or block algebra element, got {type(a).__name__}")


def _check_side(side: str) -> str:
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    return side


def idempotent_from_product(e: BlockAlgebraElement, a: BlockAlgebraElement, side: str = "left") -> BlockAlgebraElement:
    """
    Idempotent generating R*e*a (left) or a*e*R (right), e primitive.

    Left: x*e*a with e*(e*a)*x*e = e. Right: a*e*x with e*x*(a*e)*e = e.
    """
    _check_side(side)
    a = as_block(a)
    if side == "left":
        ea = e * a
        if ea.is_zero():
            raise ZeroProductError("e*a = 0")
        x = solve_resolvent(e, ea, "left")
        out = x * ea
        same = out.left_ideal_key() == ea.left_ideal_key()
    else:
        ae = a * e
        if ae.is_zero():
            raise ZeroProductError("a*e = 0")
        x = solve_resolvent(e, ae, "right")
        out = ae * x
        same = out.right_ideal_key() == ae.right_ideal_key()
    if not out.is_idempotent() or not same:
        raise ArithmeticError("constructed idempotent failed verification")
    return out


def _complement_in_block(et: BlockAlgebraElement, k: int) -> BlockAlgebraElement:
    """Block k of 1 - et, all other blocks zero (enough when the partner lives in block k)."""
    n = et.shape.sizes[k]
    return BlockAlgebraElement(et.shape, {k: la.mat_sub(la.eye(n), et.block(k))})


def _orthogonalize(e: BlockAlgebraElement, et: BlockAlgebraElement):
    k, _ = e.single_block()
    if e * et == e:
        raise ContainmentError("R*e is contained in R*et")
    c = _complement_in_block(et, k)
    x = solve_resolvent(e, c, "left")
    f = c * x * e
    xt = solve_resolvent(f, c, "left")
    z = c * xt * f
    ft = et - z * et
    return f, ft, z


def orthogonalize(e: BlockAlgebraElement, et: BlockAlgebraElement) -> tuple[BlockAlgebraElement, BlockAlgebraElement]:
    """
    Replace (e, et) by (f, ft) generating the same left ideals with f*ft = ft*f = 0.

    e must be primitive and R*e not contained in R*et.
    """
    f, ft, _ = _orthogonalize(e, et)
    checks = (
        f.left_ideal_key() == e.left_ideal_key(),
        ft.left_ideal_key() == et.left_ideal_key(),
        (f * ft).is_zero(),
        (ft * f).is_zero(),
    )
    if not all(checks):
        raise ArithmeticError("orthogonalization failed verification")
    return f, ft


@dataclass(frozen=True)
class Seed:
    """Which ``C_jj * a_i`` produced a component: block label, row j (0-based), generator index."""

    partition: Partition
    row: int
    generator: int

    def __str__(self):
        return f"C[{format_partition(self.partition)}]_{self.row + 1},{self.row + 1} * a_{self.generator + 1}"


@dataclass
class DecompositionResult:
    side: str
    idempotents: list[BlockAlgebraElement]
    labels: list[Partition]
    seeds: list[Seed]
    total: BlockAlgebraElement
    inspections: int = 0
    _group_ring: list | None = field(default=None, repr=False)
    _total_group_ring: GroupRingElement | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.idempotents)

    @property
    def degree(self) -> int:
        return self.total.degree

    def multiplicities(self):
        from .characters import PartitionMultiset
        out: dict = {}
        for lam in self.labels:
            out[lam] = out.get(lam, 0) + 1
        return PartitionMultiset(out)

    def dimension(self) -> int:
        return self.total.ideal_dimension()

    def component_dimensions(self) -> list[int]:
        return [h.ideal_dimension() for h in self.idempotents]

    def group_ring_idempotents(self) -> list[GroupRingElement]:
        if self._group_ring is None:
            self._group_ring = [h.to_group_ring() for h in self.idempotents]
        return self._group_ring

    def total_group_ring(self) -> GroupRingElement:
        if self._total_group_ring is None:
            self._total_group_ring = self.total.to_group_ring()
        return self._total_group_ring

    def verify(self) -> None:
        """Raise ArithmeticError unless all structural invariants hold exactly."""
        hs = self.idempotents
        acc = BlockAlgebraElement.zero(self.total.shape)
        for i, h in enumerate(hs):
            if not h.is_primitive_idempotent():
                raise ArithmeticError(f"component {i} is not a primitive idempotent")
            k, _ = h.single_block()
            if self.total.shape.partitions[k] != self.labels[i]:
                raise ArithmeticError(f"component {i} has the wrong label")
            for j in range(i + 1, len(hs)):
                if hs[j].blocks.keys() & h.blocks.keys():
                    if not (h * hs[j]).is_zero() or not (hs[j] * h).is_zero():
                        raise ArithmeticError(f"components {i} and {j} are not orthogonal")
            acc = acc + h
        if acc != self.total:
            raise ArithmeticError("components do not sum to the total idempotent")


def _left_decompose(gens: list[BlockAlgebraElement], bounds: Mapping[Partition, int] | None) -> DecompositionResult:
    shape = gens[0].shape
    hs: list[BlockAlgebraElement] = []
    labels: list[Partition] = []
    seeds: list[Seed] = []
    total: BlockAlgebraElement | None = None
    inspections = 0
    found: dict[int, int] = {}
    bound_of = None
    if bounds is not None:
        bound_of = {k: bounds.get(lam, 0) for k, lam in enumerate(shape.partitions)}
    for k, n in enumerate(shape.sizes):
        if bound_of is not None and bound_of[k] == 0:
            continue
        rows = [(i, g.blocks.get(k)) for i, g in enumerate(gens)]
        rows = [(i, A) for i, A in rows if A is not None]
        if not rows:
            continue
        for j in range(n):
            for i, A in rows:
                if bound_of is not None and found.get(k, 0) >= bound_of[k]:
                    break
                v = A[j]
                if not any(v):
                    continue
                inspections += 1
                if total is not None and k in total.blocks and la.vec_mat(v, total.blocks[k]) == list(v):
                    continue
                M = la.zeros(n)
                M[j] = list(v)
                ya = BlockAlgebraElement._trusted(shape, {k: M})
                y = BlockAlgebraElement.matrix_unit(shape, k, j, j)
                e = idempotent_from_product(y, ya, "left")
                if total is None:
                    f, total = e, e
                else:
                    f, ft, z = _orthogonalize(e, total)
                    hs = [h - z * h if k in h.blocks else h for h in hs]
                    total = ft + f
                hs.append(f)
                labels.append(shape.partitions[k])
                seeds.append(Seed(shape.partitions[k], j, i))
                found[k] = found.get(k, 0) + 1
    if total is None:
        total = BlockAlgebraElement.zero(shape)
    return DecompositionResult("left", hs, labels, seeds, total, inspections)


def _generated_ranks(gens: list[BlockAlgebraElement]) -> dict[int, int]:
    shape = gens[0].shape
    out = {}
    for k in range(len(shape)):
        stacked = [row for g in gens if k in g.blocks for row in g.blocks[k]]
        if stacked:
            rk = la.rank(stacked)
            if rk:
                out[k] = rk
    return out


def decompose(generators: Sequence, side: str = "left", multiplicity_bounds: Mapping[Partition, int] | None = None,
              verify: bool = True) -> DecompositionResult:
    """
    Orthogonal primitive idempotents for ``sum_i R a_i`` (left) or ``sum_i a_i R`` (right).

    With ``multiplicity_bounds`` (constituent multiplicities of the ideal,
    e.g. from ideal_multiplicities) the sweep of a block stops as soon as its
    quota is met; ``inspections`` counts the containment tests performed.
    Bounds below the true multiplicities raise ValueError when verifying.
    """
    _check_side(side)
    gens = [as_block(a) for a in generators]
    if not gens or all(g.is_zero() for g in gens):
        raise ValueError("all generators are zero")
    shapes = {g.shape for g in gens}
    if len(shapes) != 1:
        raise ValueError("generators have different degrees")
    work = gens if side == "left" else [g.transpose() for g in gens]
    res = _left_decompose(work, multiplicity_bounds)
    if side == "right":
        res = DecompositionResult(
            "right", [h.transpose() for h in res.idempotents], res.labels, res.seeds,
            res.total.transpose(), res.inspections,
        )
    if verify:
        res.verify()
        expected = _generated_ranks(work)
        got = {k: la.rank(M) for k, M in (res.total.transpose() if side == "right" else res.total).blocks.items()}
        if expected != got:
            if multiplicity_bounds is not None:
                raise ValueError("multiplicity bounds are smaller than the constituents of the generated ideal")
            raise ArithmeticError("decomposition does not span the generated ideal")
        if side == "left":
            if any(g * res.total != g for g in gens):
                raise ArithmeticError("a generator is not fixed by the total idempotent")
        elif any(res.total * g != g for g in gens):
            raise ArithmeticError("a generator is not fixed by the total idempotent")
    return res


def generated_multiplicities(generators: Sequence, side: str = "left"):
    """Constituent multiplicities of sum R a_i (left) or sum a_i R (right), from block ranks."""
    from .characters import PartitionMultiset
    gens = [as_block(a) for a in generators]
    if not gens:
        raise ValueError("need at least one generator")
    work = gens if _check_side(side) == "left" else [g.transpose() for g in gens]
    shape = gens[0].shape
    return PartitionMultiset({shape.partitions[k]: rk for k, rk in _generated_ranks(work).items()})


def idempotent_for_sum(generators: Sequence, side: str = "left") -> BlockAlgebraElement:
    return decompose(generators, side).total


def idempotent_for_intersection(idempotents: Sequence, side: str = "left") -> BlockAlgebraElement:
    """
    Generating idempotent of ``cap_i R e_i`` (left) or ``cap_i e_i R`` (right).

    The annihilator of the intersection is the sum of the annihilators
    ``(1 - e_i) R``; decomposing that on the opposite side gives e_hat and
    the answer is ``1 - e_hat``.
    """
    _check_side(side)
    es = [as_block(e) for e in idempotents]
    if not es:
        raise ValueError("need at least one idempotent")
    for e in es:
        if not e.is_idempotent():
            raise NotIdempotentError("intersection inputs must be idempotents")
    shape = es[0].shape
    comps = [e.complement() for e in es]
    if all(c.is_zero() for c in comps):
        return BlockAlgebraElement.identity(shape)
    opposite = "right" if side == "left" else "left"
    e_hat = decompose(comps, opposite).total
    out = e_hat.complement()
    if not out.is_idempotent():
        raise ArithmeticError("intersection idempotent is not idempotent")
    for e in es:
        if (out * e if side == "left" else e * out) != out:
            raise ArithmeticError("intersection idempotent does not lie in every ideal")
    return out

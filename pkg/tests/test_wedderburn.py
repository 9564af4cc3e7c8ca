import random
from fractions import Fraction

import pytest

from symring.dft import fourier, inverse_fourier
from symring.errors import NotPrimitiveError, ZeroProductError
from symring.group_ring import GroupRingElement, young_symmetrizer
from symring.partitions import standard_tableaux
from symring.perm import enumerate_group
from symring.wedderburn import (
    BlockAlgebraElement, block_shape, canonical_minimal_idempotents, left_ideal_basis, row_matrix, solve_resolvent,
    subspace_basis, subspace_basis_rank_one,
)

from .oracles import rank, random_element


def test_shape():
    s = block_shape(4)
    assert s.partitions == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert s.sizes == (1, 3, 2, 3, 1)
    assert s.total_dimension == 24
    assert s.index((2, 2)) == 2


def test_canonical_idempotents_sum_to_one():
    s = block_shape(4)
    total = BlockAlgebraElement.zero(s)
    units = list(canonical_minimal_idempotents(s))
    assert len(units) == 10
    for _, _, c in units:
        assert c.is_primitive_idempotent()
        total = total + c
    assert total == BlockAlgebraElement.identity(s)


def test_arithmetic_and_predicates():
    s = block_shape(3)
    e = BlockAlgebraElement.matrix_unit(s, 1, 0, 0)
    f = BlockAlgebraElement.matrix_unit(s, 1, 1, 1)
    assert (e * f).is_zero()
    assert (e + f).is_idempotent() and not (e + f).is_primitive_idempotent()
    assert (e + f).ideal_dimension() == 4
    assert e.complement().ideal_dimension() == 4
    assert e.block_ranks() == {(2, 1): 1}
    assert (e.scale(2) - e) == e
    assert BlockAlgebraElement(s, {0: [[0]]}).is_zero()


def test_left_right_keys():
    s = block_shape(3)
    a = BlockAlgebraElement(s, {1: [[1, 2], [2, 4]]})
    b = BlockAlgebraElement(s, {1: [[3, 6], [0, 0]]})
    assert a.left_ideal_key() == b.left_ideal_key()
    assert a.right_ideal_key() != b.right_ideal_key()


def test_resolvent():
    rng = random.Random(7)
    s = block_shape(4)
    for k, j, e in canonical_minimal_idempotents(s):
        a = fourier(random_element(4, rng, support=8))
        if (e * a).is_zero():
            with pytest.raises(ZeroProductError):
                solve_resolvent(e, a, "left")
            continue
        x = solve_resolvent(e, a, "left")
        assert e * a * x * e == e
        if not (a * e).is_zero():
            y = solve_resolvent(e, a, "right")
            assert e * y * a * e == e


def test_resolvent_needs_primitive():
    s = block_shape(3)
    with pytest.raises(NotPrimitiveError):
        solve_resolvent(BlockAlgebraElement.identity(s), BlockAlgebraElement.identity(s))


def test_young_symmetrizer_block_is_rank_one():
    for t in standard_tableaux((3, 1)):
        Y = fourier(young_symmetrizer(t))
        assert list(Y.blocks) == [1]
        assert Y.rank() == 1


def _span_rank(elements, r):
    G = list(enumerate_group(r))
    return rank([[x.coefficient(p) for p in G] for x in elements])


def test_subspace_basis_against_group_ring_products():
    rng = random.Random(11)
    r = 4
    shape = block_shape(r)
    G = list(enumerate_group(r))
    for k in range(len(shape)):
        n = shape.sizes[k]
        a_row = [rng.randint(-2, 2) or 1 for _ in range(n)]
        A = BlockAlgebraElement(shape, {k: row_matrix(n, 0, a_row)})
        b = random_element(r, rng, support=5)
        B = fourier(b)
        if k not in B.blocks:
            continue
        basis = subspace_basis(B, A)
        a = inverse_fourier(A)
        oracle = [b * GroupRingElement.from_perm(p) * a for p in G]
        assert len(basis) == _span_rank(oracle, r)
        assert _span_rank(basis + oracle, r) == len(basis)


def test_rank_one_union_matches_sum_of_subspaces():
    rng = random.Random(2)
    r = 4
    shape = block_shape(r)
    k = shape.index((3, 1))
    A = BlockAlgebraElement(shape, {k: row_matrix(3, 0, [1, -1, 2])})
    Bs = [fourier(random_element(r, rng, support=3)) for _ in range(3)]
    union = subspace_basis_rank_one(Bs, A)
    separate = [x for B in Bs if k in B.blocks for x in subspace_basis(B, A)]
    assert len(union) == _span_rank(separate, r)
    assert _span_rank([x.to_block() for x in union] + separate, r) == len(union)


def test_left_ideal_basis_dimension():
    e = fourier(young_symmetrizer(standard_tableaux((2, 2))[0]).scale(Fraction(2, 24)))
    basis = left_ideal_basis(e)
    assert len(basis) == 2 == e.ideal_dimension()
    one = BlockAlgebraElement.identity(block_shape(3))
    assert len(left_ideal_basis(one)) == 6


def test_dump():
    s = block_shape(2)
    text = BlockAlgebraElement(s, {0: [[Fraction(1, 2)]]}).dump()
    assert text == "r=2\nblock 2\n1/2\n"

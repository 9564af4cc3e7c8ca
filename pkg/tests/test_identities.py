import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symring.group_ring import GroupRingElement
from symring.identities import (
    Expression, coefficient_table, identity_value, orthogonal_identities, reduce_expression, split_by_idempotents,
    standard_identity_expression,
)
from symring.perm import Permutation, enumerate_group, identity
from symring.tensor_symmetry import (
    ContractionSpec, TensorDense, antisymmetric_generators, contraction_space_blocks, riemann_generators,
    symmetric_generators, symmetry_ideal_from_identities,
)
from symring.wedderburn import left_ideal_basis

from .oracles import rank

SWAP = Permutation([2, 1])
ID2 = identity(2)


def class_basis(gens):
    sc = symmetry_ideal_from_identities(gens)
    return sc, left_ideal_basis(sc.idempotent)


def test_symmetric_identity():
    W = [GroupRingElement(2, [(ID2, 1), (SWAP, 1)])]
    ids = orthogonal_identities(W, [ID2, SWAP])
    assert ids.vectors == [{SWAP: 1, ID2: -1}]
    assert ids.pivots == [SWAP]
    tau = Expression.from_terms(2, [(1, ID2), (1, SWAP)])
    assert reduce_expression(tau, ids) == Expression(2, {ID2: 2})
    assert reduce_expression(Expression(2, {ID2: 5}), ids) == Expression(2, {ID2: 5})


def test_full_and_empty_w():
    G = list(enumerate_group(3))
    full = [GroupRingElement.from_perm(p) for p in G]
    assert len(orthogonal_identities(full, G)) == 0
    ids = orthogonal_identities([], [Permutation([2, 1, 3])])
    assert ids.vectors == [{Permutation([2, 1, 3]): 1}]


def test_antisymmetric_trace_vanishes():
    sc = symmetry_ideal_from_identities(antisymmetric_generators(3), decompose_class=False)
    spec = ContractionSpec(3, 1, (0,))
    W = contraction_space_blocks(sc.idempotent, spec)
    assert W == []
    tau = Expression(3, {identity(3): 1}, spec)
    assert reduce_expression(tau, orthogonal_identities(W, [identity(3)])).is_zero()


def test_dimension_law_and_projection():
    rng = random.Random(1)
    sc, W = class_basis(riemann_generators())
    G = list(enumerate_group(4))
    cands = rng.sample(G, 10)
    ids = orthogonal_identities(W, cands)
    w_proj = rank(coefficient_table(W, cands))
    assert len(ids) + w_proj == len(cands)
    assert ids.w_rank == w_proj
    assert set(ids.normal_support()) | set(ids.pivots) == set(cands)
    for _ in range(5):
        tau = Expression(4, {p: Fraction(rng.randint(-3, 3)) for p in cands})
        red = reduce_expression(tau, ids)
        assert reduce_expression(red, ids) == red
        assert set(red.terms) <= set(ids.normal_support())
        diff = tau - red
        assert rank([[v.get(p, 0) for p in cands] for v in ids.vectors]
                    + [[diff.terms.get(p, 0) for p in cands]]) == len(ids)


def test_riemann_consequences_reduce_to_zero():
    sc, W = class_basis(riemann_generators())
    G = list(enumerate_group(4))
    ids = orthogonal_identities(W, G)
    assert len(ids) == 22 and ids.w_rank == 2
    one = identity(4)
    pair = Expression(4, {one: 1, Permutation([3, 4, 1, 2]): -1})
    bianchi = Expression(4, {one: 1, Permutation([1, 3, 4, 2]): 1, Permutation([1, 4, 2, 3]): 1})
    assert reduce_expression(pair, ids).is_zero()
    assert reduce_expression(bianchi, ids).is_zero()


def test_identities_annihilate_members():
    rng = random.Random(2)
    for gens, r in [(symmetric_generators(2), 2), (antisymmetric_generators(2), 2), (riemann_generators(), 4)]:
        sc, W = class_basis(gens)
        ids = orthogonal_identities(W, list(enumerate_group(r)))
        for _ in range(3):
            T = sc.member(TensorDense.random(3, r, rng))
            for vec in ids.vectors:
                for b in [tuple(rng.randrange(3) for _ in range(r)) for _ in range(5)]:
                    assert identity_value(vec, T, b) == 0


def test_reduce_rejects_foreign_permutations():
    ids = orthogonal_identities([GroupRingElement.identity(2)], [ID2])
    with pytest.raises(ValueError):
        reduce_expression(Expression(2, {SWAP: 1}), ids)


def test_split_by_idempotents():
    sc, W = class_basis(riemann_generators())
    G = list(enumerate_group(4))
    bianchi = Expression(4, {identity(4): 1, Permutation([1, 3, 4, 2]): 1, Permutation([1, 4, 2, 3]): 1})
    direct = reduce_expression(bianchi, orthogonal_identities(W, G))
    parts = split_by_idempotents(bianchi, sc.decomposition)
    assert len(parts) == 1
    (h, tau), = parts
    assert tau == bianchi
    assert reduce_expression(tau, orthogonal_identities(left_ideal_basis(h), G)) == direct

    whole = symmetry_ideal_from_identities([], degree=2)
    parts = split_by_idempotents(Expression(2, {ID2: 1, SWAP: 1}), whole.decomposition)
    assert len(parts) == 2
    reduced = [reduce_expression(t, orthogonal_identities(left_ideal_basis(h), [ID2, SWAP])) for h, t in parts]
    assert sorted(len(x.terms) for x in reduced) == [0, 1]


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2 ** 30))
def test_reduction_is_linear(seed):
    rng = random.Random(seed)
    sc, W = class_basis(riemann_generators())
    G = list(enumerate_group(4))
    ids = orthogonal_identities(W, G)
    a = Expression(4, {p: Fraction(rng.randint(-2, 2)) for p in rng.sample(G, 5)})
    b = Expression(4, {p: Fraction(rng.randint(-2, 2)) for p in rng.sample(G, 5)})
    s = Expression.from_terms(4, list((c, p) for p, c in a.terms.items()) + list((c, p) for p, c in b.terms.items()))
    ra, rb, rs = (reduce_expression(x, ids) for x in (a, b, s))
    assert rs == Expression.from_terms(4, [(c, p) for c, p in ra.sorted_terms() + rb.sorted_terms()])


def test_standard_identity_expression_shape():
    tau = standard_identity_expression()
    assert tau.degree == 8 and len(tau.terms) == 24
    assert sum(tau.terms.values()) == 0
    assert tau.terms[Permutation([7, 1, 2, 3, 4, 5, 6, 8])] == 1

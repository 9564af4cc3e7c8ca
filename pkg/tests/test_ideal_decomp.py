import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symring.characters import PartitionMultiset, ideal_multiplicities
from symring.dft import fourier
from symring.errors import ContainmentError, NotIdempotentError
from symring.group_ring import GroupRingElement, young_symmetrizer
from symring.ideal_decomp import (
    decompose, generated_multiplicities, idempotent_for_intersection, idempotent_for_sum, idempotent_from_product,
    orthogonalize,
)
from symring.partitions import dimension, enumerate_partitions, standard_tableaux
from symring.wedderburn import BlockAlgebraElement, block_shape

from .oracles import left_ideal_dimension, random_element


def test_full_ring_r4():
    res = decompose([GroupRingElement.identity(4)])
    assert len(res) == 10
    assert res.multiplicities() == PartitionMultiset({lam: dimension(lam) for lam in enumerate_partitions(4)})
    assert res.total == BlockAlgebraElement.identity(block_shape(4))
    assert res.component_dimensions() == [dimension(lam) for lam in res.labels]


def test_right_side():
    res = decompose([GroupRingElement.identity(3)], side="right")
    assert len(res) == 4
    assert res.side == "right"
    for h in res.idempotents:
        assert h.is_primitive_idempotent()


def test_young_symmetrizer_is_one_component():
    t = standard_tableaux((2, 2))[1]
    res = decompose([young_symmetrizer(t)])
    assert len(res) == 1
    assert res.labels == [(2, 2)]
    assert res.dimension() == 2
    assert str(res.seeds[0]).startswith("C[2,2]_")


def test_group_ring_components_are_idempotents():
    res = decompose([young_symmetrizer(standard_tableaux((2, 1))[0])])
    (h,) = res.group_ring_idempotents()
    assert h * h == h
    assert res.total_group_ring() == h


def test_multiplicity_bounds_prune():
    gens = [GroupRingElement.identity(4)]
    plain = decompose(gens)
    pruned = decompose(gens, multiplicity_bounds=ideal_multiplicities(GroupRingElement.identity(4)))
    assert pruned.multiplicities() == plain.multiplicities()
    assert pruned.inspections <= plain.inspections
    partial = decompose(gens, multiplicity_bounds={(3, 1): 2}, verify=False)
    assert partial.multiplicities() == PartitionMultiset({(3, 1): 2})
    with pytest.raises(ValueError):
        decompose(gens, multiplicity_bounds={(3, 1): 2})


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 30), st.integers(3, 4), st.integers(1, 3), st.sampled_from(["left", "right"]))
def test_random_ideals(seed, r, k, side):
    rng = random.Random(seed)
    gens = [random_element(r, rng, support=3) for _ in range(k)]
    if all(g.is_zero() for g in gens):
        return
    res = decompose(gens, side)
    if side == "left":
        assert res.dimension() == left_ideal_dimension(gens, r)
    else:
        assert res.dimension() == left_ideal_dimension([g.star() for g in gens], r)
    assert res.multiplicities() == generated_multiplicities(gens, side)
    shuffled = list(gens)
    rng.shuffle(shuffled)
    assert decompose(shuffled, side).multiplicities() == res.multiplicities()


def test_orthogonalize():
    s = block_shape(3)
    e = BlockAlgebraElement(s, {1: [[1, 0], [1, 0]]})
    et = BlockAlgebraElement(s, {1: [[0, 0], [0, 1]], 0: [[1]]})
    f, ft = orthogonalize(e, et)
    assert (f * ft).is_zero() and (ft * f).is_zero()
    assert f.left_ideal_key() == e.left_ideal_key()
    assert ft.left_ideal_key() == et.left_ideal_key()
    with pytest.raises(ContainmentError):
        orthogonalize(BlockAlgebraElement.matrix_unit(s, 0, 0, 0), et)


def test_idempotent_from_product():
    s = block_shape(3)
    e = BlockAlgebraElement.matrix_unit(s, 1, 0, 0)
    a = BlockAlgebraElement(s, {1: [[2, 3], [1, 1]]})
    for side in ("left", "right"):
        x = idempotent_from_product(e, a, side)
        assert x.is_idempotent() and x.rank() == 1


def test_sum_and_intersection_of_s2_ideals():
    sym = GroupRingElement.from_images([1, 2], [2, 1]).scale(Fraction(1, 2))
    alt = GroupRingElement.identity(2) - sym
    assert idempotent_for_sum([sym, alt]) == BlockAlgebraElement.identity(block_shape(2))
    assert idempotent_for_intersection([sym, alt]).is_zero()
    assert idempotent_for_intersection([sym, sym]) == fourier(sym)


def test_intersection_inside_s4():
    rng = random.Random(4)
    res = decompose([random_element(4, rng, support=6), random_element(4, rng, support=6)])
    e1 = res.total
    e2 = decompose([GroupRingElement.identity(4)], multiplicity_bounds={(3, 1): 3, (2, 2): 1}, verify=False).total
    e = idempotent_for_intersection([e1, e2])
    assert e * e1 == e and e * e2 == e
    with pytest.raises(NotIdempotentError):
        idempotent_for_intersection([fourier(GroupRingElement.from_images([2, 1, 3]))])


def test_zero_generators_rejected():
    with pytest.raises(ValueError):
        decompose([GroupRingElement.zero(3)])

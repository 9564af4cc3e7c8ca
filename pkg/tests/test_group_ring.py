import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symring.errors import DegreeMismatchError, NotASubgroupError
from symring.group_ring import GroupRingElement, closure, embed, group_sum, young_symmetrizer
from symring.partitions import enumerate_partitions, row_tableau, standard_tableaux
from symring.perm import Permutation, enumerate_group, identity

from .oracles import random_element


def elements(r):
    return st.integers(0, 2 ** 30).map(lambda seed: random_element(r, random.Random(seed)))


def test_zero_coefficients_dropped():
    a = GroupRingElement(2, {identity(2): 0, Permutation([2, 1]): Fraction(1, 2)})
    assert a.support() == [Permutation([2, 1])]
    assert (a - a).is_zero()


def test_product_uses_composition():
    p, q = Permutation([2, 3, 1]), Permutation([2, 1, 3])
    prod = GroupRingElement.from_perm(p) * GroupRingElement.from_perm(q)
    assert prod == GroupRingElement.from_perm(p * q)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        GroupRingElement.identity(2) + GroupRingElement.identity(3)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 4).flatmap(lambda r: st.tuples(elements(r), elements(r), elements(r))))
def test_ring_axioms(triple):
    a, b, c = triple
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).star() == b.star() * a.star()
    assert a.star().star() == a


def test_young_symmetrizer_support():
    y = young_symmetrizer(row_tableau((2, 1)))
    assert y == GroupRingElement.from_images([1, 2, 3], [2, 1, 3]) - GroupRingElement.from_images([3, 1, 2], [3, 2, 1])


def test_young_symmetrizers_orthogonal_across_shapes():
    ts = [t for lam in enumerate_partitions(4) for t in standard_tableaux(lam)[:1]]
    for i, s in enumerate(ts):
        for t in ts[i + 1:]:
            assert (young_symmetrizer(s) * young_symmetrizer(t)).is_zero()


def test_group_sums():
    G = closure([Permutation([2, 1, 3, 4]), Permutation([1, 2, 4, 3])])
    assert len(G) == 4
    s = group_sum(G)
    assert s * s == s.scale(4)
    with pytest.raises(NotASubgroupError):
        group_sum([identity(3), Permutation([2, 3, 1])])


def test_embed():
    a = GroupRingElement.from_images([2, 1])
    b = embed(a, 2, 4)
    assert b == GroupRingElement.from_images([1, 2, 4, 3])
    assert embed(GroupRingElement.from_images([2, 1]), 0, 4) * b == b * embed(a, 0, 4)
    with pytest.raises(ValueError):
        embed(a, 3, 4)


def test_regular_sum_is_central():
    r = 3
    s = GroupRingElement(r, [(p, 1) for p in enumerate_group(r)])
    x = random_element(r, random.Random(5))
    assert s * x == x * s

import math
from fractions import Fraction

import pytest

from symring.characters import (
    PartitionMultiset, character_table, class_function_multiplicities, ideal_multiplicities, lr_coefficient,
    lr_product, mn_character, plethysm,
)
from symring.errors import GuardError, NotIdempotentError
from symring.group_ring import GroupRingElement
from symring.partitions import dimension, enumerate_partitions
from symring.perm import class_representative

from .oracles import induced_product_multiplicities, irreducible_character, wreath_plethysm


def test_table_s3():
    t = character_table(3)
    assert t.classes == ((1, 1, 1), (2, 1), (3,))
    assert t.values == ((1, 1, 1), (2, 0, -1), (1, -1, 1))
    assert t.class_sizes == (1, 3, 2)
    assert t[(2, 1), (3,)] == -1


def test_mn_matches_regular_representation_oracle():
    for r in range(1, 5):
        for lam in enumerate_partitions(r):
            for mu in enumerate_partitions(r):
                assert mn_character(lam, mu) == irreducible_character(lam, class_representative(mu))


def test_orthogonality_r8():
    t = character_table(8)
    n = math.factorial(8)
    for i, a in enumerate(t.values):
        for j, b in enumerate(t.values):
            assert sum(s * x * y for s, x, y in zip(t.class_sizes, a, b)) == (n if i == j else 0)
        assert a[0] == dimension(t.irreps[i])


def test_guard():
    with pytest.raises(GuardError):
        character_table(9)


def test_lr_small():
    assert lr_product([(1,), (1,)]) == PartitionMultiset({(2,): 1, (1, 1): 1})
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2, 1), (1,), (4,)) == 0


def test_lr_matches_induced_characters():
    for lam, mu in [((2,), (1,)), ((2, 1), (1,)), ((2,), (2,)), ((1, 1), (2,)), ((2, 1), (2,))]:
        assert dict(lr_product([lam, mu])) == induced_product_multiplicities(lam, mu)


def test_lr_dimension_count():
    for lam in enumerate_partitions(3):
        for mu in enumerate_partitions(3):
            m = lr_product([lam, mu])
            assert m.dimension() == math.comb(6, 3) * dimension(lam) * dimension(mu)


def test_lr_riemann_square():
    m = lr_product([(2, 2), (2, 2)])
    assert str(m) == "[4,4] + [4,3,1] + [4,2,2] + [3,3,1,1] + [3,2,2,1] + [2,2,2,2]"
    assert m.dimension() == math.comb(8, 4) * 4


def test_plethysm_matches_wreath_oracle():
    for alpha in [(2,), (1, 1), (3,)]:
        for n in (1, 2):
            assert dict(plethysm(alpha, n)) == wreath_plethysm(alpha, n)
    assert dict(plethysm((2,), 3)) == wreath_plethysm((2,), 3)
    assert dict(plethysm((1, 1), 3)) == wreath_plethysm((1, 1), 3)


def test_plethysm_dimension():
    m = plethysm((2, 1), 2)
    # V (x) V for the 2-dimensional [2,1], induced from the wreath group of index 10
    assert m.dimension() == 10 * 4


def test_multiset_text():
    m = PartitionMultiset.parse("[4] + 2*[2,2]")
    assert m == PartitionMultiset({(4,): 1, (2, 2): 2})
    assert str(m) == "[4] + 2*[2,2]"
    assert PartitionMultiset.parse(str(m)) == m
    assert str(PartitionMultiset()) == "0"
    assert m.weight == 4 and PartitionMultiset({(1,): 1, (2,): 1}).weight is None


def test_class_function_multiplicities():
    regular = {mu: (math.factorial(4) if mu == (1, 1, 1, 1) else 0) for mu in enumerate_partitions(4)}
    m = class_function_multiplicities(4, regular)
    assert m == PartitionMultiset({lam: dimension(lam) for lam in enumerate_partitions(4)})
    with pytest.raises(ArithmeticError):
        class_function_multiplicities(2, {(1, 1): Fraction(1, 2), (2,): 0})


def test_ideal_multiplicities():
    sym = GroupRingElement.from_images([1, 2], [2, 1]).scale(Fraction(1, 2))
    assert ideal_multiplicities(sym) == PartitionMultiset({(2,): 1})
    assert ideal_multiplicities(GroupRingElement.identity(3)) == PartitionMultiset({(3,): 1, (2, 1): 2, (1, 1, 1): 1})
    with pytest.raises(NotIdempotentError):
        ideal_multiplicities(GroupRingElement.from_images([1, 2], [2, 1]))

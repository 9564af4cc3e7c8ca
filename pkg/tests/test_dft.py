import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symring.dft import (
    _RHO_MAX, evaluate, evaluate_rank_one, fixed_space_multiplicity, fourier, fourier_of_group_sum, inverse_fourier,
    rep_cache, rep_matrix,
)
from symring.errors import GuardError
from symring.group_ring import GroupRingElement, closure, group_sum
from symring.partitions import enumerate_partitions
from symring.perm import Permutation, class_representative, enumerate_group, identity
from symring.wedderburn import BlockAlgebraElement, RankOneElement, block_shape

from .oracles import random_element


def elements(r):
    return st.integers(0, 2 ** 30).map(lambda seed: random_element(r, random.Random(seed), support=6))


def test_rep_matrices_small():
    assert rep_matrix((2,), Permutation([2, 1])) == [[1]]
    assert rep_matrix((1, 1), Permutation([2, 1])) == [[-1]]
    M = np.array(rep_matrix((2, 1), Permutation([2, 3, 1])))
    assert np.trace(M) == -1
    assert np.array_equal(np.linalg.matrix_power(M, 3), np.eye(2, dtype=int))


def test_homomorphism_on_all_pairs_s4():
    for rep in rep_cache(4):
        G = list(enumerate_group(4))
        for p in G:
            for q in G[::5]:
                assert np.array_equal(rep.matrix(p * q), rep.matrix(p) @ rep.matrix(q))


def test_traces_are_characters_r6():
    from symring.characters import mn_character
    for lam in enumerate_partitions(6):
        for mu in enumerate_partitions(6):
            assert np.trace(np.array(rep_matrix(lam, class_representative(mu)))) == mn_character(lam, mu)


def test_coxeter_relations_up_to_8():
    for r in range(2, 9):
        assert all(rep.check_coxeter() for rep in rep_cache(r))


def test_entry_bound_table_exhaustive_up_to_7():
    for r in range(1, 8):
        G = list(enumerate_group(r))
        assert max(int(np.abs(rep.matrix(p)).max()) for rep in rep_cache(r) for p in G) == _RHO_MAX[r]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5).flatmap(lambda r: st.tuples(elements(r), elements(r))))
def test_fourier_is_an_algebra_isomorphism(pair):
    a, b = pair
    A, B = fourier(a), fourier(b)
    assert fourier(a * b) == A * B
    assert fourier(a + b) == A + B
    assert inverse_fourier(A) == a
    # the natural representation is not orthogonal, so only ranks survive the star
    assert fourier(a.star()).block_ranks() == A.block_ranks()


def test_identity_and_units():
    for r in range(1, 6):
        assert fourier(GroupRingElement.identity(r)) == BlockAlgebraElement.identity(block_shape(r))
        assert inverse_fourier(BlockAlgebraElement.identity(block_shape(r))) == GroupRingElement.identity(r)


def test_evaluate_matches_inverse():
    rng = random.Random(3)
    a = random_element(5, rng, support=10)
    A = fourier(a)
    for p in list(enumerate_group(5))[::7]:
        assert evaluate(A, p) == a.coefficient(p)


def test_inverse_guard():
    A = BlockAlgebraElement.identity(block_shape(9))
    with pytest.raises(GuardError):
        inverse_fourier(A)


def test_rank_one_evaluation():
    shape = block_shape(4)
    k = shape.index((3, 1))
    x = RankOneElement(shape, k, [1, Fraction(-2, 3), 0], [0, 1, 5])
    a = x.to_group_ring()
    perms = list(enumerate_group(4))
    assert evaluate_rank_one([x], perms)[0] == [a.coefficient(p) for p in perms]


def test_group_sum_shortcut():
    cases = [
        [Permutation([2, 1, 3, 4]), Permutation([1, 2, 4, 3])],
        [Permutation([3, 4, 1, 2]), Permutation([2, 1, 3, 4])],
        [Permutation([2, 3, 1, 4])],
        [Permutation([2, 1, 3, 4, 5]), Permutation([1, 3, 2, 4, 5]), Permutation([1, 2, 3, 5, 4])],
    ]
    for gens in cases:
        G = closure(gens)
        assert fourier_of_group_sum(gens) == fourier(group_sum(G))


def test_fixed_space_multiplicity():
    S2 = closure([Permutation([2, 1, 3])])
    assert fixed_space_multiplicity(S2, (2, 1)) == 1
    assert fixed_space_multiplicity(S2, (1, 1, 1)) == 0
    assert fixed_space_multiplicity([identity(3)], (2, 1)) == 2

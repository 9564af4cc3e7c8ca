import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symring import io
from symring.dft import fourier
from symring.errors import ParseError
from symring.identities import Expression, orthogonal_identities
from symring.perm import identity, Permutation
from symring.tensor_symmetry import ContractionSpec, TensorDense, riemann_generators

from .oracles import random_element


@settings(max_examples=30)
@given(st.integers(0, 2 ** 30), st.integers(1, 5))
def test_element_roundtrip(seed, r):
    a = random_element(r, random.Random(seed))
    text = io.format_element(a)
    assert io.parse_element(text) == a
    assert io.format_element(io.parse_element(text)) == text


def test_element_syntax():
    a = io.parse_element("# comment\nr=2\n1/2 : 1 2   # trailing\n-3 : 2 1\n1/2 : 1 2\n")
    assert a.coefficient(identity(2)) == 1
    assert a.coefficient(Permutation([2, 1])) == -3
    assert io.format_element(a) == "r=2\n1 : 1 2\n-3 : 2 1\n"
    assert io.parse_element("r=3\n").is_zero()


@pytest.mark.parametrize("text, line", [
    ("r=2\n1 : 1 2\nx : 2 1\n", 3),
    ("r=2\n1 : 1 1\n", 2),
    ("r=2\n1 : 1 2 3\n", 2),
    ("r=2\n\n1 1 2\n", 3),
    ("q=2\n", 1),
])
def test_parse_errors_name_the_line(text, line):
    with pytest.raises(ParseError) as info:
        io.parse_element(text, "f.txt")
    assert info.value.line == line
    assert f"f.txt:{line}" in str(info.value)


def test_symmetry_roundtrip():
    text = io.format_symmetry(4, riemann_generators())
    r, gens = io.parse_symmetry(text)
    assert r == 4 and gens == riemann_generators()
    with pytest.raises(ParseError):
        io.parse_symmetry("1 : 1 2\n")


def test_expression_and_identities_roundtrip():
    spec = ContractionSpec(4, 1, (0, 2))
    tau = Expression(4, {identity(4): Fraction(2, 3), Permutation([2, 1, 3, 4]): -1}, spec)
    text = io.format_expression(tau)
    assert text.splitlines()[0] == "r=4 l=1 b0=0,2"
    back = io.parse_expression(text)
    assert back == tau and back.spec == spec
    ids = orthogonal_identities([random_element(3, random.Random(1))], [identity(3), Permutation([2, 1, 3])])
    r, _, exprs = io.parse_identities(io.format_identities(ids))
    assert r == 3 and [e.terms for e in exprs] == ids.vectors
    with pytest.raises(ParseError):
        io.parse_expression("r=4 b0=1\n")


def test_tensor_roundtrip():
    T = TensorDense.random(2, 3, random.Random(3))
    assert io.parse_tensor(io.format_tensor(T)) == T
    with pytest.raises(ParseError):
        io.parse_tensor("d=2 r=2\n1 2 3\n")


def test_blocks_roundtrip():
    A = fourier(random_element(4, random.Random(9), support=6))
    assert io.parse_blocks(io.format_blocks(A)) == A
    doc = io.blocks_to_json(A)
    assert doc["r"] == 4
    with pytest.raises(ParseError):
        io.parse_blocks("r=3\nblock 2,1\n1 0\n")


def test_contraction_and_signature():
    spec = io.parse_contraction("l=1 b0=0,1", 4)
    assert spec == ContractionSpec(4, 1, (0, 1))
    assert io.format_contraction(spec) == "l=1 b0=0,1"
    with pytest.raises(ParseError):
        io.parse_contraction("l=1", 4)
    assert io.parse_signature("-,+,+,+").entries == (-1, 1, 1, 1)
    with pytest.raises(ParseError):
        io.parse_signature("+,0")

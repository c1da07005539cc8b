from __future__ import annotations

import numpy as np
import pytest

from sdfa.corpus import CorpusSpec, build_corpus
from sdfa.dsl import DslError, parse_elements, parse_ideal, parse_ring, parse_spec
from sdfa.errors import InputError
from sdfa.ideals import Ideal


@pytest.mark.parametrize(
    "text, order",
    [
        ("zn(12)", 12),
        ("prod(zn(4),zn(6))", 24),
        ("gf(2,[1,1,1])", 4),
        ("polyq(3,[0,0,1])", 9),
        ("idealize(zn(3);mod=0)", 9),
        ("idealize(zn(12);mod=ideal(zn(12);gens=[4]))", 48),
        ("amalg(zn(4),zn(4),hom=id,j=[2])", 8),
        ("amalg(zn(4),zn(2),hom=canonical,j=[1])", 8),
        ("quot(zn(12);gens=[4])", 4),
        ("loc(zn(12);s=[1,4])", 3),
        ("  prod( zn(2) , zn(2) , zn(2) ) ", 8),
    ],
)
def test_parse_ring_orders(text, order):
    assert parse_ring(text).order == order


def test_corpus_labels_round_trip():
    for R in build_corpus(CorpusSpec(zn_max=20)):
        S = parse_ring(R.label)
        assert S.label == R.label
        assert np.array_equal(S.add, R.add) and np.array_equal(S.mul, R.mul)


def test_parse_ideal_and_spec():
    I = parse_ideal("ideal(prod(zn(3),zn(3),zn(3));gens=[(0,0,1)])")
    assert I.size == 3
    assert isinstance(parse_spec("ideal(zn(12);gens=[4])"), Ideal)
    assert parse_spec("zn(5)").order == 5
    assert parse_ideal("ideal(zn(8);gens=[])").is_zero
    assert parse_ideal(I.label).members.tolist() == I.members.tolist()


def test_raw_indices_and_element_lists():
    R = parse_ring("prod(zn(2),zn(3))")
    assert parse_elements(R, "[#5, (1,2), [0,1]]") == [5, 5, 1]
    P = parse_ring("polyq(2,[0,0,0,1])")
    assert parse_elements(P, "[[1], [0,1]]") == [1, 2]


@pytest.mark.parametrize(
    "text, pos",
    [
        ("zn(", 3),
        ("zn(12", 5),
        ("zn(12))", 6),
        ("zz(3)", 0),
        ("prod(zn(2))", 0),
        ("zn(4) $", 6),
        ("gf(2,[1,0,1])", 0),
        ("idealize(zn(4);mod=ideal(zn(8);gens=[2]))", 19),
        ("amalg(zn(4),zn(4),hom=id)", 0),
        ("zn(x)", 3),
    ],
)
def test_errors_carry_positions(text, pos):
    with pytest.raises(DslError) as err:
        parse_ring(text)
    assert err.value.pos == pos
    assert "position" in str(err.value)


def test_bad_elements_are_input_errors():
    with pytest.raises(InputError):
        parse_ideal("ideal(zn(4);gens=[(1,1)])")
    with pytest.raises(InputError):
        parse_ideal("ideal(zn(4);gens=[#9])")

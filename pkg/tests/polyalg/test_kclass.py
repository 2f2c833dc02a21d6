from fractions import Fraction

import pytest

from schubdeg.polyalg.kclass import KElem, KElemError, character_ring
from schubdeg.polyalg.ring import root_ring


def test_hyperplane_class_and_string():
    element = KElem.one_minus_exp((1, 0))

    assert str(element) == "1 - e^(a1)"
    assert element.augmentation() == 0
    assert str(KElem.zero(2)) == "0"


def test_products_collect_terms():
    product = KElem.one_minus_exp((1, 0)) * KElem.one_minus_exp((0, 1))

    assert product.terms == {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1}
    assert (product - product).is_zero
    assert product * 2 == product + product


def test_rank_mismatch():
    with pytest.raises(KElemError):
        KElem.one(2) + KElem.one(3)
    with pytest.raises(KElemError):
        KElem(2, {(1,): 1})


def test_exponential_truncation():
    ring = root_ring(2)
    a1 = ring.gen("a1")

    expansion = KElem.exp((1, 0)).exponential_truncation(2)

    assert expansion == 1 + a1 + a1**2 * Fraction(1, 2)


def test_lowest_degree_part_is_the_cohomology_class():
    element = KElem.one_minus_exp((-1, 0)) * KElem.one_minus_exp((0, -1))

    degree, part = element.lowest_degree_part(3)

    ring = root_ring(2)
    assert degree == 2
    assert part == ring.gen("a1") * ring.gen("a2")
    assert KElem.zero(2).lowest_degree_part(3) is None


def test_payload():
    assert KElem.exp((0, 1)).to_payload() == [{"weight": [0, 1], "coefficient": 1}]


def test_laurent_terms_are_a_shifted_polynomial():
    element = KElem.one_minus_exp((-1, 0))
    t1, _ = character_ring(2).gens

    assert element.shift == (-1, 0)
    assert element.element == t1 - 1
    assert element.terms == {(0, 0): 1, (-1, 0): -1}


def test_inverse_weights_cancel():
    product = KElem.exp((1, -2)) * KElem.exp((-1, 2))

    assert product == KElem.one(2)
    assert product.shift == (0, 0)
    assert KElem(2, {(3, 1): 0}).is_zero

import pytest

from schubdeg.bruhat.order import bruhat_leq
from schubdeg.polyalg.kclass import KElem
from schubdeg.polyalg.ring import root_ring
from schubdeg.roots.root_system import build_root_system
from schubdeg.roots.weyl import element_from_word, longest_element, weyl_group_elements
from schubdeg.subword.complex import SubwordError, subword_complex
from schubdeg.subword.restriction import (
    billey_restriction,
    exponential_truncation,
    is_positive,
    ktheory_restriction_direct,
    ktheory_restriction_recursive,
    lowest_degree_part,
    restriction_recursive,
    restriction_table,
    weighted_facet_sum,
)


@pytest.fixture
def a2():
    return build_root_system("A2")


def test_simple_reflection_at_longest_element(a2):
    ring = root_ring(2)
    s1 = element_from_word(a2, (1,))
    w0 = longest_element(a2)

    expected = ring.gen("a1") + ring.gen("a2")
    assert billey_restriction((1, 2, 1), s1) == expected
    assert billey_restriction((2, 1, 2), s1) == expected
    assert restriction_recursive(s1, w0) == expected
    assert str(expected) == "a1 + a2"


def test_restriction_to_itself_is_the_product_of_inversions(a2):
    ring = root_ring(2)
    a1, a2_ = ring.gens()
    w0 = longest_element(a2)

    assert restriction_recursive(w0, w0) == a1 * a2_ * (a1 + a2_)


def test_vanishing_off_the_interval(a2):
    s1 = element_from_word(a2, (1,))
    s2 = element_from_word(a2, (2,))

    assert restriction_recursive(s1, s2).is_zero
    assert ktheory_restriction_recursive(s1, s2).is_zero


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_three_formulas_agree(label):
    root_system = build_root_system(label)
    w0 = longest_element(root_system)
    word = w0.reduced_word
    for w in weyl_group_elements(root_system):
        recursive = restriction_recursive(w, w0)
        assert billey_restriction(word, w) == recursive
        assert weighted_facet_sum(subword_complex(word, w)) == recursive
        assert is_positive(recursive)


@pytest.mark.parametrize("label", ["A2", "B2"])
def test_ktheory_direct_matches_recursion_and_truncates_to_cohomology(label):
    root_system = build_root_system(label)
    for v in weyl_group_elements(root_system):
        for w in weyl_group_elements(root_system):
            if not bruhat_leq(w, v):
                continue
            k = ktheory_restriction_recursive(w, v)
            assert ktheory_restriction_direct(v.reduced_word, w) == k
            assert exponential_truncation(k, w.length) == restriction_recursive(w, v)
    assert lowest_degree_part(KElem.one(root_system.rank), 3) == root_ring(2).one()


def test_ktheory_direct_for_a_simple_reflection(a2):
    s1 = element_from_word(a2, (1,))
    lambda_1 = KElem.one_minus_exp((-1, 0))
    lambda_3 = KElem.one_minus_exp((0, -1))

    direct = ktheory_restriction_direct((1, 2, 1), s1)

    assert direct == lambda_1 + lambda_3 - lambda_1 * lambda_3


def test_direct_formulas_need_reduced_words(a2):
    s1 = element_from_word(a2, (1,))
    with pytest.raises(SubwordError):
        billey_restriction((1, 1), s1)
    with pytest.raises(SubwordError):
        ktheory_restriction_direct((1, 1), s1)


def test_mixed_root_systems_rejected(a2):
    b2 = build_root_system("B2")
    with pytest.raises(SubwordError):
        restriction_recursive(element_from_word(a2, (1,)), element_from_word(b2, (1,)))


def test_restriction_table(a2):
    w0 = longest_element(a2)

    table = restriction_table(w0, weyl_group_elements(a2))

    assert len(table) == 6
    assert table[element_from_word(a2, ())] == root_ring(2).one()


def test_is_positive():
    ring = root_ring(2)
    a1, a2 = ring.gens()

    assert is_positive(a1 + 2 * a2)
    assert not is_positive(a1 - a2)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_ktheory_classes_augment_to_zero_away_from_the_identity(label):
    root_system = build_root_system(label)
    elements = weyl_group_elements(root_system)
    for v in elements:
        for w in elements:
            if w.is_identity or not bruhat_leq(w, v):
                continue
            assert ktheory_restriction_recursive(w, v).augmentation() == 0
        assert ktheory_restriction_recursive(elements[0], v).augmentation() == 1

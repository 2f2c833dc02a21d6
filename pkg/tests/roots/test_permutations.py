import pytest

from schubdeg.roots.permutations import (
    from_permutation,
    inverse_permutation,
    parse_permutation,
    permutation_of_word,
    to_permutation,
    word_of_permutation,
)
from schubdeg.roots.root_system import build_root_system
from schubdeg.roots.weyl import WeylElementError, element_from_word, weyl_group_elements


def test_word_to_one_line():
    assert permutation_of_word((1, 2), 3) == (2, 3, 1)
    assert permutation_of_word((), 3) == (1, 2, 3)
    assert permutation_of_word((1, 2, 1), 3) == (3, 2, 1)


def test_one_line_to_word():
    assert word_of_permutation((2, 3, 1)) == (1, 2)
    assert word_of_permutation((1, 2, 3)) == ()


def test_bridge_is_consistent_in_s4():
    a3 = build_root_system("A3")
    for element in weyl_group_elements(a3):
        perm = to_permutation(element)
        assert from_permutation(a3, perm) == element
        assert len(word_of_permutation(perm)) == element.length


def test_from_permutation():
    a2 = build_root_system("A2")
    assert from_permutation(a2, (2, 3, 1)) == element_from_word(a2, (1, 2))


def test_type_a_only():
    b2 = build_root_system("B2")
    with pytest.raises(WeylElementError):
        to_permutation(element_from_word(b2, (1,)))


def test_wrong_length_rejected():
    a2 = build_root_system("A2")
    with pytest.raises(WeylElementError):
        from_permutation(a2, (2, 1))


def test_parse_permutation():
    assert parse_permutation("2, 3, 1") == (2, 3, 1)
    with pytest.raises(WeylElementError):
        parse_permutation("1,1,2")
    with pytest.raises(WeylElementError):
        parse_permutation("1,x")


def test_inverse_permutation():
    assert inverse_permutation((2, 3, 1)) == (3, 1, 2)


def test_letter_out_of_range():
    with pytest.raises(WeylElementError):
        permutation_of_word((3,), 3)

import pytest

from schubdeg.roots.root_system import build_root_system
from schubdeg.roots.weyl import element_from_word, longest_element
from schubdeg.subword.complex import (
    SubwordError,
    billey_roots,
    facet_complements,
    interior_faces,
    reduced_subword_positions,
    subword_complex,
    subword_topology,
)


@pytest.fixture
def a2():
    return build_root_system("A2")


def test_billey_roots(a2):
    assert billey_roots(a2, (1, 2, 1)) == [(1, 0), (1, 1), (0, 1)]
    assert billey_roots(a2, (2, 1, 2)) == [(0, 1), (1, 1), (1, 0)]


def test_billey_roots_in_b2():
    b2 = build_root_system("B2")
    assert sorted(billey_roots(b2, (1, 2, 1, 2))) == sorted(b2.positive_roots)


def test_reduced_subwords(a2):
    s1 = element_from_word(a2, (1,))
    assert reduced_subword_positions((1, 2, 1), s1) == [(1,), (3,)]


def test_complex_of_a_simple_reflection(a2):
    complex_ = subword_complex((1, 2, 1), element_from_word(a2, (1,)))

    assert complex_.complex.sorted_facets() == [(1, 2), (2, 3)]
    assert complex_.complex.vertices == (1, 2, 3)
    assert not complex_.is_sphere
    assert complex_.demazure == (1, 2, 1)
    assert sorted(map(sorted, facet_complements(complex_))) == [[1], [3]]


def test_longest_element_gives_empty_face(a2):
    complex_ = subword_complex((1, 2, 1), longest_element(a2))

    assert complex_.complex.sorted_facets() == [()]
    assert complex_.is_sphere


def test_void_complex(a2):
    complex_ = subword_complex((1,), element_from_word(a2, (2,)))
    assert complex_.is_void


def test_letters_must_be_in_range(a2):
    with pytest.raises(SubwordError):
        subword_complex((1, 3), element_from_word(a2, (1,)))
    with pytest.raises(SubwordError):
        billey_roots(a2, (0,))


def test_interior_faces(a2):
    complex_ = subword_complex((1, 2, 1), element_from_word(a2, (1,)))
    assert interior_faces(complex_) == [(2,), (1, 2), (2, 3)]


def test_ball_topology(a2):
    topology = subword_topology(subword_complex((1, 2, 1), element_from_word(a2, (1,))))

    assert topology.all_hold
    assert not topology.is_sphere
    assert topology.homology.is_acyclic


def test_sphere_topology(a2):
    topology = subword_topology(subword_complex((1, 1), element_from_word(a2, (1,))))

    assert topology.is_sphere
    assert topology.homology.betti == [0, 1]
    assert topology.all_hold


def test_void_topology(a2):
    topology = subword_topology(subword_complex((2,), element_from_word(a2, (1,))))

    assert topology.is_void
    assert topology.homology is None


@pytest.mark.parametrize("word", [(1, 2, 1, 2, 1), (2, 1, 2, 1, 2), (1, 2, 2, 1, 2)])
def test_every_complex_in_a2_is_well_behaved(a2, word):
    for w_word in [(), (1,), (2,), (1, 2), (2, 1), (1, 2, 1)]:
        w = element_from_word(a2, w_word)
        topology = subword_topology(subword_complex(word, w))
        assert topology.all_hold


def test_serialization_uses_q_alias(a2):
    payload = subword_complex((1, 2, 1), element_from_word(a2, (1,))).model_dump(
        mode="json", by_alias=True
    )

    assert payload["Q"] == [1, 2, 1]
    assert payload["is_void"] is False
    assert "w" not in payload

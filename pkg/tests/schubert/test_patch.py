import pytest

from schubdeg.polyalg.hilbert import multidegree
from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.ring import root_ring
from schubdeg.schubert.patch import (
    PatchChart,
    PatchError,
    all_permutations,
    epsilon_difference,
    kl_patch_ideal,
    northwest_rank,
    patch_chart,
)

W0 = (3, 2, 1)


@pytest.mark.parametrize(
    "a, b, expected", [(1, 3, (1, 1)), (3, 1, (-1, -1)), (2, 3, (0, 1)), (1, 2, (1, 0))]
)
def test_epsilon_difference(a, b, expected):
    assert epsilon_difference(a, b, 3) == expected


def test_northwest_rank():
    assert northwest_rank((2, 1, 3), 1, 1) == 0
    assert northwest_rank((2, 1, 3), 1, 2) == 1
    assert northwest_rank((2, 1, 3), 3, 3) == 3


def test_chart_weights_at_longest_element():
    chart = patch_chart(W0)

    assert chart.ring.names == ("z21", "z31", "z32")
    assert chart.declared_weights == {"z21": (0, 1), "z31": (1, 1), "z32": (1, 0)}
    assert chart.line_variable is None


def test_matrix_places_rows_by_v():
    chart = patch_chart(W0)
    _, z31, z32 = chart.ring.gens()

    matrix = chart.matrix()

    assert matrix[0] == [z31, z32, chart.ring.one()]
    assert matrix[2] == [chart.ring.one(), chart.ring.zero(), chart.ring.zero()]


def test_adapted_chart_mixes_in_the_line_coordinate():
    chart = patch_chart(W0, adapted=1)
    z21, z31, z32 = chart.ring.gens()

    assert chart.line_variable == "z21"
    assert chart.unipotent()[2][0] == z31 + z21 * z32


@pytest.mark.parametrize(
    "v, adapted", [((1, 1, 2), None), ((1,), None), ((2, 1, 3), 3), ((2, 1, 3), 0)]
)
def test_invalid_charts(v, adapted):
    with pytest.raises(ValueError):
        PatchChart(v=v, adapted=adapted)


def test_identity_patch_is_everything():
    assert kl_patch_ideal((1, 2, 3), W0).is_zero


def test_top_patch_is_a_point():
    ideal = kl_patch_ideal(W0, W0)
    assert ideal.equals(Ideal.parse(ideal.ring, "z21; z31; z32"))


def test_simple_reflection_patch_is_a_hyperplane():
    ideal = kl_patch_ideal((2, 1, 3), W0)
    assert ideal.equals(Ideal.parse(ideal.ring, "z31"))


def test_patch_is_empty_away_from_the_interval():
    assert kl_patch_ideal((2, 1, 3), (1, 3, 2)).is_unit()


def test_codimension_is_length_and_multidegree_is_positive():
    chart = patch_chart(W0)
    ring = root_ring(2)
    a1, a2 = ring.gens()
    expected = {
        (1, 2, 3): (0, ring.one()),
        (2, 1, 3): (1, a1 + a2),
        (1, 3, 2): (1, a1 + a2),
        (2, 3, 1): (2, a1 * (a1 + a2)),
        (3, 1, 2): (2, a2 * (a1 + a2)),
        (3, 2, 1): (3, a1 * a2 * (a1 + a2)),
    }
    for w, (length, value) in expected.items():
        ideal = kl_patch_ideal(w, W0)
        assert ideal.codimension() == length
        assert multidegree(ideal, chart.weights()) == value


def test_size_mismatch():
    with pytest.raises(PatchError):
        kl_patch_ideal((1, 2), W0)
    with pytest.raises(PatchError):
        kl_patch_ideal((1, 1, 2), W0)


def test_all_permutations():
    perms = all_permutations(3)

    assert len(perms) == 6
    assert perms[0] == (1, 2, 3)
    assert perms[-1] == W0

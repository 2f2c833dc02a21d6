import pytest

from schubdeg.config import ResourceCaps


def test_defaults():
    caps = ResourceCaps.from_override("")
    assert caps == ResourceCaps()
    assert caps.max_positive_roots == 10000


def test_override():
    caps = ResourceCaps.from_override(" max_basis_size=800, max_degree=20 ")
    assert caps.max_basis_size == 800
    assert caps.max_degree == 20
    assert caps.max_pairs == ResourceCaps().max_pairs


@pytest.mark.parametrize(
    "override, message",
    [
        ("max_widgets=3", "Unknown resource cap"),
        ("max_degree", "Unknown resource cap"),
        ("max_degree=many", "must be an integer"),
        ("max_degree=0", "positive"),
        ("max_pairs=-5", "positive"),
    ],
)
def test_bad_override(override, message):
    with pytest.raises(ValueError, match=message):
        ResourceCaps.from_override(override)

import pytest

from schubdeg.polyalg.ideal import Ideal
from schubdeg.schubert.patch import PatchError, all_permutations
from schubdeg.schubert.steps import (
    CaseMismatchError,
    StepCase,
    applicable_steps,
    classify_step,
    expect_case,
    gvd_step_schubert,
)

W0 = (3, 2, 1)


@pytest.mark.parametrize(
    "w, v, k, expected",
    [
        ((1, 2, 3), W0, 1, StepCase.FIBER_BUNDLE),
        ((1, 3, 2), W0, 1, StepCase.FIBER_BUNDLE),
        ((2, 1, 3), W0, 1, StepCase.GVD),
        ((3, 2, 1), W0, 1, StepCase.GRAPH),
        ((2, 1, 3), (1, 3, 2), 2, StepCase.EMPTY),
    ],
)
def test_classify_step(w, v, k, expected):
    assert classify_step(w, v, k) == expected


@pytest.mark.parametrize("k", [0, 3])
def test_simple_index_out_of_range(k):
    with pytest.raises(PatchError):
        classify_step((1, 2, 3), W0, k)


def test_step_needs_a_descent_of_v():
    with pytest.raises(PatchError):
        classify_step((1, 2, 3), (1, 3, 2), 1)


def test_expect_case():
    assert expect_case((3, 2, 1), W0, 1, StepCase.GRAPH) == StepCase.GRAPH
    with pytest.raises(CaseMismatchError):
        expect_case((3, 2, 1), W0, 1, StepCase.GVD)


def test_applicable_steps():
    assert applicable_steps(W0) == [1, 2]
    assert applicable_steps((1, 3, 2)) == [2]
    assert applicable_steps((1, 2, 3)) == []


def test_gvd_step_matches_both_pieces():
    step = gvd_step_schubert((2, 1, 3), W0, 1)

    assert step.case == StepCase.GVD
    assert step.line_variable == "z21"
    assert step.passed
    assert step.checks == {
        "decomposition": True,
        "c_match": True,
        "line_free_at_vr": True,
        "p_match": True,
    }
    assert step.gvd.i_prime.equals(Ideal.parse(step.gvd.i_prime.ring, "z21*z32"))


def test_graph_step():
    step = gvd_step_schubert((3, 2, 1), W0, 1)

    assert step.case == StepCase.GRAPH
    assert step.checks["graph_element"]
    assert step.passed
    assert step.gvd is None


def test_fiber_bundle_step():
    step = gvd_step_schubert((1, 3, 2), W0, 1)

    assert step.case == StepCase.FIBER_BUNDLE
    assert step.checks["line_free_at_v"]
    assert step.passed


def test_empty_step():
    step = gvd_step_schubert((2, 1, 3), (1, 3, 2), 2)

    assert step.case == StepCase.EMPTY
    assert step.checks == {"patch_is_unit": True}


def test_every_step_in_s3_passes():
    for v in all_permutations(3):
        for k in applicable_steps(v):
            for w in all_permutations(3):
                assert gvd_step_schubert(w, v, k, strict=False).passed


def test_report_serializes():
    payload = gvd_step_schubert((2, 1, 3), W0, 1).model_dump(mode="json", by_alias=True)

    assert payload["case"] == "gvd"
    assert payload["passed"] is True
    assert payload["gvd"]["P"] == ["z21"]

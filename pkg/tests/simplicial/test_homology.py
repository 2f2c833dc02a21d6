from schubdeg.simplicial.complex import SimplicialComplex
from schubdeg.simplicial.homology import cm_union_check, is_cm_reisner, rational_homology


def test_circle_homology():
    report = rational_homology(SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]]))

    assert report.betti == [0, 0, 1]
    assert report.in_degree(1) == 1
    assert report.in_degree(5) == 0
    assert report.euler_characteristic == -1
    assert not report.is_acyclic


def test_two_points_and_empty_face():
    points = rational_homology(SimplicialComplex.from_facets([[1], [2]]))
    empty_face = rational_homology(SimplicialComplex.from_facets([[]]))

    assert points.betti == [0, 1]
    assert empty_face.betti == [1]


def test_simplex_is_acyclic_and_void_has_no_homology():
    assert rational_homology(SimplicialComplex.simplex((1, 2, 3))).is_acyclic
    assert rational_homology(SimplicialComplex.void()).betti == []


def test_circle_is_cohen_macaulay():
    verdict = is_cm_reisner(SimplicialComplex.from_facets([[1, 2], [2, 3], [1, 3]]))
    assert verdict.is_cm
    assert verdict.witness is None


def test_bowtie_fails_at_the_pinch_vertex():
    verdict = is_cm_reisner(SimplicialComplex.from_facets([[1, 2, 3], [3, 4, 5]]))

    assert not verdict.is_cm
    assert verdict.witness == (3,)


def test_disjoint_edges_fail_at_the_empty_face():
    verdict = is_cm_reisner(SimplicialComplex.from_facets([[1, 2], [3, 4]]))

    assert not verdict.is_cm
    assert verdict.witness == ()


def test_impure_complex_is_not_cm():
    verdict = is_cm_reisner(SimplicialComplex.from_facets([[1, 2], [3]]))

    assert not verdict.is_cm
    assert verdict.reason == "complex is not pure"


def test_gluing_two_paths_into_a_square():
    first = SimplicialComplex.from_facets([[1, 2], [2, 3]])
    second = SimplicialComplex.from_facets([[3, 4], [1, 4]])

    report = cm_union_check(first, second)

    assert report.hypotheses_hold
    assert report.union_cm
    assert report.consistent


def test_gluing_along_too_small_an_intersection():
    first = SimplicialComplex.from_facets([[1, 2]])
    second = SimplicialComplex.from_facets([[3, 4]])

    report = cm_union_check(first, second)

    assert not report.hypotheses_hold
    assert not report.union_cm
    assert report.consistent

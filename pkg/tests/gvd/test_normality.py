from schubdeg.gvd.normality import NormalityVerdict, normality_probe
from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.ring import Ring, parse_polynomial


def test_node_is_not_normal():
    ring = Ring(names=("x", "y"))

    report = normality_probe(Ideal.parse(ring, "x^2 - y^2"), y="y")

    assert report.codimension == 1
    assert report.complete_intersection
    assert report.singular_ideal == ["x", "y"]
    assert report.singular_locus_codimension == 1
    assert not report.r1
    assert report.verdict == NormalityVerdict.NOT_NORMAL
    assert report.singular_ideal_y_free is False


def test_quadric_cone_is_normal():
    ring = Ring(names=("x", "y", "z"))

    report = normality_probe(Ideal.parse(ring, "x*y - z^2"))

    assert report.singular_locus_codimension == 2
    assert report.verdict == NormalityVerdict.NORMAL
    assert report.singular_ideal_y_free is None


def test_smooth_curve():
    ring = Ring(names=("x", "y"))

    report = normality_probe(Ideal.parse(ring, "y - x^2"))

    assert report.singular_locus_empty
    assert report.singular_locus_codimension is None
    assert report.verdict == NormalityVerdict.NORMAL


def test_non_complete_intersection_reports_r1_only():
    ring = Ring(names=("x", "y", "z"))

    report = normality_probe(Ideal.parse(ring, "x*y; x*z; y*z"))

    assert not report.complete_intersection
    assert report.verdict == NormalityVerdict.R1_ONLY


def test_complete_intersection_can_be_asserted():
    ring = Ring(names=("x", "y", "z"))

    report = normality_probe(Ideal.parse(ring, "x*y; x*z; y*z"), complete_intersection=True)

    assert report.verdict == NormalityVerdict.NOT_NORMAL


def test_redundant_generators_keep_the_complete_intersection():
    ring = Ring(names=("x", "y"))

    report = normality_probe(Ideal.parse(ring, "x^2 - y^2; x^3 - x*y^2"))

    assert report.codimension == 1
    assert report.complete_intersection
    assert report.verdict == NormalityVerdict.NOT_NORMAL


def test_node_example_has_a_singular_curve():
    ring = Ring(names=("x", "y", "l"))

    report = normality_probe(Ideal.parse(ring, "l*(x^2 - y^2) - y^2"), y="l")
    singular = Ideal.parse(ring, "; ".join(report.singular_ideal))

    assert report.complete_intersection
    assert report.verdict == NormalityVerdict.NOT_NORMAL
    assert report.singular_locus_codimension == 1
    assert Ideal.parse(ring, "x; y").contains_ideal(singular)
    assert singular.contains(parse_polynomial(ring, "x^2"))
    assert singular.contains(parse_polynomial(ring, "y^2"))

import asyncio
import sys

import click
from rich.console import Console

from schubdeg.bruhat.order import bruhat_witness
from schubdeg.bruhat.words import count_reduced_words, reduced_words
from schubdeg.cli.io import (
    AtPath,
    InputError,
    element_argument,
    permutation_argument,
    positions_argument,
    read_argument,
    ring_argument,
    root_system_argument,
    weights_argument,
    word_argument,
)
from schubdeg.cli.results import (
    EXIT_ERROR,
    CommandResult,
    emit,
    output_options,
    reports_errors,
)
from schubdeg.gvd.certificates import NonMonomialIdealError, rll_certificate
from schubdeg.gvd.gluing import gluing_check
from schubdeg.gvd.normality import normality_probe
from schubdeg.gvd.split import family_fiber, family_ideal, gvd_split, initial_y_ideal
from schubdeg.polyalg.hilbert import graded_kpolynomial, kpoly_and_multidegree
from schubdeg.polyalg.ideal import COMBINE_KINDS, Ideal, ideal_combine, reduced_groebner
from schubdeg.polyalg.orders import parse_term_order
from schubdeg.roots.permutations import permutation_of_word
from schubdeg.roots.weyl import (
    canonical_reduced_word,
    element_from_word,
    format_word,
    longest_element,
)
from schubdeg.schubdeg_logging import LOG_FORMATS, configure_schubdeg_logging
from schubdeg.schubert.chain import degeneration_chain
from schubdeg.schubert.patch import PatchError, kl_patch_ideal, patch_chart
from schubdeg.schubert.steps import gvd_step_schubert
from schubdeg.simplicial.complex import complex_to_payload, format_complex_text, parse_complex
from schubdeg.simplicial.decomposition import is_vertex_decomposable
from schubdeg.simplicial.homology import is_cm_reisner, rational_homology
from schubdeg.simplicial.shelling import shelling
from schubdeg.subword.complex import interior_faces, subword_complex, subword_topology
from schubdeg.subword.restriction import (
    billey_restriction,
    ktheory_restriction_direct,
    ktheory_restriction_recursive,
    restriction_recursive,
)
from schubdeg.suite.runner import run_suite, suite_table
from schubdeg.suite.time_recorder import TimeRecorder

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def _ideal(ring_text: str, gens_text: str) -> Ideal:
    return Ideal.parse(ring_argument(ring_text), read_argument(gens_text))


def _basis(ideal: Ideal) -> list[str]:
    return [str(g) for g in ideal.groebner()]


def _lines(mapping: dict) -> str:
    return "\n".join(f"{key}: {value}" for key, value in mapping.items())


def _check_size(n: int | None, *perms: tuple[int, ...]) -> int:
    sizes = {len(p) for p in perms}
    if n is not None:
        sizes.add(n)
    if len(sizes) != 1:
        raise PatchError(f"Permutation sizes disagree: {sorted(sizes)}")
    return sizes.pop()


@click.group()
@click.option(
    "--log-level",
    required=False,
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    help="Logging level for stderr. Defaults to the LOGGING_LEVEL environment variable.",
)
@click.option(
    "--log-format",
    required=False,
    type=click.Choice(LOG_FORMATS),
    help="Log renderer. Defaults to the SCHUBDEG_LOG_FORMAT environment variable.",
)
@output_options
@click.pass_context
def cli(ctx, log_level, log_format):
    """
    Exact computations around geometric vertex decompositions, subword complexes
    and Schubert patch degenerations. Every flag taking TEXT|@PATH reads the
    value from a file when prefixed with @.
    """
    ctx.ensure_object(dict)
    recorder = TimeRecorder()
    recorder.start_recording_if_not_started()
    ctx.obj["recorder"] = recorder
    configure_schubdeg_logging(log_level.upper() if log_level else None, log_format)


TYPE_OPTION = click.option(
    "--type",
    "type_",
    required=True,
    type=AtPath(),
    help='Cartan type such as "A3" or "G2", or a Cartan matrix as JSON.',
)
RING_OPTION = click.option(
    "--ring", required=True, type=AtPath(), help='Comma-separated variable names, e.g. "x,y,l".'
)
GENS_OPTION = click.option(
    "--gens",
    required=True,
    type=AtPath(),
    help="Generators separated by ';' or newlines. Use @file to read them from a file.",
)


@cli.command()
@TYPE_OPTION
@output_options
@click.pass_context
@reports_errors
def roots(ctx, type_):
    """Positive roots of a root system, graded by height."""
    root_system = root_system_argument(type_)
    longest = longest_element(root_system)
    result = {
        "type": root_system.display_name,
        "rank": root_system.rank,
        "cartan": [list(row) for row in root_system.cartan],
        "positive_roots": [list(root) for root in root_system.positive_roots],
        "count": len(root_system.positive_roots),
        "longest_word": list(longest.reduced_word),
    }
    text = "\n".join(
        [f"{root_system.display_name}: {result['count']} positive roots"]
        + [",".join(map(str, root)) for root in root_system.positive_roots]
    )
    emit(ctx, "roots", {"type": type_}, result, text)


@cli.group()
def bruhat():
    """Bruhat order and reduced words."""


@bruhat.command()
@TYPE_OPTION
@click.option("--u", required=True, type=AtPath(), help="Reduced or unreduced word for u.")
@click.option("--w", required=True, type=AtPath(), help="Word for w.")
@click.option(
    "--word",
    required=False,
    type=AtPath(),
    help="Reduced word of w to search for a subword. Defaults to the canonical one.",
)
@output_options
@click.pass_context
@reports_errors
def leq(ctx, type_, u, w, word):
    """
    Decide u <= w by the subword property.

    \b
    Example:
    schubdeg bruhat leq --type A3 --u 1,2 --w 1,2,3,1
    """
    root_system = root_system_argument(type_)
    u_element = element_argument(root_system, u)
    w_element = element_argument(root_system, w)
    verdict = bruhat_witness(u_element, w_element, word_argument(word) if word else None)
    text = str(verdict.result).lower()
    if verdict.witnesses is not None:
        text += f"\nwitnesses: {format_word(verdict.witnesses)}"
    emit(ctx, "bruhat leq", {"type": type_, "u": u, "w": w}, verdict.model_dump(mode="json"), text)


@bruhat.command()
@TYPE_OPTION
@click.option("--w", required=True, type=AtPath(), help="Word for w.")
@output_options
@click.pass_context
@reports_errors
def words(ctx, type_, w):
    """All reduced words of w in lexicographic order."""
    element = element_argument(root_system_argument(type_), w)
    found = reduced_words(element)
    result = {"words": [list(word) for word in found], "count": count_reduced_words(element)}
    text = "\n".join(format_word(word) or "()" for word in found)
    emit(ctx, "bruhat words", {"type": type_, "w": w}, result, text)


@cli.group()
def subword():
    """Subword complexes."""


@subword.command("complex")
@TYPE_OPTION
@click.option("--Q", "q", required=True, type=AtPath(), help="The word Q.")
@click.option("--w", required=True, type=AtPath(), help="Word for w.")
@click.option(
    "--topology", is_flag=True, help="Also check purity, shellability, CM and homology."
)
@output_options
@click.pass_context
@reports_errors
def subword_complex_command(ctx, type_, q, w, topology):
    """
    Facets of Δ(Q, w) in the simplicial text format.

    \b
    Example:
    schubdeg subword complex --type A2 --Q 1,2,1 --w 1
    """
    root_system = root_system_argument(type_)
    complex_ = subword_complex(word_argument(q), element_argument(root_system, w))
    result = complex_to_payload(complex_.complex) | {
        "is_void": complex_.is_void,
        "is_sphere": complex_.is_sphere,
        "demazure": list(complex_.demazure),
        "interior_faces": [list(face) for face in interior_faces(complex_)],
    }
    certificates = {}
    hypothesis_failed = False
    if topology:
        report = subword_topology(complex_)
        certificates["topology"] = report.model_dump(mode="json")
        hypothesis_failed = not report.all_hold
    emit(
        ctx,
        "subword complex",
        {"type": type_, "Q": q, "w": w},
        result,
        format_complex_text(complex_.complex) or "void",
        certificates,
        hypothesis_failed,
    )


@cli.command()
@TYPE_OPTION
@click.option("--w", required=True, type=AtPath(), help="Word for w.")
@click.option("--v", required=True, type=AtPath(), help="Word for the fixed point v.")
@click.option(
    "--ring",
    "theory",
    type=click.Choice(["H", "K"]),
    default="H",
    show_default=True,
    help="Equivariant cohomology or K-theory.",
)
@click.option(
    "--method",
    type=click.Choice(["direct", "recursive"]),
    default="direct",
    show_default=True,
    help="Sum over subwords of Q, or the degeneration recursion.",
)
@click.option(
    "--Q",
    "q",
    required=False,
    type=AtPath(),
    help="Reduced word for v used by the direct method. Defaults to v's canonical word.",
)
@output_options
@click.pass_context
@reports_errors
def localize(ctx, type_, w, v, theory, method, q):
    """
    Restriction of the Schubert class of w to the fixed point v.

    \b
    Example:
    schubdeg localize --type A2 --w 1 --v 1,2,1 --ring H --method direct
    """
    root_system = root_system_argument(type_)
    w_element = element_argument(root_system, w)
    v_element = element_argument(root_system, v)
    word = word_argument(q) if q else canonical_reduced_word(v_element)
    if element_from_word(root_system, word) != v_element:
        raise InputError(f"Q = {format_word(word)} does not evaluate to v")
    if theory == "H":
        if method == "direct":
            value = billey_restriction(word, w_element)
        else:
            value = restriction_recursive(w_element, v_element)
        result = {"value": str(value)}
    else:
        if method == "direct":
            k_class = ktheory_restriction_direct(word, w_element)
        else:
            k_class = ktheory_restriction_recursive(w_element, v_element)
        result = {"value": str(k_class), "terms": k_class.to_payload()}
    inputs = {"type": type_, "w": w, "v": v, "ring": theory, "method": method}
    emit(ctx, "localize", inputs, result, result["value"])


@cli.group()
def ideal():
    """Groebner bases, dimensions and K-polynomials of polynomial ideals."""


ORDER_OPTION = click.option(
    "--order",
    default="grevlex",
    show_default=True,
    help="lex, grevlex, y:<var>[,<var>] or weight:<w1>,<w2>,...",
)


@ideal.command()
@RING_OPTION
@GENS_OPTION
@ORDER_OPTION
@output_options
@click.pass_context
@reports_errors
def gb(ctx, ring, gens, order):
    """Reduced Groebner basis."""
    term_order = parse_term_order(order)
    basis = [str(g) for g in reduced_groebner(_ideal(ring, gens), term_order)]
    inputs = {"ring": ring, "gens": gens, "order": term_order.describe()}
    emit(ctx, "ideal gb", inputs, {"basis": basis}, "\n".join(basis))


@ideal.command()
@RING_OPTION
@GENS_OPTION
@output_options
@click.pass_context
@reports_errors
def dim(ctx, ring, gens):
    """Krull dimension and codimension of the quotient."""
    target = _ideal(ring, gens)
    result = {"dimension": target.dimension(), "codimension": target.codimension()}
    emit(ctx, "ideal dim", {"ring": ring, "gens": gens}, result, _lines(result))


@ideal.command()
@RING_OPTION
@GENS_OPTION
@ORDER_OPTION
@click.option(
    "--weights",
    required=False,
    type=AtPath(),
    help="One weight vector per variable, ';'-separated. Defaults to all ones.",
)
@output_options
@click.pass_context
@reports_errors
def kpoly(ctx, ring, gens, order, weights):
    """Finely graded K-polynomial, multidegree and codimension."""
    target = _ideal(ring, gens)
    parsed = weights_argument(weights, target.ring)
    report = kpoly_and_multidegree(target, parse_term_order(order), parsed)
    result = {
        "kpolynomial": str(report.kpolynomial),
        "multidegree": str(report.multidegree),
        "codimension": report.codimension,
    }
    if parsed is not None:
        result["graded_kpolynomial"] = str(graded_kpolynomial(target, parsed))
    emit(ctx, "ideal kpoly", {"ring": ring, "gens": gens, "order": order}, result, _lines(result))


@ideal.command()
@RING_OPTION
@GENS_OPTION
@click.option("--kind", required=True, type=click.Choice(COMBINE_KINDS))
@click.option("--other", required=False, type=AtPath(), help="Generators of the second ideal.")
@click.option("--names", required=False, default="", help="Variables to eliminate.")
@output_options
@click.pass_context
@reports_errors
def combine(ctx, ring, gens, kind, other, names):
    """Sum, product, intersection, colon, saturation or elimination."""
    first = _ideal(ring, gens)
    second = Ideal.parse(first.ring, read_argument(other)) if other else None
    eliminated = [name.strip() for name in names.split(",") if name.strip()]
    combined = ideal_combine(kind, first, second, eliminated)
    result = {"ring": list(combined.ring.names), "basis": _basis(combined)}
    emit(ctx, "ideal combine", {"ring": ring, "kind": kind}, result, "\n".join(result["basis"]))


@cli.group()
def gvd():
    """Geometric vertex decompositions and their certificates."""


Y_OPTION = click.option("--y", required=True, help="The variable scaled by the degeneration.")


@gvd.command()
@RING_OPTION
@GENS_OPTION
@Y_OPTION
@output_options
@click.pass_context
@reports_errors
def split(ctx, ring, gens, y):
    """
    The limit ideal I' and its pieces C and P.

    \b
    Example:
    schubdeg gvd split --ring x,y,l --gens "l*(x^2-y^2) - y^2" --y l --json
    """
    report = gvd_split(_ideal(ring, gens), y)
    certificates = {}
    if report.i_prime.is_monomial():
        certificates["rll"] = rll_certificate(report.i_prime).model_dump(mode="json")
    payload = report.model_dump(mode="json", by_alias=True)
    text = _lines(
        {
            "I'": "; ".join(payload["I_prime"]),
            "C": "; ".join(payload["C"]),
            "P": "; ".join(payload["P"]),
            "decomposition_holds": report.decomposition_holds,
        }
    )
    emit(
        ctx,
        "gvd split",
        {"ring": ring, "gens": gens, "y": y},
        payload,
        text,
        certificates,
        hypothesis_failed=not report.decomposition_holds,
    )


@gvd.command()
@RING_OPTION
@GENS_OPTION
@Y_OPTION
@click.option("--z", default="z", show_default=True, help="Name of the family parameter.")
@click.option("--fiber", "fibers", multiple=True, type=int, help="Extra fibers z = c to print.")
@output_options
@click.pass_context
@reports_errors
def family(ctx, ring, gens, y, z, fibers):
    """The one-parameter family whose special fiber is the initial y-ideal."""
    target = _ideal(ring, gens)
    total = family_ideal(target, y, z)
    result = {
        "ring": list(total.ring.names),
        "family": _basis(total),
        "fibers": {str(c): _basis(family_fiber(total, z, c)) for c in sorted({0, 1, *fibers})},
    }
    certificates = {
        "special_fiber_is_initial": family_fiber(total, z, 0).equals(initial_y_ideal(target, y)),
        "general_fiber_is_ideal": family_fiber(total, z, 1).equals(target),
    }
    emit(
        ctx,
        "gvd family",
        {"ring": ring, "gens": gens, "y": y, "z": z},
        result,
        "\n".join(result["family"]),
        certificates,
        hypothesis_failed=not all(certificates.values()),
    )


@gvd.command()
@RING_OPTION
@GENS_OPTION
@output_options
@click.pass_context
@reports_errors
def rll(ctx, ring, gens):
    """Reducedness certificate for a monomial limit."""
    target = _ideal(ring, gens)
    if not target.is_monomial():
        raise NonMonomialIdealError("The limit ideal must be monomial")
    certificate = rll_certificate(target)
    text = certificate.verdict.value
    if certificate.witness:
        text += f"\nwitness: {certificate.witness}"
    emit(
        ctx,
        "gvd rll",
        {"ring": ring, "gens": gens},
        certificate.model_dump(mode="json"),
        text,
        hypothesis_failed=not certificate.certified,
    )


@gvd.command()
@RING_OPTION
@click.option("--first", required=True, type=AtPath(), help="Generators of the first piece.")
@click.option("--second", required=True, type=AtPath(), help="Generators of the second piece.")
@click.option("--union", required=True, type=AtPath(), help="Generators of the whole.")
@output_options
@click.pass_context
@reports_errors
def gluing(ctx, ring, first, second, union):
    """Check that the union ideal is the intersection of the two pieces."""
    verdict = gluing_check(_ideal(ring, first), _ideal(ring, second), _ideal(ring, union))
    emit(
        ctx,
        "gvd gluing",
        {"ring": ring},
        verdict.model_dump(mode="json"),
        f"holds: {verdict.holds}",
        hypothesis_failed=not verdict.holds,
    )


@gvd.command()
@RING_OPTION
@GENS_OPTION
@click.option("--y", required=False, help="Report whether the singular locus is free of y.")
@click.option(
    "--complete-intersection/--no-complete-intersection",
    default=None,
    help="Override the generator-count test for complete intersections.",
)
@output_options
@click.pass_context
@reports_errors
def normality(ctx, ring, gens, y, complete_intersection):
    """Serre-criterion check through the Jacobian singular locus."""
    report = normality_probe(_ideal(ring, gens), y, complete_intersection)
    payload = report.model_dump(mode="json")
    emit(ctx, "gvd normality", {"ring": ring, "gens": gens}, payload, _lines(payload))


@cli.group()
def patch():
    """Type A Schubert patches, degeneration steps and chains."""


N_OPTION = click.option("--n", required=False, type=int, help="Matrix size; checked if given.")


@patch.command("ideal")
@N_OPTION
@click.option("--w", required=True, type=AtPath(), help="w in one-line notation.")
@click.option("--v", required=True, type=AtPath(), help="v in one-line notation.")
@click.option("--adapted", required=False, type=int, help="Use the chart adapted to α_k.")
@output_options
@click.pass_context
@reports_errors
def patch_ideal(ctx, n, w, v, adapted):
    """
    Ideal of the Schubert patch X_w|_v.

    \b
    Example:
    schubdeg patch ideal --n 4 --w 2,1,4,3 --v 4,3,2,1
    """
    w_perm = permutation_argument(w)
    v_perm = permutation_argument(v)
    _check_size(n, w_perm, v_perm)
    chart = patch_chart(v_perm, adapted)
    target = kl_patch_ideal(w_perm, v_perm, adapted)
    proper = not target.is_unit()
    result = {
        "variables": list(chart.ring.names),
        "weights": {name: list(weight) for name, weight in chart.declared_weights.items()},
        "basis": _basis(target),
        "proper": proper,
        "codimension": target.codimension() if proper else None,
    }
    emit(
        ctx,
        "patch ideal",
        {"w": list(w_perm), "v": list(v_perm), "adapted": adapted},
        result,
        "\n".join(result["basis"]) or "0",
    )


@patch.command()
@N_OPTION
@click.option("--w", required=True, type=AtPath(), help="w in one-line notation.")
@click.option("--v", required=True, type=AtPath(), help="v in one-line notation.")
@click.option("--k", required=True, type=int, help="Simple index α_k with v r_k < v.")
@output_options
@click.pass_context
@reports_errors
def step(ctx, n, w, v, k):
    """One degeneration step along α_k, checked against the predicted patch ideals."""
    w_perm = permutation_argument(w)
    v_perm = permutation_argument(v)
    _check_size(n, w_perm, v_perm)
    report = gvd_step_schubert(w_perm, v_perm, k, strict=False)
    text = _lines({"case": report.case.value, **report.checks})
    emit(
        ctx,
        "patch step",
        {"w": list(w_perm), "v": list(v_perm), "k": k},
        report.model_dump(mode="json", by_alias=True),
        text,
        hypothesis_failed=not report.passed,
    )


@patch.command()
@N_OPTION
@click.option("--w", required=True, type=AtPath(), help="w in one-line notation.")
@click.option("--Q", "q", required=True, type=AtPath(), help="Reduced word for v.")
@click.option("--v", required=False, type=AtPath(), help="v in one-line notation; checked.")
@click.option("--skip-steps", is_flag=True, help="Do not run the step report at every node.")
@output_options
@click.pass_context
@reports_errors
def degenerate(ctx, n, w, q, v, skip_steps):
    """
    Degenerate X_w|_v to the Stanley–Reisner scheme of Δ(Q, w).

    \b
    Example:
    schubdeg patch degenerate --n 3 --w 2,1,3 --Q 1,2,1 --json
    """
    w_perm = permutation_argument(w)
    word = word_argument(q)
    size = _check_size(n, w_perm)
    v_perm = permutation_of_word(word, size)
    if v is not None and permutation_argument(v, size) != v_perm:
        raise PatchError(f"Q = {format_word(word)} is not a word for v = {v}")
    report = degeneration_chain(w_perm, v_perm, word, check_steps=not skip_steps)
    text = _lines(
        {
            "components": "; ".join(",".join(map(str, c)) or "{}" for c in report.components),
            "limit": "; ".join(_basis(report.limit)) or "0",
            "verdict": report.verdict,
        }
    )
    emit(
        ctx,
        "patch degenerate",
        {"w": list(w_perm), "v": list(v_perm), "Q": list(word)},
        report.model_dump(mode="json", by_alias=True),
        text,
        hypothesis_failed=not report.verdict,
    )


@cli.group()
def simplicial():
    """Homology, Cohen–Macaulayness, shellings and vertex decompositions."""


IN_OPTION = click.option(
    "--in",
    "source",
    required=True,
    type=AtPath(),
    help="Complex in the text or JSON format; a bare path is read as a file.",
)


def _complex(source: str):
    text = read_argument(source if source.startswith("@") else f"@{source}")
    return parse_complex(text)


@simplicial.command()
@IN_OPTION
@output_options
@click.pass_context
@reports_errors
def homology(ctx, source):
    """Reduced rational Betti numbers from b̃_{-1} up."""
    report = rational_homology(_complex(source))
    payload = report.model_dump(mode="json")
    emit(ctx, "simplicial homology", {"in": source}, payload, _lines(payload))


@simplicial.command()
@IN_OPTION
@output_options
@click.pass_context
@reports_errors
def cm(ctx, source):
    """Reisner's criterion; the witness is a face whose link fails."""
    verdict = is_cm_reisner(_complex(source))
    emit(
        ctx,
        "simplicial cm",
        {"in": source},
        verdict.model_dump(mode="json"),
        _lines(verdict.model_dump(mode="json")),
        hypothesis_failed=not verdict.is_cm,
    )


@simplicial.command()
@IN_OPTION
@click.option(
    "--order",
    required=False,
    type=AtPath(),
    help="Facet order to check, facets separated by ';'. Without it a shelling is searched.",
)
@output_options
@click.pass_context
@reports_errors
def shell(ctx, source, order):
    """Find a shelling, or check a given facet order."""
    verdict = shelling(_complex(source), positions_argument(order))
    emit(
        ctx,
        "simplicial shell",
        {"in": source, "order": order},
        verdict.model_dump(mode="json"),
        _lines(verdict.model_dump(mode="json")),
        hypothesis_failed=not verdict.shellable,
    )


@simplicial.command()
@IN_OPTION
@output_options
@click.pass_context
@reports_errors
def vd(ctx, source):
    """Vertex decomposability with the shedding tree as witness."""
    verdict = is_vertex_decomposable(_complex(source))
    emit(
        ctx,
        "simplicial vd",
        {"in": source},
        verdict.model_dump(mode="json"),
        f"decomposable: {verdict.decomposable}",
        hypothesis_failed=not verdict.decomposable,
    )


@cli.command()
@click.option("--full", is_flag=True, help="Run the larger sweeps (A3, G2, n = 4 patches).")
@click.option("--only", multiple=True, help="Run only the named check; may be repeated.")
@output_options
@click.pass_context
@reports_errors
def suite(ctx, full, only):
    """
    Run the acceptance battery concurrently and print a pass/fail table.
    Exits with 1 if any check fails.
    """
    report = asyncio.run(run_suite(only, full, timing=bool(ctx.obj.get("timing"))))
    if ctx.obj.get("as_json"):
        outcome = CommandResult(
            command="suite",
            inputs={"full": full, "only": sorted(only)},
            result=report.model_dump(mode="json", exclude_none=True),
        )
        click.echo(outcome.to_json())
    else:
        Console(width=120).print(suite_table(report))
    if not report.passed:
        ctx.exit(EXIT_ERROR)


def main():
    try:
        code = cli.main(obj={}, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        code = EXIT_ERROR
    except click.Abort:
        code = EXIT_ERROR
    sys.exit(code if isinstance(code, int) else 0)


if __name__ == "__main__":
    main()

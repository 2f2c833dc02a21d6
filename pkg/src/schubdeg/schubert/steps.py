"""
One degeneration step X_w|_v ⇝ (Π × {0}) ∪ (Λ × L) along a simple root α_k
with v·s_k < v, checked in charts adapted to α_k.
"""

from enum import Enum
from typing import Sequence

import structlog
from pydantic import BaseModel, ConfigDict, computed_field

from schubdeg.bruhat.order import bruhat_leq
from schubdeg.config import RESOURCE_CAPS, ResourceCaps
from schubdeg.gvd.split import GVDReport, gvd_split
from schubdeg.polyalg.groebner import lead_term
from schubdeg.polyalg.ideal import Ideal
from schubdeg.polyalg.orders import TermOrder
from schubdeg.roots.permutations import PermOneLine
from schubdeg.schubert.patch import (
    PatchError,
    as_element,
    has_descent,
    kl_patch_ideal,
    patch_chart,
    swap_positions,
    variable_name,
)

logger = structlog.get_logger("schubdeg.schubert.steps")


class CaseMismatchError(Exception):
    pass


class ComponentMatchError(Exception):
    pass


class StepCase(str, Enum):
    EMPTY = "empty"
    FIBER_BUNDLE = "fiber-bundle"
    GRAPH = "graph"
    GVD = "gvd"


class StepReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    w: PermOneLine
    v: PermOneLine
    k: int
    case: StepCase
    line_variable: str
    checks: dict[str, bool]
    gvd: GVDReport | None = None

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def classify_step(w: Sequence[int], v: Sequence[int], k: int) -> StepCase:
    n = len(v)
    if len(w) != n:
        raise PatchError(f"w = {tuple(w)} and v = {tuple(v)} have different sizes")
    if not 1 <= k < n:
        raise PatchError(f"Simple index {k} outside 1..{n - 1}")
    if not has_descent(v, k):
        raise PatchError(f"v·s_{k} > v for v = {tuple(v)}: no degeneration along α_{k}")
    w_element = as_element(w)
    if not bruhat_leq(w_element, as_element(v)):
        return StepCase.EMPTY
    if not has_descent(w, k):
        return StepCase.FIBER_BUNDLE
    if not bruhat_leq(w_element, as_element(swap_positions(v, k))):
        return StepCase.GRAPH
    return StepCase.GVD


def _swap(k: int, i: int) -> int:
    if i == k:
        return k + 1
    if i == k + 1:
        return k
    return i


class _SwappedCharts:
    """
    Charts at v and at v·s_k, both adapted to α_k. On their overlap the base
    coordinates agree after z''_ij ↦ z_{s(i)s(j)} (same declared weights) and
    the line coordinates satisfy μ = 1/ℓ.
    """

    def __init__(self, v: Sequence[int], k: int):
        self.k = k
        self.v = PermOneLine(tuple(v))
        self.vr = swap_positions(v, k)
        self.chart = patch_chart(self.v, adapted=k)
        self.ring = self.chart.ring
        self.ell = variable_name(k + 1, k)
        self.base = self.ring.without([self.ell])
        self.mu = self.base.fresh_name("mu")
        self.comparison = self.base.extend([self.mu])
        self.mapping = {}
        for i, j in self.chart.positions:
            if (i, j) == (k + 1, k):
                self.mapping[variable_name(i, j)] = self.mu
            else:
                self.mapping[variable_name(i, j)] = variable_name(_swap(k, i), _swap(k, j))

    def at_v(self, w: Sequence[int], caps: ResourceCaps) -> Ideal:
        return kl_patch_ideal(w, self.v, adapted=self.k, caps=caps)

    def at_vr(self, w: Sequence[int], caps: ResourceCaps) -> Ideal:
        """Patch ideal at v·s_k moved into (base variables, μ)."""
        return kl_patch_ideal(w, self.vr, adapted=self.k, caps=caps).rename(
            self.mapping, self.comparison
        )


def _mismatch(label: str, expected: Ideal, found: Ideal) -> str:
    return (
        f"{label}: expected [{', '.join(map(str, expected.groebner()))}], "
        f"found [{', '.join(map(str, found.groebner()))}]"
    )


def gvd_step_schubert(
    w: Sequence[int],
    v: Sequence[int],
    k: int,
    strict: bool = True,
    caps: ResourceCaps = RESOURCE_CAPS,
) -> StepReport:
    """
    Classify the step and check its geometry. Fiber bundle: both patch ideals
    avoid the line coordinate and agree on the base. Graph: the patch is the
    graph of a function on the ℓ-elimination, which is the patch of w·s_k at
    v·s_k. GVD: I' = C ∩ P with C the μ = 0 slice at v·s_k and P = <ℓ> plus
    the patch of w·s_k at v·s_k. With `strict`, a failed check raises
    ComponentMatchError naming both reduced bases.
    """
    case = classify_step(w, v, k)
    charts = _SwappedCharts(v, k)
    ideal = charts.at_v(w, caps)
    wr = swap_positions(w, k)
    checks: dict[str, bool] = {}
    failures: list[str] = []
    report: GVDReport | None = None

    def compare(label: str, expected: Ideal, found: Ideal):
        checks[label] = expected.equals(found)
        if not checks[label]:
            failures.append(_mismatch(label, expected, found))

    if case == StepCase.EMPTY:
        checks["patch_is_unit"] = ideal.is_unit()
    elif case == StepCase.FIBER_BUNDLE:
        other = charts.at_vr(w, caps)
        checks["line_free_at_v"] = ideal.is_free_of([charts.ell])
        checks["line_free_at_vr"] = other.is_free_of([charts.mu])
        compare("base_match", other.eliminate([charts.mu]), ideal.eliminate([charts.ell]))
    elif case == StepCase.GRAPH:
        order = TermOrder.y_dominant(charts.ell)
        ell_monomial = next(iter(charts.ring.gen(charts.ell).terms))
        checks["graph_element"] = any(
            lead_term(g, order)[0] == ell_monomial for g in ideal.groebner(order)
        )
        other = charts.at_vr(wr, caps)
        checks["line_free_at_vr"] = other.is_free_of([charts.mu])
        compare("base_match", other.eliminate([charts.mu]), ideal.eliminate([charts.ell]))
    else:
        report = gvd_split(ideal, charts.ell)
        checks["decomposition"] = report.decomposition_holds
        cone = charts.at_vr(w, caps).substitute({charts.mu: 0}, charts.base)
        compare("c_match", cone, report.c)
        lower = charts.at_vr(wr, caps)
        checks["line_free_at_vr"] = lower.is_free_of([charts.mu])
        predicted = lower.eliminate([charts.mu]).embed(charts.ring).sum(
            Ideal(charts.ring, [charts.ring.gen(charts.ell)])
        )
        compare("p_match", predicted, report.p)

    step = StepReport(
        w=PermOneLine(tuple(w)),
        v=charts.v,
        k=k,
        case=case,
        line_variable=charts.ell,
        checks=checks,
        gvd=report,
    )
    if not step.passed:
        logger.warning(f"Step w={tuple(w)} v={tuple(v)} k={k} failed: {checks}")
        if strict:
            raise ComponentMatchError("; ".join(failures) or f"failed checks {checks}")
    return step


def expect_case(w: Sequence[int], v: Sequence[int], k: int, expected: StepCase) -> StepCase:
    case = classify_step(w, v, k)
    if case != expected:
        raise CaseMismatchError(
            f"w={tuple(w)} v={tuple(v)} k={k} is a {case.value} step, not {expected.value}"
        )
    return case


def applicable_steps(v: Sequence[int]) -> list[int]:
    return [k for k in range(1, len(v)) if has_descent(v, k)]


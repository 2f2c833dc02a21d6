"""
Degeneration of a Schubert patch X_w|_v to a union of coordinate subspaces by
applying one step per letter of a reduced word Q for v, last letter first.
Position m of Q carries the line coordinate x_m of the m-th step, whose
weight is the root β_m.
"""

from typing import Sequence

import structlog
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_serializer

from schubdeg.bruhat.order import bruhat_leq
from schubdeg.config import RESOURCE_CAPS, ResourceCaps
from schubdeg.gvd.certificates import RLLCertificate, rll_certificate
from schubdeg.polyalg.hilbert import multidegree
from schubdeg.polyalg.ideal import Ideal, intersect_all
from schubdeg.polyalg.ring import Ring
from schubdeg.roots.permutations import PermOneLine, permutation_of_word
from schubdeg.roots.weyl import Word, word_eval
from schubdeg.schubert.patch import (
    PatchError,
    as_element,
    kl_patch_ideal,
    patch_chart,
    swap_positions,
    type_a,
)
from schubdeg.schubert.steps import (
    ComponentMatchError,
    StepCase,
    StepReport,
    classify_step,
    gvd_step_schubert,
)
from schubdeg.simplicial.stanley_reisner import sr_ideal
from schubdeg.subword.complex import billey_roots, subword_complex

logger = structlog.get_logger("schubdeg.schubert.chain")

Component = frozenset[int]


class ChainBookkeepingError(Exception):
    pass


class ChainReport(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    w: PermOneLine
    v: PermOneLine
    q: Word = Field(serialization_alias="Q")
    components: list[tuple[int, ...]]
    limit: Ideal
    matches_stanley_reisner: bool
    multidegree_matches: bool
    certificate: RLLCertificate | None
    trace: list[StepReport]

    @field_serializer("limit")
    def serialize_limit(self, ideal: Ideal) -> list[str]:
        return [str(g) for g in ideal.groebner()]

    @computed_field  # type: ignore[misc]
    @property
    def verdict(self) -> bool:
        certified = self.certificate is None or self.certificate.certified
        return self.matches_stanley_reisner and self.multidegree_matches and certified


def position_ring(length: int) -> Ring:
    return Ring(names=tuple(f"x{j}" for j in range(1, length + 1)))


class _Chain:
    def __init__(self, w: PermOneLine, q: Word, check_steps: bool, caps: ResourceCaps):
        self.w = w
        self.q = q
        self.check_steps = check_steps
        self.caps = caps
        n = len(w)
        self.prefixes = [permutation_of_word(q[:m], n) for m in range(len(q) + 1)]
        self.memo: dict[tuple[PermOneLine, int], frozenset[Component]] = {}
        self.trace: list[StepReport] = []

    def components(self, w: PermOneLine, m: int) -> frozenset[Component]:
        key = (w, m)
        if key in self.memo:
            return self.memo[key]
        v = self.prefixes[m]
        if m == 0:
            result = frozenset({frozenset()}) if w == v else frozenset()
        elif not bruhat_leq(as_element(w), as_element(v)):
            result = frozenset()
        else:
            k = self.q[m - 1]
            case = classify_step(w, v, k)
            if self.check_steps:
                try:
                    self.trace.append(gvd_step_schubert(w, v, k, caps=self.caps))
                except ComponentMatchError as e:
                    raise ChainBookkeepingError(
                        f"Step {m} (w={w}, v={v}, k={k}) broke the chain: {e}"
                    )
            wr = swap_positions(w, k)
            if case == StepCase.FIBER_BUNDLE:
                result = self.components(w, m - 1)
            elif case == StepCase.GRAPH:
                result = frozenset(c | {m} for c in self.components(wr, m - 1))
            elif case == StepCase.GVD:
                result = self.components(w, m - 1) | frozenset(
                    c | {m} for c in self.components(wr, m - 1)
                )
            else:
                raise ChainBookkeepingError(f"Empty step at w={w}, v={v} below w ≤ v")
        logger.debug(f"Chain node w={w} prefix={m}: {len(result)} components")
        self.memo[key] = result
        return result


def limit_ideal(length: int, components: Sequence[Component]) -> Ideal:
    ring = position_ring(length)
    primes = [Ideal.of_variables(ring, [f"x{j}" for j in sorted(c)]) for c in components]
    return intersect_all(ring, primes)


def degeneration_chain(
    w: Sequence[int],
    v: Sequence[int],
    q: Sequence[int],
    check_steps: bool = True,
    caps: ResourceCaps = RESOURCE_CAPS,
) -> ChainReport:
    w = PermOneLine(tuple(w))
    v = PermOneLine(tuple(v))
    q = Word(tuple(q))
    n = len(v)
    if len(w) != n:
        raise PatchError(f"w = {w} and v = {v} have different sizes")
    evaluation = word_eval(type_a(n), q)
    if not evaluation.is_reduced or permutation_of_word(q, n) != v:
        raise PatchError(f"{q} is not a reduced word for v = {v}")
    w_element = as_element(w)
    if not bruhat_leq(w_element, evaluation.element):
        raise PatchError(f"w = {w} is not below v = {v}")

    chain = _Chain(w, q, check_steps, caps)
    components = sorted(chain.components(w, len(q)), key=lambda c: (len(c), sorted(c)))
    limit = limit_ideal(len(q), components)

    expected = sr_ideal(subword_complex(q, w_element).complex)
    matches = limit.equals(expected)
    if not matches:
        logger.warning(f"Chain limit for w={w}, Q={q} differs from the Stanley–Reisner ideal")

    betas = billey_roots(type_a(n), q)
    chart = patch_chart(v)
    patch_degree = multidegree(kl_patch_ideal(w, v, caps=caps), chart.weights())
    limit_degree = multidegree(limit, betas)
    certificate = None if limit.is_unit() else rll_certificate(limit)

    return ChainReport(
        w=w,
        v=v,
        q=q,
        components=[tuple(sorted(c)) for c in components],
        limit=limit,
        matches_stanley_reisner=matches,
        multidegree_matches=patch_degree == limit_degree,
        certificate=certificate,
        trace=chain.trace,
    )

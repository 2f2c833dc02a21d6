from functools import lru_cache
from typing import Sequence

import structlog
from pydantic import BaseModel, ConfigDict

from schubdeg.roots.weyl import WeylElement, word_eval

logger = structlog.get_logger("schubdeg.bruhat.order")


class BruhatError(Exception):
    pass


class BruhatQuery(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    u: WeylElement
    w: WeylElement


class BruhatVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    result: bool
    # 1-based positions in `word` spelling a reduced word for u
    witnesses: tuple[int, ...] | None
    word: tuple[int, ...]


def _check_same_system(u: WeylElement, w: WeylElement) -> None:
    if u.root_system.cartan != w.root_system.cartan:
        raise BruhatError(
            f"Cannot compare elements of {u.root_system.display_name} "
            f"and {w.root_system.display_name}"
        )


def _strip_along_word(u: WeylElement, word: Sequence[int]) -> tuple[WeylElement, list[int]]:
    """
    Walk the reduced word of w from its last letter. With s the current last
    letter: if us < u then u <= w iff us <= ws, otherwise u <= w iff u <= ws.
    """
    current = u
    positions = []
    for position in range(len(word), 0, -1):
        letter = word[position - 1]
        if current.has_right_descent(letter):
            current = current.times_simple(letter)
            positions.append(position)
    return current, sorted(positions)


@lru_cache(maxsize=None)
def _leq(u: WeylElement, w: WeylElement) -> bool:
    remainder, _ = _strip_along_word(u, w.reduced_word)
    return remainder.is_identity


def bruhat_leq(u: WeylElement, w: WeylElement, word: Sequence[int] | None = None) -> bool:
    """u <= w in Bruhat order; `word` optionally fixes the reduced word of w used."""
    _check_same_system(u, w)
    if word is None:
        return _leq(u, w)
    return bruhat_witness(u, w, word).result


def bruhat_witness(
    u: WeylElement, w: WeylElement, word: Sequence[int] | None = None
) -> BruhatVerdict:
    _check_same_system(u, w)
    if word is None:
        word = w.reduced_word
    else:
        evaluation = word_eval(w.root_system, word)
        if not evaluation.is_reduced or evaluation.element != w:
            raise BruhatError(f"{tuple(word)} is not a reduced word for {w}")
    remainder, positions = _strip_along_word(u, word)
    result = remainder.is_identity
    return BruhatVerdict(
        result=result,
        witnesses=tuple(positions) if result else None,
        word=tuple(word),
    )


def lower_interval(v: WeylElement) -> list[WeylElement]:
    """All u <= v, sorted by length then canonical reduced word."""
    found = {v}
    frontier = [v]
    # every u < v is reached from v by removing one letter of a reduced word at a time
    while frontier:
        next_frontier = []
        for element in frontier:
            word = element.reduced_word
            for skip in range(len(word)):
                evaluation = word_eval(element.root_system, word[:skip] + word[skip + 1 :])
                if evaluation.is_reduced and evaluation.element not in found:
                    found.add(evaluation.element)
                    next_frontier.append(evaluation.element)
        frontier = next_frontier
    return sorted(found, key=lambda e: (e.length, e.reduced_word))

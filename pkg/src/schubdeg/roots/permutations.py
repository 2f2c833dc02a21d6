"""
Type A bridge: an element of W(A_{n-1}) as a permutation of 1..n in one-line
notation. s_i corresponds to the transposition (i, i+1) and w = s_{q1}...s_{qk}
maps to t_{q1} o ... o t_{qk}; right multiplication by s_i swaps the entries in
positions i and i+1.
"""

from typing import NewType, Sequence

from schubdeg.roots.root_system import RootSystem
from schubdeg.roots.weyl import WeylElement, WeylElementError, Word, word_eval

PermOneLine = NewType("PermOneLine", tuple[int, ...])


def _check_type_a(root_system: RootSystem) -> int:
    rank = root_system.rank
    expected = tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank))
        for i in range(rank)
    )
    if root_system.cartan != expected:
        raise WeylElementError(
            f"One-line notation needs type A, got {root_system.display_name}"
        )
    return rank + 1


def permutation_of_word(word: Sequence[int], n: int) -> PermOneLine:
    perm = list(range(1, n + 1))
    for letter in word:
        if not 1 <= letter < n:
            raise WeylElementError(f"Letter {letter} out of range for S_{n}")
        perm[letter - 1], perm[letter] = perm[letter], perm[letter - 1]
    return PermOneLine(tuple(perm))


def to_permutation(element: WeylElement) -> PermOneLine:
    n = _check_type_a(element.root_system)
    return permutation_of_word(element.reduced_word, n)


def word_of_permutation(perm: Sequence[int]) -> Word:
    """Bubble sort: strip the leftmost descent until sorted."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise WeylElementError(f"{tuple(perm)} is not a permutation of 1..{n}")
    current = list(perm)
    letters = []
    while True:
        descent = next((i for i in range(n - 1) if current[i] > current[i + 1]), None)
        if descent is None:
            break
        current[descent], current[descent + 1] = current[descent + 1], current[descent]
        letters.append(descent + 1)
    return Word(tuple(reversed(letters)))


def from_permutation(root_system: RootSystem, perm: Sequence[int]) -> WeylElement:
    n = _check_type_a(root_system)
    if len(perm) != n:
        raise WeylElementError(f"Permutation {tuple(perm)} does not have length {n}")
    return word_eval(root_system, word_of_permutation(perm)).element


def parse_permutation(text: str) -> PermOneLine:
    items = [item.strip() for item in text.split(",") if item.strip()]
    if not all(item.isdigit() for item in items):
        raise WeylElementError(f"Malformed permutation: {text!r}")
    perm = tuple(int(item) for item in items)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise WeylElementError(f"{perm} is not a permutation of 1..{len(perm)}")
    return PermOneLine(perm)


def inverse_permutation(perm: Sequence[int]) -> PermOneLine:
    inverse = [0] * len(perm)
    for position, value in enumerate(perm, start=1):
        inverse[value - 1] = position
    return PermOneLine(tuple(inverse))

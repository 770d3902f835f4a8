"""Reverse/complement group action on permutations, patterns, and pattern sets.

The four operations {identity, reverse, complement, reverse-complement}
form a Klein four-group.  Reversing a pattern reads its letters and
dashes right to left; complementing maps letter ``x`` to ``k+1-x`` and
leaves the dashes where they are.  Avoidance counts are invariant along
an orbit, so each orbit ("symmetry class") is summarised by a canonical
representative: the image whose sorted pattern strings are
lexicographically smallest.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .patterns import VincularPattern, as_pattern, as_pattern_set, set_key

__all__ = [
    "SymmetryOp",
    "ALL_OPS",
    "reverse_permutation",
    "complement_permutation",
    "apply_to_permutation",
    "reverse_pattern",
    "complement_pattern",
    "apply_to_pattern",
    "apply_to_set",
    "orbit",
    "canonical_form",
    "SymmetryClass",
    "symmetry_class",
]


class SymmetryOp(str, Enum):
    IDENTITY = "identity"
    REVERSE = "reverse"
    COMPLEMENT = "complement"
    REVERSE_COMPLEMENT = "reverse_complement"


ALL_OPS: tuple[SymmetryOp, ...] = (
    SymmetryOp.IDENTITY,
    SymmetryOp.REVERSE,
    SymmetryOp.COMPLEMENT,
    SymmetryOp.REVERSE_COMPLEMENT,
)


def reverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(perm))


def complement_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    n = len(perm)
    return tuple(n + 1 - v for v in perm)


def apply_to_permutation(op: SymmetryOp, perm: Sequence[int]) -> tuple[int, ...]:
    if op is SymmetryOp.IDENTITY:
        return tuple(perm)
    if op is SymmetryOp.REVERSE:
        return reverse_permutation(perm)
    if op is SymmetryOp.COMPLEMENT:
        return complement_permutation(perm)
    return complement_permutation(reverse_permutation(perm))


def reverse_pattern(pattern: VincularPattern | str) -> VincularPattern:
    """Read the pattern right to left, dashes included.

    >>> str(reverse_pattern("216-4-53"))
    '35-4-612'
    """
    p = as_pattern(pattern)
    return VincularPattern(tuple(reversed(p.letters)), tuple(reversed(p.blocks)))


def complement_pattern(pattern: VincularPattern | str) -> VincularPattern:
    """Complement the letters, leaving the dashes unchanged.

    >>> str(complement_pattern("216-4-53"))
    '561-3-24'
    """
    p = as_pattern(pattern)
    k = len(p.letters)
    return VincularPattern(tuple(k + 1 - x for x in p.letters), p.blocks)


def apply_to_pattern(op: SymmetryOp, pattern: VincularPattern | str) -> VincularPattern:
    p = as_pattern(pattern)
    if op is SymmetryOp.IDENTITY:
        return p
    if op is SymmetryOp.REVERSE:
        return reverse_pattern(p)
    if op is SymmetryOp.COMPLEMENT:
        return complement_pattern(p)
    return complement_pattern(reverse_pattern(p))


def apply_to_set(
    op: SymmetryOp, patterns: Iterable[VincularPattern | str] | str
) -> frozenset[VincularPattern]:
    return frozenset(apply_to_pattern(op, p) for p in as_pattern_set(patterns))


def orbit(patterns: Iterable[VincularPattern | str] | str) -> tuple[frozenset[VincularPattern], ...]:
    """The distinct images under the four operations, sorted canonically."""
    ps = as_pattern_set(patterns)
    images = {set_key(img): img for img in (apply_to_set(op, ps) for op in ALL_OPS)}
    return tuple(images[key] for key in sorted(images))


def canonical_form(patterns: Iterable[VincularPattern | str] | str) -> frozenset[VincularPattern]:
    """The orbit member whose sorted pattern strings compare smallest."""
    return orbit(patterns)[0]


@dataclass(frozen=True)
class SymmetryClass:
    """An orbit under the four operations.

    ``members`` holds the distinct image sets (1, 2, or 4 of them) in
    canonical order; ``canonical`` is the first.  ``name`` is an optional
    label bound from the embedded tables.
    """

    canonical: frozenset[VincularPattern]
    members: tuple[frozenset[VincularPattern], ...]
    name: str | None = None

    def __post_init__(self) -> None:
        if self.canonical not in self.members:
            raise ValueError("canonical representative must be one of the members")
        if 4 % len(self.members) != 0:
            raise ValueError("orbit size must divide 4")


def symmetry_class(
    patterns: Iterable[VincularPattern | str] | str, name: str | None = None
) -> SymmetryClass:
    members = orbit(patterns)
    return SymmetryClass(members[0], members, name)

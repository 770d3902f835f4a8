"""Permutations and vincular (dashed) patterns.

Conventions used throughout the package:

- A permutation is a tuple of distinct integers ``1..n`` in one-line
  notation, e.g. ``(1, 5, 3, 4, 2, 6)``.  Most functions accept any
  sequence of distinct integers (a "word") because containment only
  depends on the relative order of the entries.
- A vincular pattern is written as digits separated by dashes:
  ``"32-14"`` has letters ``3, 2, 1, 4`` split into the blocks ``32``
  and ``14``.  Letters inside a block must occupy *adjacent* positions
  of the host permutation; a dash allows (but does not force) a gap.
- Occurrences are reported as strictly increasing 1-based position
  tuples, in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import kernels

MAX_PERMUTATION_LENGTH = 20

__all__ = [
    "MAX_PERMUTATION_LENGTH",
    "PatternError",
    "VincularPattern",
    "parse_pattern",
    "parse_pattern_set",
    "as_pattern",
    "as_pattern_set",
    "set_key",
    "format_pattern_set",
    "SINGLE_DASH_PATTERNS",
    "standardize",
    "check_permutation",
    "parse_permutation",
    "format_permutation",
    "contains",
    "occurrences",
    "avoids_all",
]


class PatternError(ValueError):
    """Raised for malformed pattern or permutation text."""


@dataclass(frozen=True)
class VincularPattern:
    """A dashed pattern: letters plus the lengths of its dash-free blocks.

    ``blocks`` lists the number of letters between consecutive dashes,
    so ``parse_pattern("216-4-53")`` has ``letters == (2, 1, 6, 4, 5, 3)``
    and ``blocks == (3, 1, 2)``.
    """

    letters: tuple[int, ...]
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        k = len(self.letters)
        if sorted(self.letters) != list(range(1, k + 1)):
            raise PatternError(f"letters {self.letters} are not a permutation of 1..{k}")
        if k > 9:
            raise PatternError("patterns longer than 9 letters are not supported")
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise PatternError("every block must contain at least one letter")
        if sum(self.blocks) != k:
            raise PatternError(f"blocks {self.blocks} do not cover {k} letters")

    def __str__(self) -> str:
        parts = []
        pos = 0
        for b in self.blocks:
            parts.append("".join(str(x) for x in self.letters[pos : pos + b]))
            pos += b
        return "-".join(parts)

    def __repr__(self) -> str:
        return f"VincularPattern({str(self)!r})"

    def __len__(self) -> int:
        return len(self.letters)


def parse_pattern(text: str) -> VincularPattern:
    """Parse dashed pattern text such as ``"216-4-53"``.

    >>> parse_pattern("216-4-53").blocks
    (3, 1, 2)
    >>> parse_pattern("1")
    VincularPattern('1')
    """
    if not text:
        raise PatternError("empty pattern")
    letters: list[int] = []
    blocks: list[int] = []
    current = 0
    for i, ch in enumerate(text):
        if ch == "-":
            if current == 0:
                kind = "leading" if i == 0 else "consecutive"
                raise PatternError(f"{kind} dash at position {i + 1} in {text!r}")
            blocks.append(current)
            current = 0
        elif "1" <= ch <= "9":
            letters.append(int(ch))
            current += 1
        else:
            raise PatternError(f"invalid character {ch!r} at position {i + 1} in {text!r}")
    if current == 0:
        raise PatternError(f"trailing dash at position {len(text)} in {text!r}")
    blocks.append(current)
    k = len(letters)
    if sorted(letters) != list(range(1, k + 1)):
        raise PatternError(f"letters of {text!r} are not a permutation of 1..{k}")
    return VincularPattern(tuple(letters), tuple(blocks))


def as_pattern(pattern: VincularPattern | str) -> VincularPattern:
    if isinstance(pattern, VincularPattern):
        return pattern
    return parse_pattern(pattern)


def parse_pattern_set(text: str) -> frozenset[VincularPattern]:
    """Parse a comma-separated list of patterns; the empty string is the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(parse_pattern(part.strip()) for part in text.split(","))


def as_pattern_set(patterns: Iterable[VincularPattern | str] | str) -> frozenset[VincularPattern]:
    if isinstance(patterns, str):
        return parse_pattern_set(patterns)
    return frozenset(as_pattern(p) for p in patterns)


def set_key(patterns: Iterable[VincularPattern]) -> tuple[str, ...]:
    """Deterministic sort key for a pattern set: its sorted pattern strings."""
    return tuple(sorted(str(p) for p in patterns))


def format_pattern_set(patterns: Iterable[VincularPattern]) -> str:
    return ",".join(set_key(patterns))


#: The 12 vincular patterns of length three with a single dash, i.e. the
#: patterns of type (1,2) or (2,1).  Classification workflows draw their
#: forbidden sets from this collection.
SINGLE_DASH_PATTERNS: tuple[VincularPattern, ...] = tuple(
    parse_pattern(s)
    for s in (
        "1-23", "1-32", "12-3", "13-2",
        "2-13", "2-31", "21-3", "23-1",
        "3-12", "3-21", "31-2", "32-1",
    )
)


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    """The unique permutation of 1..len(word) order-isomorphic to ``word``.

    >>> standardize((5, 3, 2, 6))
    (3, 2, 1, 4)
    >>> standardize(())
    ()
    """
    vals = tuple(word)
    if len(set(vals)) != len(vals):
        raise ValueError(f"duplicate entries in {vals}")
    rank = {v: i + 1 for i, v in enumerate(sorted(vals))}
    return tuple(rank[v] for v in vals)


def check_permutation(values: Sequence[int]) -> tuple[int, ...]:
    """Validate one-line notation: distinct values covering 1..n, n <= 20."""
    perm = tuple(values)
    n = len(perm)
    if n > MAX_PERMUTATION_LENGTH:
        raise PatternError(f"permutation length {n} exceeds the guard {MAX_PERMUTATION_LENGTH}")
    if sorted(perm) != list(range(1, n + 1)):
        raise PatternError(f"{perm} is not a permutation of 1..{n}")
    return perm


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse a permutation: space-free digits for n <= 9, else comma-separated.

    >>> parse_permutation("153426")
    (1, 5, 3, 4, 2, 6)
    >>> parse_permutation("10,2,3,4,5,6,7,8,9,1")[0]
    10
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        try:
            values = [int(part) for part in text.split(",")]
        except ValueError as exc:
            raise PatternError(f"invalid permutation text {text!r}: {exc}") from None
    else:
        values = []
        for i, ch in enumerate(text):
            if not ("1" <= ch <= "9"):
                raise PatternError(f"invalid character {ch!r} at position {i + 1} in {text!r}")
            values.append(int(ch))
    return check_permutation(values)


def format_permutation(perm: Sequence[int]) -> str:
    if len(perm) <= 9:
        return "".join(str(v) for v in perm)
    return ",".join(str(v) for v in perm)


def contains(perm: Sequence[int], pattern: VincularPattern | str) -> bool:
    """Whether ``perm`` contains the vincular pattern.

    True iff some strictly increasing choice of positions is
    order-isomorphic to the pattern's letters and each dash-free block
    lands on positions that are adjacent in ``perm``.
    """
    pat = as_pattern(pattern)
    return bool(kernels.contains(tuple(perm), pat.letters, pat.blocks))


def occurrences(perm: Sequence[int], pattern: VincularPattern | str) -> list[tuple[int, ...]]:
    """All witnessing position tuples (1-based), in lexicographic order.

    Deliberately brute force -- combinations filtered by the block
    adjacency constraint -- so it can serve as an independent check of
    the kernel ``contains``.
    """
    pat = as_pattern(pattern)
    word = tuple(perm)
    n, k = len(word), len(pat.letters)
    out: list[tuple[int, ...]] = []
    for combo in itertools.combinations(range(n), k):
        pos = 0
        for b in pat.blocks:
            if any(combo[pos + j + 1] != combo[pos + j] + 1 for j in range(b - 1)):
                break
            pos += b
        else:
            if standardize(tuple(word[i] for i in combo)) == pat.letters:
                out.append(tuple(i + 1 for i in combo))
    return out


def avoids_all(perm: Sequence[int], patterns: Iterable[VincularPattern | str] | str) -> bool:
    """True iff ``perm`` contains none of the given patterns."""
    word = tuple(perm)
    return not any(contains(word, p) for p in as_pattern_set(patterns))

"""Counting and listing pattern-avoiding permutations.

The workhorse is a pruned depth-first search that builds permutations
left to right over unused values: appending a value on the right keeps
every earlier position pair adjacent, so a prefix that contains a
pattern can never be extended to an avoider and the branch is cut.  The
naive n!-filter counter exists purely as an independent oracle.

Lengths are guarded: counting up to n = 20, listing up to n = 12,
the oracle up to n = 8.  Reports index from n = 1; the empty
permutation is not counted in sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernels
from .patterns import VincularPattern, as_pattern_set

MAX_COUNT_N = 20
MAX_LIST_N = 12
MAX_NAIVE_N = 8
MAX_SEQUENCE_N = 12

__all__ = [
    "MAX_COUNT_N",
    "MAX_LIST_N",
    "MAX_NAIVE_N",
    "MAX_SEQUENCE_N",
    "CountingSequence",
    "kernel_patterns",
    "count_avoiders",
    "list_avoiders",
    "count_avoiders_naive",
    "counting_sequence",
]

Patterns = "Iterable[VincularPattern | str] | str"


def kernel_patterns(patterns) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Compile a pattern collection into the plain-tuple form the kernels take."""
    ps = as_pattern_set(patterns)
    return tuple((p.letters, p.blocks) for p in sorted(ps, key=str))


def _check_n(n: int, limit: int, what: str) -> None:
    if not 1 <= n <= limit:
        raise ValueError(f"{what} length must be in 1..{limit}, got {n}")


@dataclass(frozen=True)
class CountingSequence:
    """Counts of avoiders indexed by length: ``counts[i]`` is |S_{i+1}(P)|."""

    patterns: frozenset[VincularPattern]
    counts: tuple[int, ...]

    @property
    def max_n(self) -> int:
        return len(self.counts)

    def count(self, n: int) -> int:
        return self.counts[n - 1]


def count_avoiders(n: int, patterns) -> int:
    """The number of permutations of length n avoiding every given pattern."""
    _check_n(n, MAX_COUNT_N, "counting")
    return kernels.count_avoiders(n, kernel_patterns(patterns))


def list_avoiders(n: int, patterns) -> list[tuple[int, ...]]:
    """All avoiders of length n in lexicographic order."""
    _check_n(n, MAX_LIST_N, "listing")
    return kernels.list_avoiders(n, kernel_patterns(patterns))


def count_avoiders_naive(n: int, patterns) -> int:
    """Oracle count: filter all n! permutations, no pruning, no shortcuts."""
    _check_n(n, MAX_NAIVE_N, "naive counting")
    return kernels.count_avoiders_naive(n, kernel_patterns(patterns))


def counting_sequence(max_n: int, patterns) -> CountingSequence:
    """Counts for n = 1..max_n; zeros absorb (a prefix of an avoider avoids)."""
    _check_n(max_n, MAX_SEQUENCE_N, "sequence")
    ps = as_pattern_set(patterns)
    compiled = tuple((p.letters, p.blocks) for p in sorted(ps, key=str))
    counts: list[int] = []
    for n in range(1, max_n + 1):
        if counts and counts[-1] == 0:
            counts.append(0)
        else:
            counts.append(kernels.count_avoiders(n, compiled))
    return CountingSequence(ps, tuple(counts))

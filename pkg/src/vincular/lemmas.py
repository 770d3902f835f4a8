"""Exhaustive verification of the closure, containment, and structure facts.

Three registries drive the suite:

- ``CLOSURE_LEMMAS`` (P1..P8): avoiding the premise patterns forces
  avoidance of one more pattern, so adding it leaves every S_n unchanged.
- ``CONTAINMENT_LEMMAS`` (C1..C4): any occurrence of one pattern forces
  an occurrence of another.
- ``STRUCTURE_LEMMAS`` (S1..S7): for every pattern choice from the given
  columns, the avoiders of each length are exactly an explicitly
  describable set (two permutations, or one for S7).

Verification is exhaustive up to a recorded bound (default and maximum
n = 9), never symbolic; counterexamples are reported as the
lexicographically least permutation of the least failing length.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import kernels
from .enumeration import kernel_patterns, list_avoiders
from .patterns import (
    VincularPattern,
    as_pattern,
    as_pattern_set,
    format_pattern_set,
)

MAX_VERIFY_N = 9

__all__ = [
    "MAX_VERIFY_N",
    "CLOSURE_LEMMAS",
    "CONTAINMENT_LEMMAS",
    "STRUCTURE_LEMMAS",
    "STRUCTURE_TEMPLATES",
    "LemmaRecord",
    "VerificationResult",
    "verify_closure",
    "verify_containment_implication",
    "expected_structure",
    "verify_structure",
    "run_lemma",
    "run_all_lemmas",
]

#: id -> (premise patterns, pattern whose avoidance is forced)
CLOSURE_LEMMAS: dict[str, tuple[tuple[str, ...], str]] = {
    "P1": (("2-13",), "21-3"),
    "P2": (("31-2",), "3-12"),
    "P3": (("2-31",), "23-1"),
    "P4": (("13-2",), "1-32"),
    "P5": (("1-23", "2-13"), "12-3"),
    "P6": (("1-23", "21-3"), "12-3"),
    "P7": (("1-23", "2-31"), "12-3"),
    "P8": (("1-23", "23-1"), "12-3"),
}

#: id -> (pattern, pattern forced to occur alongside it)
CONTAINMENT_LEMMAS: dict[str, tuple[str, str]] = {
    "C1": ("23-1", "2-31"),
    "C2": ("1-32", "13-2"),
    "C3": ("21-3", "2-13"),
    "C4": ("3-12", "31-2"),
}

#: id -> (choice columns, template id, extra pattern added to every choice)
STRUCTURE_LEMMAS: dict[str, tuple[tuple[tuple[str, ...], ...], str, str | None]] = {
    "S1": ((("1-23",), ("2-31", "23-1"), ("1-32", "13-2"), ("3-12", "31-2")),
           "decreasing-pair", None),
    "S2": ((("1-23",), ("2-13", "21-3"), ("1-32", "13-2"), ("3-12", "31-2")),
           "decreasing-or-max-second", None),
    "S3": ((("2-13", "21-3"), ("2-31", "23-1"), ("1-32", "13-2"), ("3-12", "31-2")),
           "decreasing-or-identity", None),
    "S4": ((("12-3",), ("2-13", "21-3"), ("2-31", "23-1"), ("32-1",)),
           "zigzag-pair", None),
    "S5": ((("1-23",), ("2-13", "21-3"), ("2-31", "23-1"), ("3-12", "31-2")),
           "decreasing-or-one-first", None),
    "S6": ((("1-23",), ("2-13", "21-3"), ("2-31", "23-1"), ("1-32", "13-2")),
           "decreasing-or-swap-last", None),
    # adding 1-23 to any S3 choice leaves only the decreasing permutation
    "S7": ((("2-13", "21-3"), ("2-31", "23-1"), ("1-32", "13-2"), ("3-12", "31-2")),
           "singleton-decreasing", "1-23"),
}


def _decreasing(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def _zigzag_from_low(n: int) -> tuple[int, ...]:
    out = []
    lo, hi = 1, n
    for i in range(n):
        if i % 2 == 0:
            out.append(lo)
            lo += 1
        else:
            out.append(hi)
            hi -= 1
    return tuple(out)


def _zigzag_from_high(n: int) -> tuple[int, ...]:
    out = []
    lo, hi = 1, n
    for i in range(n):
        if i % 2 == 0:
            out.append(hi)
            hi -= 1
        else:
            out.append(lo)
            lo += 1
    return tuple(out)


STRUCTURE_TEMPLATES = {
    "decreasing-pair": lambda n: (_decreasing(n), tuple(range(n - 1, 0, -1)) + (n,)),
    "decreasing-or-max-second": lambda n: (_decreasing(n), (n - 1, n) + tuple(range(n - 2, 0, -1))),
    "decreasing-or-identity": lambda n: (_decreasing(n), tuple(range(1, n + 1))),
    "zigzag-pair": lambda n: (_zigzag_from_low(n), _zigzag_from_high(n)),
    "decreasing-or-one-first": lambda n: (_decreasing(n), (1,) + tuple(range(n, 1, -1))),
    "decreasing-or-swap-last": lambda n: (_decreasing(n), tuple(range(n, 2, -1)) + (1, 2)),
    "singleton-decreasing": lambda n: (_decreasing(n),),
}


def _template_key(template: str) -> str:
    key = template.strip().lower().replace(" ", "-").replace("_", "-")
    if key not in STRUCTURE_TEMPLATES:
        raise ValueError(f"unknown structure template {template!r}")
    return key


def expected_structure(template: str, n: int) -> tuple[tuple[int, ...], ...]:
    """The explicit avoider set a structure template predicts for length n."""
    if n < 3:
        raise ValueError(f"structure templates are stated for n >= 3, got {n}")
    return tuple(sorted(STRUCTURE_TEMPLATES[_template_key(template)](n)))


@dataclass(frozen=True)
class VerificationResult:
    holds: bool
    checked_up_to: int
    witness: tuple[int, ...] | None = None
    detail: str | None = None


@dataclass(frozen=True)
class LemmaRecord:
    """A verified statement: what was claimed and how far it was checked."""

    id: str
    kind: str  # "closure" | "containment_implication" | "structure"
    premise: tuple[str, ...]
    conclusion: str
    verified_up_to: int
    holds: bool
    witness: tuple[int, ...] | None = None


def _check_bound(max_n: int) -> None:
    if not 1 <= max_n <= MAX_VERIFY_N:
        raise ValueError(f"verification bound must be in 1..{MAX_VERIFY_N}, got {max_n}")


def verify_closure(premise, conclusion, max_n: int = MAX_VERIFY_N) -> VerificationResult:
    """Check that S_n(premise) = S_n(premise + conclusion) for all n <= max_n.

    Equality is checked as the absence of a premise-avoider containing the
    conclusion pattern; the first counterexample (least length, then
    lexicographically least) is returned on failure.
    """
    _check_bound(max_n)
    compiled = kernel_patterns(premise)
    extra = as_pattern(conclusion)
    for n in range(1, max_n + 1):
        witness = kernels.closure_counterexample(n, compiled, (extra.letters, extra.blocks))
        if witness is not None:
            return VerificationResult(False, n, witness)
    return VerificationResult(True, max_n)


def verify_containment_implication(pattern, implied, max_n: int = MAX_VERIFY_N) -> VerificationResult:
    """Check that every permutation of length <= max_n containing ``pattern``
    also contains ``implied``."""
    _check_bound(max_n)
    p = as_pattern(pattern)
    q = as_pattern(implied)
    for n in range(1, max_n + 1):
        witness = kernels.implication_counterexample(
            n, (p.letters, p.blocks), (q.letters, q.blocks)
        )
        if witness is not None:
            return VerificationResult(False, n, witness)
    return VerificationResult(True, max_n)


def verify_structure(template, columns, max_n: int = MAX_VERIFY_N, extra=None) -> VerificationResult:
    """Check that every cross-product choice has exactly the template's avoiders.

    ``columns`` is a sequence of pattern alternatives; one pattern is
    chosen per column (plus ``extra``, when given) and the avoider list is
    compared with the template for every 3 <= n <= max_n.
    """
    _check_bound(max_n)
    key = _template_key(template)
    cols = [tuple(as_pattern(p) for p in col) for col in columns]
    extras = [as_pattern(extra)] if extra is not None else []
    for choice in product(*cols):
        patterns = as_pattern_set(list(choice) + extras)
        for n in range(3, max_n + 1):
            got = tuple(sorted(list_avoiders(n, patterns)))
            if got != expected_structure(key, n):
                return VerificationResult(
                    False, n, detail=f"choice {format_pattern_set(patterns)} at n={n}"
                )
    return VerificationResult(True, max_n)


def run_lemma(lemma_id: str, max_n: int = MAX_VERIFY_N) -> LemmaRecord:
    """Verify one registered lemma and record the outcome."""
    if lemma_id in CLOSURE_LEMMAS:
        premise, conclusion = CLOSURE_LEMMAS[lemma_id]
        res = verify_closure(premise, conclusion, max_n)
        return LemmaRecord(lemma_id, "closure", premise, conclusion,
                           res.checked_up_to, res.holds, res.witness)
    if lemma_id in CONTAINMENT_LEMMAS:
        pattern, implied = CONTAINMENT_LEMMAS[lemma_id]
        res = verify_containment_implication(pattern, implied, max_n)
        return LemmaRecord(lemma_id, "containment_implication", (pattern,), implied,
                           res.checked_up_to, res.holds, res.witness)
    if lemma_id in STRUCTURE_LEMMAS:
        columns, template, extra = STRUCTURE_LEMMAS[lemma_id]
        res = verify_structure(template, columns, max_n, extra=extra)
        premise = tuple("|".join(col) for col in columns) + ((extra,) if extra else ())
        return LemmaRecord(lemma_id, "structure", premise, template,
                           res.checked_up_to, res.holds, res.witness)
    raise KeyError(f"unknown lemma id {lemma_id!r}")


def run_all_lemmas(max_n: int = MAX_VERIFY_N) -> list[LemmaRecord]:
    ids = [*CLOSURE_LEMMAS, *CONTAINMENT_LEMMAS, *STRUCTURE_LEMMAS]
    return [run_lemma(lemma_id, max_n) for lemma_id in ids]

"""Closed-form counting families and identification of counting sequences.

Families are matched on the window n = 3..N: the counts at n = 1, 2 are
forced (1 and 2) for every set of length-3 patterns, so they carry no
information and several families are not even defined there.

The Fibonacci and Motzkin index offsets were pinned by calibrating
against the brute-force counter on their known base classes
({1-23,2-13,1-32} and {1-23,12-3,21-3}) and are frozen below:
fibonacci(1) = 1, fibonacci(2) = 2 and motzkin(n) uses the convolution
recurrence seeded with value 1 one step before n = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import ceil, comb

from .enumeration import CountingSequence

__all__ = [
    "FAMILY_KINDS",
    "SequenceFamily",
    "family_value",
    "MatchResult",
    "match_sequence",
]

FAMILY_KINDS = (
    "constant",
    "linear_n",
    "fibonacci",
    "motzkin",
    "pow2_shift1",
    "pow2_shift2_plus1",
    "one_plus_binom2",
    "central_binomial",
)

_PARAMETERLESS = tuple(kind for kind in FAMILY_KINDS if kind != "constant")

_LABELS = {
    "linear_n": "n",
    "fibonacci": "F(n)",
    "motzkin": "M(n)",
    "pow2_shift1": "2^(n-1)",
    "pow2_shift2_plus1": "2^(n-2)+1",
    "one_plus_binom2": "1+C(n,2)",
    "central_binomial": "C(n,ceil(n/2))",
}


@dataclass(frozen=True)
class SequenceFamily:
    """A named counting family; constant families carry value and threshold."""

    kind: str
    constant: int | None = None
    threshold: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "constant":
            if self.constant is None or self.constant < 0:
                raise ValueError("constant family needs a non-negative constant")
        elif self.constant is not None or self.threshold is not None:
            raise ValueError(f"{self.kind} takes no parameters")

    @property
    def label(self) -> str:
        if self.kind == "constant":
            if self.threshold is None:
                return f"{self.constant} eventually"
            return f"{self.constant} for n>={self.threshold}"
        return _LABELS[self.kind]

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.constant is not None:
            out["constant"] = self.constant
        if self.threshold is not None:
            out["threshold"] = self.threshold
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SequenceFamily":
        return cls(data["kind"], data.get("constant"), data.get("threshold"))


@lru_cache(maxsize=None)
def _fibonacci(n: int) -> int:
    # seeds calibrated: value 1 at n=1, 2 at n=2
    if n <= 2:
        return n
    return _fibonacci(n - 1) + _fibonacci(n - 2)


@lru_cache(maxsize=None)
def _motzkin(n: int) -> int:
    # convolution recurrence; _motzkin(0) = 1 is the internal seed
    if n <= 1:
        return 1
    return _motzkin(n - 1) + sum(_motzkin(i) * _motzkin(n - 2 - i) for i in range(n - 1))


def family_value(family: SequenceFamily, n: int) -> int:
    """Value of the family at index n; defined for n >= 3 (and above a
    constant family's threshold)."""
    if n < 3:
        raise ValueError(f"family values are defined for n >= 3, got {n}")
    kind = family.kind
    if kind == "constant":
        if family.threshold is None:
            raise ValueError("constant family without a threshold cannot be evaluated")
        if n < family.threshold:
            raise ValueError(f"constant family starts at n = {family.threshold}, got {n}")
        return family.constant  # type: ignore[return-value]
    if kind == "linear_n":
        return n
    if kind == "fibonacci":
        return _fibonacci(n)
    if kind == "motzkin":
        return _motzkin(n)
    if kind == "pow2_shift1":
        return 2 ** (n - 1)
    if kind == "pow2_shift2_plus1":
        return 2 ** (n - 2) + 1
    if kind == "one_plus_binom2":
        return 1 + comb(n, 2)
    return comb(n, ceil(n / 2))


@dataclass(frozen=True)
class MatchResult:
    """Outcome of sequence identification."""

    status: str  # "matched" | "unknown" | "ambiguous"
    families: tuple[SequenceFamily, ...] = ()

    @property
    def family(self) -> SequenceFamily | None:
        return self.families[0] if self.families else None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "families": [f.to_json() for f in self.families],
        }


def fit_constant(counts: tuple[int, ...]) -> SequenceFamily | None:
    """Fit a constant family to the stable tail, if it has >= 3 terms.

    The threshold is the smallest index from which every count equals the
    final one.
    """
    n_max = len(counts)
    c = counts[-1]
    k = n_max
    while k > 1 and counts[k - 2] == c:
        k -= 1
    if n_max - k + 1 < 3:
        return None
    return SequenceFamily("constant", constant=c, threshold=k)


def match_sequence(counts: CountingSequence | tuple[int, ...] | list[int]) -> MatchResult:
    """Identify the unique family agreeing with the counts on n = 3..N.

    Requires N >= 7.  Returns status "unknown" when nothing matches and
    "ambiguous" with all matches when several families do (a longer
    window is then needed).
    """
    seq = counts.counts if isinstance(counts, CountingSequence) else tuple(counts)
    n_max = len(seq)
    if n_max < 7:
        raise ValueError(f"matching needs counts up to n >= 7, got {n_max}")
    matches: list[SequenceFamily] = []
    for kind in _PARAMETERLESS:
        fam = SequenceFamily(kind)
        if all(family_value(fam, n) == seq[n - 1] for n in range(3, n_max + 1)):
            matches.append(fam)
    constant = fit_constant(seq)
    if constant is not None:
        matches.append(constant)
    if not matches:
        return MatchResult("unknown")
    if len(matches) == 1:
        return MatchResult("matched", tuple(matches))
    return MatchResult("ambiguous", tuple(matches))

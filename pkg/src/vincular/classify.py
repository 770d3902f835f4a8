"""Classification of forbidden-pattern subsets and replay of the tables.

``partition_into_symmetry_classes`` groups all k-subsets of the twelve
single-dash patterns into orbits; ``classify_all`` enumerates one
representative per orbit, identifies the counting family, and can
cross-check the pruned counter against the naive oracle.
``verify_table`` re-derives every embedded table row: counts must match
the claimed family, derived rows must pass the closure check against
their base class, and cross-product rows must reproduce their explicit
avoider sets.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .enumeration import (
    MAX_NAIVE_N,
    count_avoiders_naive,
    counting_sequence,
    list_avoiders,
)
from .lemmas import CLOSURE_LEMMAS, MAX_VERIFY_N, expected_structure, verify_closure
from .patterns import (
    SINGLE_DASH_PATTERNS,
    VincularPattern,
    as_pattern_set,
    format_pattern_set,
    set_key,
)
from .sequences import MatchResult, SequenceFamily, family_value, match_sequence
from .symmetry import SymmetryClass, canonical_form, symmetry_class
from .tables import Tables, TableRow, load_tables

__all__ = [
    "partition_into_symmetry_classes",
    "family_agrees",
    "RowCheck",
    "TableVerification",
    "verify_table",
    "DedupeResult",
    "dedupe_cross_product_classes",
    "ClassEntry",
    "ClassificationReport",
    "classify_all",
]


def partition_into_symmetry_classes(k: int) -> list[SymmetryClass]:
    """All C(12, k) subsets grouped into orbits, sorted canonically."""
    if not 1 <= k <= 6:
        raise ValueError(f"subset size must be in 1..6, got {k}")
    groups: dict[tuple[str, ...], list[frozenset[VincularPattern]]] = {}
    for subset in combinations(sorted(SINGLE_DASH_PATTERNS, key=str), k):
        cls = symmetry_class(subset)
        groups.setdefault(set_key(cls.canonical), []).append(frozenset(subset))
    out = []
    for key in sorted(groups):
        cls = symmetry_class(groups[key][0])
        if set(groups[key]) != set(cls.members):
            raise AssertionError(f"orbit mismatch for {key}")
        out.append(cls)
    return out


def family_agrees(family: SequenceFamily, counts: tuple[int, ...]) -> tuple[bool, int | None]:
    """Whether counts match the claimed family; returns a fitted threshold
    for constant families that do not state one.

    Non-constant families are compared on n = 3..N (values at n = 1, 2
    are forced).  A constant family with a threshold is compared from the
    threshold on; without one, the smallest index from which the counts
    stay at the constant is fitted and reported.
    """
    n_max = len(counts)
    if family.kind != "constant":
        ok = all(counts[n - 1] == family_value(family, n) for n in range(3, n_max + 1))
        return ok, None
    c = family.constant
    if family.threshold is not None:
        start = max(1, family.threshold)
        return all(counts[n - 1] == c for n in range(start, n_max + 1)), family.threshold
    if counts[-1] != c:
        return False, None
    start = n_max
    while start > 1 and counts[start - 2] == c:
        start -= 1
    return True, start


@dataclass(frozen=True)
class RowCheck:
    row: TableRow
    counts: tuple[int, ...]
    family_ok: bool
    fitted_threshold: int | None
    derivation_ok: bool | None  # None when the row carries no closure claim
    structure_ok: bool | None
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return (
            self.family_ok
            and self.derivation_ok is not False
            and self.structure_ok is not False
        )


def check_row(row: TableRow, max_n: int = MAX_VERIFY_N) -> RowCheck:
    counts = counting_sequence(max_n, row.patterns).counts
    family_ok, fitted = family_agrees(row.family, counts)
    notes: list[str] = []

    derivation_ok = None
    if row.prop is not None and row.base_patterns is not None:
        if row.added is None:
            derivation_ok = False
            notes.append("derived row does not differ from its base by one pattern")
        else:
            union_ok = (row.base_patterns | {row.added}) == row.patterns
            closure = verify_closure(row.base_patterns, row.added, max_n)
            derivation_ok = union_ok and closure.holds
            if not union_ok:
                notes.append("base plus added pattern does not equal the row's set")
            if not closure.holds:
                notes.append(f"closure fails, witness {closure.witness}")
            premise, conclusion = CLOSURE_LEMMAS[row.prop]
            if not (as_pattern_set(premise) <= row.base_patterns and str(row.added) == conclusion):
                notes.append(f"named proposition {row.prop} does not apply as stated")
    elif row.base_patterns is not None:
        notes.append(f"zero-superset of {row.base_name}")

    structure_ok = None
    if row.template is not None:
        structure_ok = True
        for n in range(3, max_n + 1):
            got = tuple(sorted(list_avoiders(n, row.patterns)))
            if got != expected_structure(row.template, n):
                structure_ok = False
                notes.append(f"avoiders differ from template at n={n}")
                break

    return RowCheck(row, counts, family_ok, fitted, derivation_ok, structure_ok, tuple(notes))


@dataclass(frozen=True)
class TableVerification:
    table_id: int
    max_n: int
    checks: tuple[RowCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[RowCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


def _check_row_args(args: tuple[TableRow, int]) -> RowCheck:
    return check_row(args[0], args[1])


def _map_jobs(fn, items, jobs: int):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


def verify_table(
    table_id: int,
    max_n: int = MAX_VERIFY_N,
    tables: Tables | None = None,
    jobs: int = 1,
) -> TableVerification:
    """Re-derive one embedded table; every row gets a pass/fail check."""
    tables = tables or load_tables()
    rows = tables.table(table_id)
    checks = _map_jobs(_check_row_args, [(row, max_n) for row in rows], jobs)
    return TableVerification(table_id, max_n, tuple(checks))


@dataclass(frozen=True)
class DedupeResult:
    """Outcome of deduplicating the constant-2 cross products (table 7)."""

    raw_count: int
    distinct_count: int
    duplicate_groups: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]
    # ^ (canonical key, labels of the raw sets in that class) for classes hit >1 time

    @property
    def duplicate_boxes(self) -> tuple[int, ...]:
        boxes = set()
        for _, labels in self.duplicate_groups:
            for label in labels:
                boxes.add(int(label.split("b")[1].split(".")[0]))
        return tuple(sorted(boxes))


def dedupe_cross_product_classes(tables: Tables | None = None) -> DedupeResult:
    """Expand table 7, count raw representative sets, and deduplicate them
    up to symmetry; reports which box-rows the duplicated classes came from."""
    tables = tables or load_tables()
    rows = tables.table(7)
    groups: dict[tuple[str, ...], list[str]] = {}
    for row in rows:
        key = set_key(canonical_form(row.patterns))
        groups.setdefault(key, []).append(row.label)
    duplicates = tuple(
        (key, tuple(labels)) for key, labels in sorted(groups.items()) if len(labels) > 1
    )
    return DedupeResult(len(rows), len(groups), duplicates)


@dataclass(frozen=True)
class ClassEntry:
    cls: SymmetryClass
    counts: tuple[int, ...]
    match: MatchResult
    oracle_ok: bool | None

    @property
    def label(self) -> str:
        return self.cls.name or format_pattern_set(self.cls.canonical)


@dataclass(frozen=True)
class ClassificationReport:
    k: int
    max_n: int
    oracle_max_n: int | None
    entries: tuple[ClassEntry, ...]

    @property
    def covered_subsets(self) -> int:
        return sum(len(entry.cls.members) for entry in self.entries)

    def family_summary(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for entry in self.entries:
            fam = entry.match.family
            label = fam.label if fam is not None else entry.match.status
            out[label] = out.get(label, 0) + 1
        return dict(sorted(out.items()))


def _classify_worker(args) -> tuple[tuple[int, ...], bool | None]:
    key, max_n, oracle_max = args
    patterns = as_pattern_set(key)
    counts = counting_sequence(max_n, patterns).counts
    oracle_ok = None
    if oracle_max:
        oracle_ok = all(
            count_avoiders_naive(n, patterns) == counts[n - 1]
            for n in range(1, oracle_max + 1)
        )
    return counts, oracle_ok


def classify_all(
    k: int,
    max_n: int = MAX_VERIFY_N,
    oracle: bool = True,
    jobs: int = 1,
    tables: Tables | None = None,
) -> ClassificationReport:
    """Enumerate and identify every symmetry class of k forbidden patterns."""
    if k not in (3, 4, 5, 6):
        raise ValueError(f"classification supports k in 3..6, got {k}")
    limit = 9 if oracle else 10
    if not 7 <= max_n <= limit:
        raise ValueError(f"max_n must be in 7..{limit} (oracle={oracle}), got {max_n}")
    classes = partition_into_symmetry_classes(k)

    names: dict[tuple[str, ...], str] = {}
    if tables is not None:
        for name, patterns in tables.names.items():
            if len(patterns) == k:
                key = set_key(canonical_form(patterns))
                names[key] = f"{names[key]}/{name}" if key in names else name

    oracle_max = min(max_n, MAX_NAIVE_N) if oracle else None
    work = [(set_key(cls.canonical), max_n, oracle_max) for cls in classes]
    results = _map_jobs(_classify_worker, work, jobs)

    entries = []
    for cls, (counts, oracle_ok) in zip(classes, results):
        name = names.get(set_key(cls.canonical))
        if name is not None:
            cls = SymmetryClass(cls.canonical, cls.members, name)
        entries.append(ClassEntry(cls, counts, match_sequence(counts), oracle_ok))
    return ClassificationReport(k, max_n, oracle_max, tuple(entries))

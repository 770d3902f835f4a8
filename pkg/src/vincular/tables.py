"""Loading and expansion of the embedded enumeration tables.

The data file transcribes the source tables verbatim, in a shape
isomorphic to their presentation: explicit rows stay explicit, while
"add one pattern from this box" rows and cross-product rows are stored
as generator descriptions and expanded here at load time.  Expansion
resolves row names (N*/A*/F*/M*/B*/C* for three patterns, d*/e*/O* for
four) into concrete pattern sets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import product
from pathlib import Path

from .patterns import VincularPattern, as_pattern, as_pattern_set
from .sequences import SequenceFamily

__all__ = ["TableRow", "Tables", "load_tables", "TABLE_IDS"]

TABLE_IDS = tuple(range(1, 13))


@dataclass(frozen=True)
class TableRow:
    """One verifiable claim: a pattern set, its claimed family, and
    (optionally) how it was derived from a smaller set."""

    table_id: int
    index: int  # 1-based position within the table, before expansion
    label: str
    patterns: frozenset[VincularPattern]
    family: SequenceFamily
    prop: str | None = None  # proposition named by the source, transcribed as-is
    base_name: str | None = None
    base_patterns: frozenset[VincularPattern] | None = None
    added: VincularPattern | None = None
    template: str | None = None
    box: int | None = None


@dataclass(frozen=True)
class Tables:
    rows: dict[int, tuple[TableRow, ...]]
    names: dict[str, frozenset[VincularPattern]]

    def table(self, table_id: int) -> tuple[TableRow, ...]:
        if table_id not in self.rows:
            raise KeyError(f"no table {table_id}; available: {sorted(self.rows)}")
        return self.rows[table_id]


def _default_path() -> Path:
    return Path(str(resources.files("vincular").joinpath("data/tables.json")))


def load_tables(path: str | Path | None = None) -> Tables:
    """Load and expand the table data file (the packaged one by default)."""
    raw = json.loads(Path(path or _default_path()).read_text())
    if raw.get("version") != 1:
        raise ValueError(f"unsupported table data version {raw.get('version')!r}")

    names: dict[str, frozenset[VincularPattern]] = {}
    rows: dict[int, tuple[TableRow, ...]] = {}

    def register(name: str | None, patterns: frozenset[VincularPattern]) -> None:
        if name is None:
            return
        if name in names:
            raise ValueError(f"duplicate row name {name!r}")
        names[name] = patterns

    for tid_text, spec in sorted(raw["tables"].items(), key=lambda kv: int(kv[0])):
        tid = int(tid_text)
        kind = spec["kind"]
        expanded: list[TableRow] = []
        for index, row in enumerate(spec["rows"], start=1):
            family = SequenceFamily.from_json(row["family"])
            name = row.get("name")
            if kind in ("named", "derived"):
                patterns = as_pattern_set(row["patterns"])
                base_name = row.get("base")
                base = names[base_name] if base_name else None
                added = None
                if base is not None:
                    diff = patterns - base
                    if len(diff) == 1:
                        added = next(iter(diff))
                register(name, patterns)
                expanded.append(TableRow(
                    tid, index, name or f"t{tid}r{index}", patterns, family,
                    prop=row.get("prop"), base_name=base_name,
                    base_patterns=base, added=added,
                ))
            elif kind == "add_one":
                base = names[row["base"]]
                added = as_pattern(row["add"])
                patterns = base | {added}
                register(name, patterns)
                expanded.append(TableRow(
                    tid, index, name or f"t{tid}r{index}", patterns, family,
                    base_name=row["base"], base_patterns=base, added=added,
                ))
            elif kind == "add_choices":
                base = names[row["base"]]
                for j, add_text in enumerate(row["adds"], start=1):
                    added = as_pattern(add_text)
                    expanded.append(TableRow(
                        tid, index, f"t{tid}r{index}.{j}[{row['base']}+{added}]",
                        base | {added}, family,
                        base_name=row["base"], base_patterns=base, added=added,
                        box=index,
                    ))
            elif kind == "cross":
                columns = [tuple(as_pattern(p) for p in col) for col in row["columns"]]
                for j, choice in enumerate(product(*columns), start=1):
                    patterns = frozenset(choice)
                    expanded.append(TableRow(
                        tid, index, f"t{tid}b{row['box']}.{j}", patterns, family,
                        template=row.get("template"), box=row["box"],
                    ))
            elif kind == "derived_ref":
                base = names[row["base"]]
                added = as_pattern(row["add"])
                expanded.append(TableRow(
                    tid, index, f"t{tid}r{index}[{row['base']}+{added}]",
                    base | {added}, family,
                    prop=row.get("prop"), base_name=row["base"],
                    base_patterns=base, added=added,
                ))
            elif kind == "cross_add":
                added = as_pattern(row["add"])
                for j, choice in enumerate(row["choices"], start=1):
                    base = as_pattern_set(choice)
                    expanded.append(TableRow(
                        tid, index, f"t{tid}r{index}.{j}", base | {added}, family,
                        prop=row.get("prop"), base_patterns=base, added=added,
                        box=index,
                    ))
            else:
                raise ValueError(f"unknown table kind {kind!r}")
        rows[tid] = tuple(expanded)

    return Tables(rows, names)

"""Knot catalog: tabulated maximal tb pairs, and their recomputation for
two-bridge knots.

Catalog TSV columns: name, crossing_number, fraction (``p/q`` or empty),
two_bridge (0/1), tb_paper, tb_mirror_paper, amphicheiral (0/1), notes.
Lines starting with ``#`` are comments.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Iterable

from .legendrian import max_tb
from .rational import Frac, parse_fraction

__all__ = [
    "KnotRecord",
    "RowResult",
    "TableReport",
    "CatalogError",
    "MATCH",
    "MISMATCH",
    "REFERENCE_ONLY",
    "ERROR",
    "load_catalog",
    "default_catalog",
    "reproduce_table",
    "emit_table",
]

MATCH = "MATCH"
MISMATCH = "MISMATCH"
REFERENCE_ONLY = "REFERENCE_ONLY"
ERROR = "ERROR"


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossing_number: int
    fraction: Frac | None
    two_bridge: bool
    tb_paper: int
    tb_mirror_paper: int
    amphicheiral: bool
    notes: str = ""

    def validate(self) -> None:
        if self.two_bridge and self.fraction is None:
            raise CatalogError(f"{self.name}: two-bridge record needs a fraction")
        if not self.two_bridge and self.fraction is not None:
            raise CatalogError(f"{self.name}: only two-bridge records carry a fraction")
        if self.amphicheiral and self.tb_paper != self.tb_mirror_paper:
            raise CatalogError(f"{self.name}: amphicheiral knot must have equal tb for both mirrors")


def _flag(text: str, name: str, lineno: int) -> bool:
    if text not in ("0", "1"):
        raise CatalogError(f"line {lineno}: {name} must be 0 or 1, got {text!r}")
    return text == "1"


def load_catalog(source: IO | str | bytes) -> list[KnotRecord]:
    """Parse catalog TSV from a byte stream, text stream, or string."""
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data

    records: list[KnotRecord] = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.split("\n"), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.rstrip("\r").split("\t")
        if len(fields) == 7:
            fields.append("")
        if len(fields) != 8:
            raise CatalogError(f"line {lineno}: expected 8 tab-separated fields, got {len(fields)}")
        name, cn, frac, tb2, tb, tbm, amph, notes = fields
        try:
            record = KnotRecord(
                name=name.strip(),
                crossing_number=int(cn),
                fraction=parse_fraction(frac) if frac.strip() else None,
                two_bridge=_flag(tb2.strip(), "two_bridge", lineno),
                tb_paper=int(tb),
                tb_mirror_paper=int(tbm),
                amphicheiral=_flag(amph.strip(), "amphicheiral", lineno),
                notes=notes.strip(),
            )
        except CatalogError:
            raise
        except ValueError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from exc
        if not record.name:
            raise CatalogError(f"line {lineno}: empty knot name")
        if record.name in seen:
            raise CatalogError(f"line {lineno}: duplicate knot {record.name}")
        record.validate()
        seen.add(record.name)
        records.append(record)
    return records


def default_catalog() -> list[KnotRecord]:
    """The shipped table of prime knots up to nine crossings."""
    data = resources.files("twobridge").joinpath("data/knots.tsv").read_bytes()
    return load_catalog(data)


@dataclass(frozen=True)
class RowResult:
    record: KnotRecord
    status: str
    computed: tuple[int, int] | None = None
    message: str = ""


@dataclass
class TableReport:
    rows: list[RowResult] = field(default_factory=list)

    def counts(self) -> dict[str, int]:
        out = {MATCH: 0, MISMATCH: 0, REFERENCE_ONLY: 0, ERROR: 0}
        for r in self.rows:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        c = self.counts()
        return c[MISMATCH] == 0 and c[ERROR] == 0


def _check(record: KnotRecord) -> RowResult:
    if not record.two_bridge:
        return RowResult(record, REFERENCE_ONLY, message=record.notes)
    try:
        res = max_tb(record.fraction)
    except Exception as exc:  # recorded per row, never fatal to the report
        return RowResult(record, ERROR, message=f"{type(exc).__name__}: {exc}")
    computed = (res.tb, res.tb_mirror)
    if sorted(computed) == sorted((record.tb_paper, record.tb_mirror_paper)):
        return RowResult(record, MATCH, computed)
    return RowResult(record, MISMATCH, computed)


def reproduce_table(records: Iterable[KnotRecord], workers: int = 1) -> TableReport:
    """Recompute every two-bridge row and compare unordered tb pairs."""
    records = list(records)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_check, records))
    else:
        rows = [_check(r) for r in records]
    return TableReport(rows)


def _cells(row: RowResult) -> list[str]:
    r = row.record
    status = row.status
    if row.status == MISMATCH and row.computed:
        status = f"MISMATCH({row.computed[0]},{row.computed[1]})"
    elif row.status == ERROR:
        status = f"ERROR({row.message})"
    tbm = "amph" if r.amphicheiral else str(r.tb_mirror_paper)
    return [r.name, str(r.fraction) if r.fraction else "", str(r.tb_paper), tbm, status]


_HEADER = ["K", "fraction", "tb", "tb-mirror", "status"]


def emit_table(report: TableReport, fmt: str = "text") -> str:
    rows = [_cells(r) for r in report.rows]
    c = report.counts()
    summary = (f"{c[MATCH]} match, {c[MISMATCH]} mismatch, "
               f"{c[REFERENCE_ONLY]} reference-only, {c[ERROR]} error")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_HEADER)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "markdown":
        out = ["| " + " | ".join(_HEADER) + " |", "|" + "|".join(["---"] * len(_HEADER)) + "|"]
        out += ["| " + " | ".join(cell.replace("|", "\\|") for cell in row) + " |" for row in rows]
        out.append("")
        out.append(summary)
        return "\n".join(out) + "\n"
    if fmt == "text":
        widths = [max(len(x) for x in col) for col in zip(_HEADER, *rows)]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                 for row in [_HEADER] + rows]
        lines.append(summary)
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {fmt!r}")

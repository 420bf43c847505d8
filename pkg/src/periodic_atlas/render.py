"""Deterministic table rendering: ascii for eyes, csv/json for machines.

All three formats emit one record per house for streets 1..max_row_n, so
street n always contributes exactly 2 n^2 cells.  Output is a pure
function of (RenderSpec, ElementDataset): same inputs, same bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterator

from .addresses import HouseAddress, ShellAddress, Status, houses_in_shell, z_from_address
from .chemistry import (
    Family,
    SeriesKind,
    SeriesMembership,
    family_of_address,
    series_of_address,
)
from .dataset import ElementDataset, status_of

FORMATS = ("ascii", "csv", "json")
ANNOTATIONS = ("families", "series", "status")


@dataclass(frozen=True)
class RenderSpec:
    """What to render: how many streets, which format, which annotations."""

    max_row_n: int = 7
    format: str = "ascii"
    annotate: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        if self.max_row_n < 1:
            raise ValueError(f"max_row_n must be >= 1, got {self.max_row_n}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")
        unknown = self.annotate - set(ANNOTATIONS)
        if unknown:
            raise ValueError(f"unknown annotations {sorted(unknown)}; known: {ANNOTATIONS}")


def parse_annotations(text: str) -> frozenset[str]:
    """Parse a comma-separated annotation list, e.g. 'families,status'."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    return frozenset(parts)


@dataclass(frozen=True)
class Cell:
    """One fully classified house, ready for any output format."""

    z: int
    address: HouseAddress
    symbol: str | None
    family: Family
    series: SeriesMembership
    status: Status


def iter_cells(max_row_n: int, ds: ElementDataset) -> Iterator[Cell]:
    """All cells of streets 1..max_row_n, street by street, block by block."""
    for n in range(1, max_row_n + 1):
        for l in range(0, n):
            for addr in houses_in_shell(ShellAddress(n, l)):
                z = z_from_address(addr)
                yield Cell(
                    z=z,
                    address=addr,
                    symbol=ds.symbol(z),
                    family=family_of_address(addr),
                    series=series_of_address(addr),
                    status=status_of(z, ds),
                )


def column_index(addr: HouseAddress) -> int:
    """0-based avenue position of a house within its street.

    Blocks sit left to right by l, each block preceded by the 2 l^2 cells
    of the smaller-l blocks; inside a block the j = l - 1/2 sub-block
    comes first, m ascending.
    """
    l = addr.l
    offset = 0 if (l == 0 or addr.two_j == 2 * l - 1) else 2 * l
    return 2 * l * l + offset + (addr.two_m + addr.two_j) // 2


def cell_record(cell: Cell, annotate: frozenset[str]) -> dict[str, object]:
    """The machine-format record for one cell (insertion order is fixed)."""
    record: dict[str, object] = {
        "z": cell.z,
        "n": cell.address.n,
        "l": cell.address.l,
        "two_j": cell.address.two_j,
        "two_m": cell.address.two_m,
    }
    if cell.symbol is not None:
        record["symbol"] = cell.symbol
    if "families" in annotate:
        record["family"] = cell.family.describe()
    if "series" in annotate:
        record["series"] = None if cell.series.kind is SeriesKind.NONE else cell.series.kind.value
    if "status" in annotate:
        record["status"] = cell.status.value
    return record


def _render_json(spec: RenderSpec, cells: list[Cell]) -> str:
    records = [cell_record(c, spec.annotate) for c in cells]
    return json.dumps(records, indent=2) + "\n"


def _render_csv(spec: RenderSpec, cells: list[Cell]) -> str:
    columns = ["z", "n", "l", "two_j", "two_m", "symbol"]
    for name, key in (("families", "family"), ("series", "series"), ("status", "status")):
        if name in spec.annotate:
            columns.append(key)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for cell in cells:
        record = cell_record(cell, spec.annotate)
        record.setdefault("symbol", "")
        writer.writerow(["" if record.get(col) is None else record.get(col) for col in columns])
    return buf.getvalue()


def _cell_text(cell: Cell, annotate: frozenset[str]) -> str:
    text = str(cell.z)
    if cell.symbol:
        text += f" {cell.symbol}"
    tags: list[str] = []
    if "families" in annotate and cell.family.label.value != "other":
        tags.append(cell.family.label.value)
    if "series" in annotate and cell.series.kind is not SeriesKind.NONE:
        tags.append(cell.series.kind.value)
    if "status" in annotate:
        tags.append(cell.status.value)
    if tags:
        text += " {" + ";".join(tags) + "}"
    return text


def _render_ascii(spec: RenderSpec, cells: list[Cell]) -> str:
    lines: list[str] = []
    by_shell: dict[ShellAddress, list[Cell]] = {}
    for cell in cells:
        by_shell.setdefault(cell.address.shell, []).append(cell)
    for n in range(1, spec.max_row_n + 1):
        lines.append(f"street n={n}")
        for l in range(0, n):
            shell = ShellAddress(n, l)
            block = by_shell[shell]
            groups: dict[int, list[Cell]] = {}
            for cell in block:
                groups.setdefault(cell.address.two_j, []).append(cell)
            parts = []
            for two_j in sorted(groups):
                row = " | ".join(_cell_text(c, spec.annotate) for c in groups[two_j])
                parts.append(f"j={two_j}/2: {row}")
            lines.append(f"  {shell.label():<4} [{n + l},{n}]   " + "    ".join(parts))
        lines.append("")
    return "\n".join(lines)


def render_table(spec: RenderSpec, ds: ElementDataset) -> str:
    """Render streets 1..max_row_n in the spec's format."""
    cells = list(iter_cells(spec.max_row_n, ds))
    if spec.format == "json":
        return _render_json(spec, cells)
    if spec.format == "csv":
        return _render_csv(spec, cells)
    return _render_ascii(spec, cells)

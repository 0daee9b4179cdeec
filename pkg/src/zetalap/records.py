"""Row-oriented tables with CSV/JSON serialisation at 17 significant digits."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence, Union

Cell = Union[float, int, str, None]


def fmt(x: float) -> str:
    """17 significant digits: enough to round-trip any binary64 value."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.17g}"


def _cell_out(v: Cell) -> str:
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    return fmt(v)


def _cell_in(s: str) -> Cell:
    if s == "":
        return None
    try:
        return int(s)
    except ValueError:
        pass
    try:
        return float(s)
    except ValueError:
        return s


def _json_cell(v: Cell) -> Any:
    if isinstance(v, float):
        if not math.isfinite(v):
            return fmt(v)
        return float(fmt(v))
    return v


@dataclass
class OutputRecord:
    columns: tuple[str, ...]
    rows: list[tuple[Cell, ...]] = field(default_factory=list)
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.columns = tuple(self.columns)
        if len(set(self.columns)) != len(self.columns):
            raise ValueError("duplicate column names")
        for r in self.rows:
            self._check(r)

    def _check(self, row: Sequence[Cell]) -> None:
        if len(row) != len(self.columns):
            raise ValueError(f"row has {len(row)} cells, expected {len(self.columns)}")

    def append(self, *row: Cell) -> None:
        self._check(row)
        self.rows.append(tuple(row))

    def column(self, name: str) -> list[Cell]:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]

    def __len__(self) -> int:
        return len(self.rows)

    # csv: metadata as leading '#' lines, then a header row
    def to_csv(self) -> str:
        buf = io.StringIO()
        for k, v in self.meta.items():
            buf.write(f"# {k}={v}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([_cell_out(v) for v in r])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "OutputRecord":
        meta, body = {}, []
        for line in text.splitlines():
            if line.startswith("#"):
                k, _, v = line[1:].strip().partition("=")
                meta[k] = v
            else:
                body.append(line)
        rd = csv.reader(body)
        header = next(rd)
        rows = [tuple(_cell_in(c) for c in r) for r in rd if r]
        return cls(tuple(header), rows, meta)

    def to_json(self) -> str:
        doc = {
            "meta": self.meta,
            "columns": list(self.columns),
            "rows": [[_json_cell(v) for v in r] for r in self.rows],
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        doc = json.loads(text)
        rows = []
        for r in doc["rows"]:
            rows.append(tuple(float(v) if v in ("nan", "inf", "-inf") else v for v in r))
        return cls(tuple(doc["columns"]), rows, dict(doc.get("meta", {})))

    def write(self, path: str | Path, fmt_name: str = "csv") -> None:
        text = self.to_json() if fmt_name == "json" else self.to_csv()
        Path(path).write_text(text)


def from_columns(columns: dict[str, Iterable[Cell]], meta: dict[str, str] | None = None) -> OutputRecord:
    names = tuple(columns)
    cols = [list(v) for v in columns.values()]
    if len({len(c) for c in cols}) > 1:
        raise ValueError("columns differ in length")
    return OutputRecord(names, [tuple(r) for r in zip(*cols)], dict(meta or {}))

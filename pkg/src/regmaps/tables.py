"""Expected reference tables plus the machinery that evaluates and renders table cells."""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Optional

from regmaps.multiface import rooted_regular
from regmaps.multiface_unrooted import unrooted_regular
from regmaps.oneface import rooted_one_face
from regmaps.oneface_unrooted import unrooted_one_face

KINDS = ("oneface-rooted", "oneface-unrooted", "multi-rooted", "multi-unrooted")
FORMATS = ("csv", "json", "md")


@dataclass(frozen=True)
class TableSpec:
    kind: str
    degrees: tuple[int, ...]
    genus_min: int
    genus_max: int
    vertices_max: Optional[int] = None
    vertices_min: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")
        if not self.degrees:
            raise ValueError("at least one degree is required")
        if self.genus_max < self.genus_min:
            raise ValueError("empty genus range")
        if self.multi != (self.vertices_max is not None):
            raise ValueError("a vertex range is required exactly for multi-* kinds")
        if self.multi and self.vertices_max < self.vertices_min:
            raise ValueError("empty vertex range")

    @property
    def multi(self) -> bool:
        return self.kind.startswith("multi")

    def cells(self) -> list[tuple[int, int, Optional[int]]]:
        """(d, g, v) in output order: by d, then v, then g."""
        out: list[tuple[int, int, Optional[int]]] = []
        for d in self.degrees:
            if not self.multi:
                out += [(d, g, None) for g in range(self.genus_min, self.genus_max + 1)]
                continue
            for v in range(self.vertices_min, self.vertices_max + 1):
                if (d * v) % 2:
                    continue
                out += [(d, g, v) for g in range(self.genus_min, self.genus_max + 1)]
        return out


def cell_function(kind: str) -> Callable[..., int]:
    return {
        "oneface-rooted": lambda d, g, v: rooted_one_face(d, g),
        "oneface-unrooted": lambda d, g, v: unrooted_one_face(d, g),
        "multi-rooted": rooted_regular,
        "multi-unrooted": unrooted_regular,
    }[kind]


def _evaluate_degree(kind: str, cells: list[tuple[int, int, Optional[int]]]) -> list[int]:
    fn = cell_function(kind)
    return [fn(d, g, v) for d, g, v in cells]


def worker_count() -> int:
    raw = os.environ.get("REGMAPS_THREADS", "").strip()
    if not raw:
        return 1
    value = int(raw)
    if value < 0:
        raise ValueError("REGMAPS_THREADS must be non-negative")
    return value or 1


Row = tuple[int, int, Optional[int], int]


def compute_table(spec: TableSpec, workers: Optional[int] = None) -> list[Row]:
    """Evaluate every cell; rows are (d, g, v, count) in ``spec.cells()`` order.

    With more than one worker, cells are fanned out to processes grouped by
    degree so each process keeps one memo table per degree.
    """
    workers = worker_count() if workers is None else workers
    cells = spec.cells()
    by_degree: dict[int, list[tuple[int, int, Optional[int]]]] = {}
    for cell in cells:
        by_degree.setdefault(cell[0], []).append(cell)
    if workers <= 1 or len(by_degree) == 1:
        results = {d: _evaluate_degree(spec.kind, group) for d, group in by_degree.items()}
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {d: pool.submit(_evaluate_degree, spec.kind, group) for d, group in by_degree.items()}
            results = {d: f.result() for d, f in futures.items()}
    counts = {cell: value for d, group in by_degree.items() for cell, value in zip(group, results[d])}
    return [(d, g, v, counts[(d, g, v)]) for d, g, v in cells]


def _columns(spec: TableSpec) -> list[str]:
    cols = ["g", "v", "count"] if spec.multi else ["g", "count"]
    return (["d"] + cols) if len(spec.degrees) > 1 else cols


def _row_values(spec: TableSpec, row: Row) -> list[str]:
    d, g, v, count = row
    values = [str(g)] + ([str(v)] if spec.multi else []) + [str(count)]
    return ([str(d)] + values) if len(spec.degrees) > 1 else values


def render(spec: TableSpec, rows: list[Row], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_columns(spec))
        for row in rows:
            writer.writerow(_row_values(spec, row))
        return buf.getvalue()
    if fmt == "json":
        items = []
        for d, g, v, count in rows:
            item: dict[str, object] = {}
            if len(spec.degrees) > 1:
                item["d"] = d
            item["g"] = g
            if spec.multi:
                item["v"] = v
            item["count"] = str(count)
            items.append(item)
        degree: object = spec.degrees[0] if len(spec.degrees) == 1 else list(spec.degrees)
        return json.dumps({"kind": spec.kind, "d": degree, "rows": items}) + "\n"
    if fmt == "md":
        cols = _columns(spec)
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        lines += ["| " + " | ".join(_row_values(spec, row)) + " |" for row in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


@dataclass(frozen=True)
class ReferenceTable:
    number: int
    spec: TableSpec

    @property
    def filename(self) -> str:
        return f"table{self.number:02d}.csv"

    def fixture_text(self) -> str:
        return resources.files("regmaps.data").joinpath(self.filename).read_text(encoding="utf-8")

    def fixture_csv(self) -> str:
        """The fixture without its leading comment line, i.e. plain CSV."""
        return "".join(line for line in self.fixture_text().splitlines(keepends=True) if not line.startswith("#"))

    def expected(self) -> dict[tuple[int, int, Optional[int]], int]:
        reader = csv.DictReader(io.StringIO(self.fixture_csv()))
        out = {}
        for rec in reader:
            d = int(rec["d"]) if "d" in rec else self.spec.degrees[0]
            v = int(rec["v"]) if "v" in rec else None
            out[(d, int(rec["g"]), v)] = int(rec["count"])
        return out


REFERENCE_TABLES = (
    ReferenceTable(1, TableSpec("oneface-rooted", (3, 4, 5), 1, 11)),
    ReferenceTable(2, TableSpec("oneface-unrooted", (3, 4, 5), 1, 11)),
    ReferenceTable(3, TableSpec("multi-rooted", (3,), 0, 5, vertices_max=20)),
    ReferenceTable(4, TableSpec("multi-unrooted", (3,), 0, 5, vertices_max=20)),
    ReferenceTable(5, TableSpec("multi-rooted", (4,), 0, 5, vertices_max=10)),
    ReferenceTable(6, TableSpec("multi-unrooted", (4,), 0, 5, vertices_max=10)),
    ReferenceTable(7, TableSpec("multi-rooted", (5,), 0, 5, vertices_max=8)),
    ReferenceTable(8, TableSpec("multi-unrooted", (5,), 0, 5, vertices_max=8)),
    ReferenceTable(9, TableSpec("multi-rooted", (6,), 0, 5, vertices_max=6)),
    ReferenceTable(10, TableSpec("multi-unrooted", (6,), 0, 5, vertices_max=6)),
)


def reference_table(number: int) -> ReferenceTable:
    return REFERENCE_TABLES[number - 1]

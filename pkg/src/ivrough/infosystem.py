"""Interval-valued information systems: data model, text format, fixtures."""

from __future__ import annotations

import os
from importlib import resources
from typing import Iterable, Sequence

import numpy as np

from .interval import Interval, IntervalError, format_interval, parse_interval

__all__ = [
    "DatasetError",
    "InformationSystem",
    "parse_dataset",
    "serialize_dataset",
    "read_dataset",
    "load_fixture",
    "FIXTURES",
]

FIXTURES = ("table1", "face27")


class DatasetError(ValueError):
    """Invalid dataset text or inconsistent system; carries the 1-based position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class InformationSystem:
    """A total table ``objects x attributes -> Interval``.

    Object and attribute order is the order given at construction and is the
    canonical index order for relation matrices and tie-breaking.
    """

    def __init__(self, objects: Sequence[str], attributes: Sequence[str],
                 cells: Sequence[Sequence[Interval]]):
        objects = tuple(str(o) for o in objects)
        attributes = tuple(str(a) for a in attributes)
        if not objects:
            raise DatasetError("universe must contain at least one object")
        if not attributes:
            raise DatasetError("at least one attribute is required")
        _check_unique(objects, "object")
        _check_unique(attributes, "attribute")
        rows = tuple(tuple(row) for row in cells)
        if len(rows) != len(objects):
            raise DatasetError(f"expected {len(objects)} rows of cells, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != len(attributes):
                raise DatasetError(f"object {objects[i]!r} has {len(row)} cells, expected {len(attributes)}")
            for cell in row:
                if not isinstance(cell, Interval):
                    raise DatasetError(f"object {objects[i]!r} has a non-interval cell {cell!r}")

        self.objects = objects
        self.attributes = attributes
        self.cells = rows
        self._obj_index = {o: i for i, o in enumerate(objects)}
        self._attr_index = {a: j for j, a in enumerate(attributes)}
        lo = np.array([[c.lo for c in row] for row in rows], dtype=np.float64)
        hi = np.array([[c.hi for c in row] for row in rows], dtype=np.float64)
        lo.setflags(write=False)
        hi.setflags(write=False)
        self.lo = lo
        self.hi = hi

    @classmethod
    def from_mapping(cls, table: dict) -> "InformationSystem":
        """Build from ``{object: {attribute: (lo, hi) | Interval}}``; order follows the dicts."""
        objects = list(table)
        attributes = list(next(iter(table.values())))
        cells = []
        for o in objects:
            row = []
            for a in attributes:
                v = table[o][a]
                row.append(v if isinstance(v, Interval) else Interval(*v))
            cells.append(row)
        return cls(objects, attributes, cells)

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_attributes(self) -> int:
        return len(self.attributes)

    def object_index(self, obj: str) -> int:
        try:
            return self._obj_index[obj]
        except KeyError:
            raise KeyError(f"unknown object {obj!r}") from None

    def attribute_index(self, attr: str) -> int:
        try:
            return self._attr_index[attr]
        except KeyError:
            raise KeyError(f"unknown attribute {attr!r}") from None

    def cell(self, obj: str, attr: str) -> Interval:
        return self.cells[self.object_index(obj)][self.attribute_index(attr)]

    def column(self, attr: str) -> list[Interval]:
        j = self.attribute_index(attr)
        return [row[j] for row in self.cells]

    def value_set(self, attr: str) -> set[Interval]:
        """The domain V_a actually realised in the table."""
        return set(self.column(attr))

    def canonical_attributes(self, attrs: Iterable[str]) -> tuple[str, ...]:
        """Validate ``attrs`` and return them in this system's attribute order."""
        wanted = set()
        for a in attrs:
            self.attribute_index(a)
            wanted.add(a)
        return tuple(a for a in self.attributes if a in wanted)

    def project(self, attrs: Iterable[str]) -> "InformationSystem":
        """Restrict to a nonempty attribute subset, keeping this system's order."""
        keep = self.canonical_attributes(attrs)
        if not keep:
            raise ValueError("cannot project onto an empty attribute set")
        idx = [self._attr_index[a] for a in keep]
        return InformationSystem(self.objects, keep, [[row[j] for j in idx] for row in self.cells])

    def __eq__(self, other):
        if not isinstance(other, InformationSystem):
            return NotImplemented
        return (self.objects == other.objects and self.attributes == other.attributes
                and self.cells == other.cells)

    def __hash__(self):
        return hash((self.objects, self.attributes, self.cells))

    def __repr__(self):
        return f"InformationSystem({self.n_objects} objects x {self.n_attributes} attributes)"


def _check_unique(names: Sequence[str], kind: str):
    seen = set()
    for name in names:
        if not name:
            raise DatasetError(f"empty {kind} identifier")
        if name in seen:
            raise DatasetError(f"duplicate {kind} identifier {name!r}")
        seen.add(name)


def parse_dataset(text: str) -> InformationSystem:
    """Parse the line-oriented dataset format.

    ::

        # comment
        object,a1,a2
        x1,0:0.5,0.2:0.7
        x2,0.2:0.6,0.4
    """
    header = None
    objects: list[str] = []
    cells: list[list[Interval]] = []
    seen_objects: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if header is None:
            if len(fields) < 2:
                raise DatasetError("header needs an object column and at least one attribute", lineno)
            attrs = fields[1:]
            seen_attrs: dict[str, int] = {}
            for col, a in enumerate(attrs, start=2):
                if not a:
                    raise DatasetError("empty attribute identifier", lineno, col)
                if a in seen_attrs:
                    raise DatasetError(f"duplicate attribute identifier {a!r}", lineno, col)
                seen_attrs[a] = col
            header = attrs
            continue
        if len(fields) != len(header) + 1:
            raise DatasetError(
                f"ragged row: expected {len(header) + 1} fields, found {len(fields)}", lineno)
        obj = fields[0]
        if not obj:
            raise DatasetError("empty object identifier", lineno, 1)
        if obj in seen_objects:
            raise DatasetError(
                f"duplicate object identifier {obj!r} (first on line {seen_objects[obj]})", lineno, 1)
        seen_objects[obj] = lineno
        row = []
        for col, token in enumerate(fields[1:], start=2):
            if not token:
                raise DatasetError("missing cell value", lineno, col)
            try:
                row.append(parse_interval(token))
            except IntervalError as exc:
                raise DatasetError(str(exc), lineno, col) from None
        objects.append(obj)
        cells.append(row)
    if header is None:
        raise DatasetError("dataset has no header line")
    if not objects:
        raise DatasetError("dataset has no objects")
    return InformationSystem(objects, header, cells)


def serialize_dataset(system: InformationSystem) -> str:
    lines = [",".join(("object",) + system.attributes)]
    for obj, row in zip(system.objects, system.cells):
        lines.append(",".join([obj] + [format_interval(c) for c in row]))
    return "\n".join(lines) + "\n"


def load_fixture(name: str) -> InformationSystem:
    """Load a bundled dataset: ``"table1"`` (5 x 4) or ``"face27"`` (27 x 6)."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    text = resources.files("ivrough").joinpath("data", f"{name}.csv").read_text(encoding="utf-8")
    return parse_dataset(text)


def read_dataset(path: str | os.PathLike) -> InformationSystem:
    """Read a dataset file; a bare fixture name is accepted when no such file exists."""
    if not os.path.exists(path) and str(path) in FIXTURES:
        return load_fixture(str(path))
    with open(path, encoding="utf-8") as fh:
        return parse_dataset(fh.read())

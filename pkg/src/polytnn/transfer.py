"""Transfer matrices and path matrices with exact integer entries.

The transfer matrix for dimension d has floor(d/2)+1 rows, d columns and
entries C(d+1-i, d-j) - C(i, d-j). The path matrix of order n has
ceil(n/2) rows, n columns and entries C(n-i, n-j) - C(i, n-j) for i <= j,
zero below the diagonal; its column 0 is always (1, 0, ..., 0) and
dropping that column leaves exactly the transfer matrix for d = n-1.
Both forms are exposed because both are useful: the path matrix carries
the augmented leading column for the implied face count f_{-1} = 1, the
transfer matrix matches the entry formula indexed by dimension.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import binomial

__all__ = [
    "TransferMatrix",
    "PathMatrix",
    "transfer_matrix",
    "path_matrix",
    "strip_leading_column",
    "parse_matrix_csv",
    "parse_matrix_json",
]


def _check_grid(entries, rows: int, cols: int, what: str) -> None:
    if len(entries) != rows:
        raise ValueError(f"{what}: expected {rows} rows, got {len(entries)}")
    for row in entries:
        if len(row) != cols:
            raise ValueError(f"{what}: expected {cols} columns, got {len(row)}")
        for e in row:
            if not isinstance(e, int):
                raise ValueError(f"{what}: entries must be integers, got {e!r}")


def _rows_csv(entries) -> str:
    return "".join(",".join(str(e) for e in row) + "\n" for row in entries)


@dataclass(frozen=True)
class TransferMatrix:
    """floor(d/2)+1 by d integer matrix mapping g-vectors to f-vectors."""

    d: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"TransferMatrix: d must be >= 1, got {self.d}")
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        _check_grid(self.entries, self.d // 2 + 1, self.d, "TransferMatrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self.d

    def to_csv(self) -> str:
        return _rows_csv(self.entries)

    def to_json(self) -> str:
        obj = {"d": self.d, "rows": [list(r) for r in self.entries]}
        return json.dumps(obj, sort_keys=True)


@dataclass(frozen=True)
class PathMatrix:
    """ceil(n/2) by n integer matrix of lattice-path weight sums."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"PathMatrix: n must be >= 2, got {self.n}")
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        _check_grid(self.entries, (self.n + 1) // 2, self.n, "PathMatrix")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return self.n

    def to_csv(self) -> str:
        return _rows_csv(self.entries)

    def to_json(self) -> str:
        obj = {"n": self.n, "rows": [list(r) for r in self.entries]}
        return json.dumps(obj, sort_keys=True)


def transfer_matrix(d: int) -> TransferMatrix:
    """Build the transfer matrix for dimension d >= 1 from its entry formula."""
    if d < 1:
        raise ValueError(f"transfer_matrix: d must be >= 1, got {d}")
    entries = tuple(
        tuple(binomial(d + 1 - i, d - j) - binomial(i, d - j) for j in range(d))
        for i in range(d // 2 + 1)
    )
    return TransferMatrix(d, entries)


def path_matrix(n: int) -> PathMatrix:
    """Build the path matrix of order n >= 2 from its entry formula."""
    if n < 2:
        raise ValueError(f"path_matrix: n must be >= 2, got {n}")
    entries = tuple(
        tuple(
            0 if i > j else binomial(n - i, n - j) - binomial(i, n - j)
            for j in range(n)
        )
        for i in range((n + 1) // 2)
    )
    return PathMatrix(n, entries)


def strip_leading_column(w: PathMatrix) -> TransferMatrix:
    """Drop column 0 of a path matrix, leaving the transfer matrix for d = n-1.

    The row counts agree, ceil(n/2) = floor((n-1)/2) + 1, and the remaining
    entries satisfy the transfer formula entry for entry.
    """
    return TransferMatrix(w.n - 1, tuple(row[1:] for row in w.entries))


def _parse_entry(text: str):
    s = text.strip()
    if "/" in s:
        return Fraction(s)
    return int(s)


def parse_matrix_csv(text: str) -> tuple[tuple, ...]:
    """Parse a matrix from CSV: one row per line, comma-separated values.

    Entries are decimal integers or rationals written "p/q". Rows must all
    have the same length. Returns a tuple of row tuples with int entries,
    or Fraction entries where a denominator was given.
    """
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rows.append(tuple(_parse_entry(cell) for cell in line.split(",")))
    if not rows:
        raise ValueError("parse_matrix_csv: no rows found")
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise ValueError("parse_matrix_csv: ragged rows")
    return tuple(rows)


def parse_matrix_json(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse a matrix from JSON of the form {"d": int | "n": int, "rows": [[int,...],...]}."""
    obj = json.loads(text)
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError('parse_matrix_json: expected an object with a "rows" field')
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows:
        raise ValueError('parse_matrix_json: "rows" must be a nonempty list')
    out = []
    for r in rows:
        if not isinstance(r, list) or not all(type(e) is int for e in r):
            raise ValueError("parse_matrix_json: rows must be lists of integers")
        out.append(tuple(r))
    width = len(out[0])
    for r in out:
        if len(r) != width:
            raise ValueError("parse_matrix_json: ragged rows")
    return tuple(out)

"""Exact total-nonnegativity certification by exhaustive minor enumeration.

A matrix is totally nonnegative when every minor, of every order, is
nonnegative. This module computes determinants exactly (integers stay
integers; anything else runs over Fraction), enumerates all row/column
subsets in lexicographic order, and reports either a clean bill or the
lexicographically first negative minor as a concrete witness. The scan
never stops early at a negative minor for the minimum bookkeeping, so the
report is identical no matter how the work is split across processes.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Optional, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = [
    "ExactMatrix",
    "as_matrix",
    "determinant",
    "MinorWitness",
    "TnnReport",
    "iter_minors",
    "is_totally_nonnegative",
]


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable rectangular matrix over int/Fraction."""

    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("matrix must have at least one row")
        width = len(self.entries[0])
        if width == 0:
            raise ValueError("matrix rows must be nonempty")
        for row in self.entries:
            if len(row) != width:
                raise ValueError("matrix rows must all have the same length")
            for x in row:
                if not isinstance(x, (int, Fraction)) or isinstance(x, bool):
                    raise ValueError(f"matrix entries must be int or Fraction, got {x!r}")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            tuple(tuple(self.entries[i][j] for j in cols) for i in rows)
        )


def as_matrix(m) -> ExactMatrix:
    """Coerce an ExactMatrix, an object with .entries, or nested sequences."""
    if isinstance(m, ExactMatrix):
        return m
    entries = getattr(m, "entries", m)
    return ExactMatrix(tuple(tuple(row) for row in entries))


def _bareiss_int(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _gauss_fraction(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    sign = 1
    det = Fraction(1)
    for k in range(n):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = rows[i][k] / pivot
            if factor:
                for j in range(k, n):
                    rows[i][j] -= factor * rows[k][j]
    return sign * det


def determinant(m) -> Scalar:
    """Exact determinant of a square matrix."""
    mat = as_matrix(m)
    if mat.rows != mat.cols:
        raise ValueError(f"determinant needs a square matrix, got {mat.rows}x{mat.cols}")
    if all(isinstance(x, int) for row in mat.entries for x in row):
        return _bareiss_int([list(row) for row in mat.entries])
    return _gauss_fraction(
        [[Fraction(x) for x in row] for row in mat.entries]
    )


class MinorWitness(NamedTuple):
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: Scalar


@dataclass(frozen=True)
class TnnReport:
    """Outcome of a full minor scan."""

    is_tnn: bool
    minors_checked: int
    min_minor: Scalar
    witness: Optional[MinorWitness] = None

    def __bool__(self) -> bool:
        return self.is_tnn

    def to_json_obj(self) -> dict:
        def num(x: Scalar):
            if isinstance(x, Fraction):
                return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
            return x

        obj = {
            "is_tnn": self.is_tnn,
            "minors_checked": self.minors_checked,
            "min_minor": num(self.min_minor),
            "witness": None,
        }
        if self.witness is not None:
            obj["witness"] = {
                "rows": list(self.witness.rows),
                "cols": list(self.witness.cols),
                "value": num(self.witness.value),
            }
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def iter_minors(m, order: int):
    """Yield MinorWitness for every order-by-order minor, lexicographically."""
    mat = as_matrix(m)
    if order < 1 or order > min(mat.rows, mat.cols):
        raise ValueError(
            f"minor order must be in 1..{min(mat.rows, mat.cols)}, got {order}"
        )
    for rows in combinations(range(mat.rows), order):
        for cols in combinations(range(mat.cols), order):
            yield MinorWitness(rows, cols, determinant(mat.submatrix(rows, cols)))


def _scan_rows(args) -> tuple:
    """One worker task: fixed order and row set, all column subsets in order.

    Returns (count, min value, columns of the first negative minor or None).
    """
    entries, order, rows = args
    mat = ExactMatrix(entries)
    count = 0
    best: Optional[Scalar] = None
    first_neg: Optional[tuple[int, ...]] = None
    for cols in combinations(range(mat.cols), order):
        val = determinant(mat.submatrix(rows, cols))
        count += 1
        if best is None or val < best:
            best = val
        if val < 0 and first_neg is None:
            first_neg = cols
    return count, best, first_neg


def is_totally_nonnegative(m, max_order: Optional[int] = None, jobs: int = 1) -> TnnReport:
    """Scan all minors up to max_order (default: all orders) exactly.

    The task list is the sequence of (order, row set) pairs in increasing
    lexicographic order; results are folded in that same order, so the
    report (including the witness, which is the lexicographically first
    negative minor) does not depend on jobs.
    """
    mat = as_matrix(m)
    limit = min(mat.rows, mat.cols)
    if max_order is None:
        max_order = limit
    if max_order < 1 or max_order > limit:
        raise ValueError(f"max_order must be in 1..{limit}, got {max_order}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    tasks = [
        (mat.entries, order, rows)
        for order in range(1, max_order + 1)
        for rows in combinations(range(mat.rows), order)
    ]
    if jobs == 1:
        results = map(_scan_rows, tasks)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_rows, tasks, chunksize=8))
    total = 0
    min_minor: Optional[Scalar] = None
    witness: Optional[MinorWitness] = None
    for task, (count, best, first_neg) in zip(tasks, results):
        total += count
        if best is not None and (min_minor is None or best < min_minor):
            min_minor = best
        if witness is None and first_neg is not None:
            _, order, rows = task
            witness = MinorWitness(rows, first_neg, determinant(mat.submatrix(rows, first_neg)))
    assert min_minor is not None
    return TnnReport(witness is None, total, min_minor, witness)

# exact_linalg.py
"""Exact rank and kernel computations over the rationals.

Rows are cleared to primitive integer vectors (row scaling changes neither
rank nor kernel) and reduced with fraction-free Bareiss elimination on a
numpy object array, so every intermediate entry is an exact Python integer.
Each call owns an OpCounter; one counted operation is one scalar
multiplication or exact division performed by the elimination.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from errors import DimensionError
from forms import primitive_integer_vector

logger = logging.getLogger(__name__)


@dataclass
class OpCounter:
    multiplications: int = 0
    steps: int = 0

    def merge(self, other: "OpCounter") -> "OpCounter":
        self.multiplications += other.multiplications
        self.steps += other.steps
        return self

    def as_dict(self):
        return {"multiplications": self.multiplications, "steps": self.steps}


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        entries = tuple(Fraction(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "Matrix":
        rows = [tuple(row) for row in rows]
        if cols is None:
            if not rows:
                raise DimensionError("Column count is required for a matrix without rows")
            cols = len(rows[0])
        for index, row in enumerate(rows):
            if len(row) != cols:
                raise DimensionError(f"Row {index} has {len(row)} entries, expected {cols}")
        return cls(len(rows), cols, tuple(e for row in rows for e in row))

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> List[Tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows(
            [[self.entries[i * self.cols + j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def with_row(self, vector: Sequence) -> "Matrix":
        if len(vector) != self.cols:
            raise DimensionError(f"Vector of length {len(vector)} against {self.cols} columns")
        return Matrix.from_rows(self.row_list() + [tuple(vector)], cols=self.cols)


def _integer_array(matrix: Matrix) -> np.ndarray:
    array = np.empty((matrix.rows, matrix.cols), dtype=object)
    for i in range(matrix.rows):
        row = matrix.row(i)
        array[i, :] = primitive_integer_vector(row) if any(row) else (0,) * matrix.cols
    return array


def _bareiss(array: np.ndarray, counter: OpCounter) -> List[int]:
    """Fraction-free row echelon form in place; returns the pivot columns.

    Pivot: first nonzero entry of the current column at or below the current
    row. Divisions by the previous pivot are exact.
    """
    rows, cols = array.shape
    pivots = []
    previous = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = np.flatnonzero(array[r:, c] != 0)
        if candidates.size == 0:
            continue
        p = r + int(candidates[0])
        if p != r:
            array[[r, p]] = array[[p, r]]
        pivot = array[r, c]
        if r + 1 < rows and c + 1 < cols:
            block = array[r + 1:, c + 1:]
            array[r + 1:, c + 1:] = (pivot * block - np.outer(array[r + 1:, c], array[r, c + 1:])) // previous
            counter.multiplications += 3 * block.size
        array[r + 1:, c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
        counter.steps += 1
    return pivots


def echelon(matrix: Matrix) -> Tuple[np.ndarray, List[int], OpCounter]:
    counter = OpCounter()
    if matrix.rows == 0 or matrix.cols == 0:
        return np.empty((matrix.rows, matrix.cols), dtype=object), [], counter
    array = _integer_array(matrix)
    pivots = _bareiss(array, counter)
    return array, pivots, counter


def rank(matrix: Matrix) -> Tuple[int, OpCounter]:
    _, pivots, counter = echelon(matrix)
    return len(pivots), counter


def kernel_dim(matrix: Matrix) -> int:
    return matrix.cols - rank(matrix)[0]


def kernel_basis(matrix: Matrix) -> List[Tuple[int, ...]]:
    """Exact basis of the right kernel, one primitive integer vector per free column"""
    if matrix.cols == 0:
        return []
    array, pivots, _ = echelon(matrix)
    free = [c for c in range(matrix.cols) if c not in pivots]
    basis = []
    for f in free:
        solution = [Fraction(0)] * matrix.cols
        solution[f] = Fraction(1)
        for i in range(len(pivots) - 1, -1, -1):
            pc = pivots[i]
            s = sum(
                (array[i, c] * solution[c] for c in range(pc + 1, matrix.cols) if solution[c]),
                Fraction(0),
            )
            solution[pc] = -s / array[i, pc]
        basis.append(primitive_integer_vector(solution))
    return basis


def is_in_span(vector: Sequence, matrix: Matrix) -> bool:
    if len(vector) != matrix.cols:
        raise DimensionError(f"Vector of length {len(vector)} against {matrix.cols} columns")
    return rank(matrix.with_row(vector))[0] == rank(matrix)[0]

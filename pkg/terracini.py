# terracini.py
"""Dimension of the span of the tangent spaces to the Veronese surface at
the points of a decomposition.

The tangent space at v_d(P) is spanned by x_j * L_P^(d-1), j = 0, 1, 2, so
the span is the row space of a 3r x C(d+2, 2) matrix.
"""
import logging
from dataclasses import dataclass, field
from typing import Sequence, Tuple

from errors import DimensionError, InvalidInstance
from exact_linalg import Matrix, OpCounter, rank
from forms import Instance, basis_size, power_coefficients, shift_by_variable
from validate import non_redundant, validate_instance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TerraciniReport:
    r: int
    d: int
    q: int
    counter: OpCounter = field(default_factory=OpCounter, compare=False)

    @property
    def projective_dimension(self) -> int:
        return self.q - 1

    @property
    def expected(self) -> int:
        return 3 * self.r - 1

    @property
    def full(self) -> bool:
        return self.q == 3 * self.r

    def as_dict(self):
        return {
            "r": self.r,
            "d": self.d,
            "matrix_rank": self.q,
            "projective_dimension": self.projective_dimension,
            "expected": self.expected,
            "full": self.full,
            "multiplications": self.counter.multiplications,
        }


def terracini_rows(coords: Sequence[Tuple[int, int, int]], d: int) -> list:
    """Rows x_j * L^(d-1) for raw coordinate triples, in (point, variable) order"""
    if d < 2:
        raise DimensionError(f"Terracini matrix needs degree at least 2, got {d}")
    rows = []
    for point in coords:
        # one (d-1)-th power per point, reused for the three variables
        power = power_coefficients(tuple(point), d - 1)
        for j in range(3):
            rows.append(shift_by_variable(power, d - 1, j))
    return rows


def terracini_matrix(inst: Instance) -> Matrix:
    return Matrix.from_rows(
        terracini_rows([p.coords for p in inst.points], inst.degree),
        cols=basis_size(inst.degree),
    )


def terracini_dimension(inst: Instance) -> TerraciniReport:
    q, counter = rank(terracini_matrix(inst))
    report = TerraciniReport(inst.r, inst.degree, q, counter)
    logger.debug(f"Terracini rank {q} of expected {3 * inst.r} (r={inst.r}, d={inst.degree})")
    return report


def terracini_test(inst: Instance) -> bool:
    """True iff the Terracini space has the expected dimension 3r-1"""
    validate_instance(inst)
    if not non_redundant(inst).holds:
        raise InvalidInstance("Decomposition is redundant: v_d(A) is linearly dependent")
    return terracini_dimension(inst).full

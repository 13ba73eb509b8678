# validate.py
import logging
from typing import NamedTuple, Tuple

from errors import DuplicatePoint, LengthOutOfRange, UnsupportedDegree, ZeroCoefficient, InvalidInstance
from exact_linalg import Matrix, OpCounter, rank
from forms import Instance, basis_size, power_coefficients

logger = logging.getLogger(__name__)

BASE_DEGREE = 8


def degree_parameter(degree: int) -> int:
    """n such that degree = 8 + 2n"""
    if degree < BASE_DEGREE or degree % 2:
        raise UnsupportedDegree(f"Degree {degree} is not of the form 8+2n")
    return (degree - BASE_DEGREE) // 2


def max_length(n: int) -> int:
    return 3 * n + 11


def small_rank_limit(n: int) -> int:
    # r <= (d+1)/2 = (9+2n)/2 in integers
    return n + 4


def validate_instance(inst: Instance) -> int:
    """Check the assumptions of the identifiability pipeline and return n"""
    n = degree_parameter(inst.degree)
    r = inst.r
    if r == 0:
        raise InvalidInstance("Instance has no points")
    if len(inst.coefficients) != r:
        raise InvalidInstance(f"{r} points but {len(inst.coefficients)} coefficients")
    if r > max_length(n):
        raise LengthOutOfRange(f"r = {r} exceeds 3n+11 = {max_length(n)} for degree {inst.degree}")
    seen = {}
    for index, point in enumerate(inst.points):
        if point in seen:
            raise DuplicatePoint(f"Point {point} at index {index} repeats index {seen[point]}")
        seen[point] = index
    for index, a in enumerate(inst.coefficients):
        if a == 0:
            raise ZeroCoefficient(f"Coefficient {index} is zero")
    logger.debug(f"Validated instance: degree {inst.degree} (n={n}), r={r}")
    return n


def veronese_matrix(inst: Instance) -> Matrix:
    """M_d, one row per point: the coefficients of L_i^d"""
    return Matrix.from_rows(
        [power_coefficients(p.coords, inst.degree) for p in inst.points],
        cols=basis_size(inst.degree),
    )


def veronese_rank(inst: Instance) -> Tuple[int, OpCounter]:
    return rank(veronese_matrix(inst))


class NonRedundancy(NamedTuple):
    holds: bool
    rank: int


def non_redundant(inst: Instance) -> NonRedundancy:
    value, _ = veronese_rank(inst)
    return NonRedundancy(value == inst.r, value)

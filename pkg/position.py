# position.py
"""Special positions of a point set: lines, conics and cubics through many
of its points, and the configurations that force a positive-dimensional
family of decompositions."""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from errors import EmptyPointSet
from exact_linalg import kernel_basis
from forms import monomial_values, primitive_integer_vector
from hilbert import PointSet, evaluation_matrix

logger = logging.getLogger(__name__)

Witness = Optional[Tuple[int, ...]]


class FamilyKind(Enum):
    NONE = "None"
    COLLINEAR = "CollinearFamily"
    CONIC = "ConicFamily"


@dataclass(frozen=True)
class Incidence:
    """A curve through some of the points: its count, coefficients and the points it contains"""
    count: int
    witness: Witness
    indices: Tuple[int, ...]


@dataclass(frozen=True)
class PositionReport:
    max_collinear: int
    line_witness: Witness
    max_on_conic: int
    conic_witness: Witness
    in_cubic: bool
    cubic_witness: Witness

    def as_dict(self):
        return {
            "max_collinear": self.max_collinear,
            "line_witness": _listed(self.line_witness),
            "max_on_conic": self.max_on_conic,
            "conic_witness": _listed(self.conic_witness),
            "in_cubic": self.in_cubic,
            "cubic_witness": _listed(self.cubic_witness),
        }


@dataclass(frozen=True)
class FamilyObstruction:
    kind: FamilyKind
    threshold: int
    witness: Tuple[int, ...] = ()

    def as_dict(self):
        return {"kind": self.kind.value, "threshold": self.threshold, "witness": list(self.witness)}


def _listed(witness: Witness):
    return list(witness) if witness is not None else None


def _coordinate_array(points: PointSet) -> np.ndarray:
    return np.array([p.coords for p in points], dtype=object).reshape(len(points), 3)


def _values_array(points: PointSet, degree: int) -> np.ndarray:
    return np.array([monomial_values(p.coords, degree) for p in points], dtype=object)


def _on_curve(values: np.ndarray, coeffs) -> np.ndarray:
    return np.array([value == 0 for value in values.dot(np.array(coeffs, dtype=object))], dtype=bool)


def _cross(p, q) -> Tuple[int, int, int]:
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def _lines_through_pairs(points: PointSet) -> List[Tuple[Tuple[int, ...], np.ndarray]]:
    """Distinct lines spanned by pairs of points, in pair order, with their incidence masks"""
    coords = _coordinate_array(points)
    lines = []
    seen = set()
    for i, j in combinations(range(len(points)), 2):
        line = primitive_integer_vector(_cross(points.points[i].coords, points.points[j].coords))
        if line in seen:
            continue
        seen.add(line)
        lines.append((line, _on_curve(coords, line)))
    return lines


def best_line(points: PointSet) -> Incidence:
    if len(points) == 0:
        raise EmptyPointSet("No points to put on a line")
    if len(points) == 1:
        return Incidence(1, None, (0,))
    best = Incidence(0, None, ())
    for line, mask in _lines_through_pairs(points):
        count = int(mask.sum())
        if count > best.count:
            best = Incidence(count, line, tuple(int(i) for i in np.flatnonzero(mask)))
            if count == len(points):
                break
    return best


def max_collinear(points: PointSet) -> Tuple[int, Witness]:
    best = best_line(points)
    return best.count, best.witness


def _product_of_lines(l1, l2) -> Tuple[int, ...]:
    a1, b1, c1 = l1
    a2, b2, c2 = l2
    return primitive_integer_vector((
        a1 * a2,
        a1 * b2 + b1 * a2,
        a1 * c2 + c1 * a2,
        b1 * b2,
        b1 * c2 + c1 * b2,
        c1 * c2,
    ))


def best_conic(points: PointSet) -> Incidence:
    length = len(points)
    if length == 0:
        raise EmptyPointSet("No points to put on a conic")
    if length <= 5:
        conic = kernel_basis(evaluation_matrix(points, 2))[0]
        return Incidence(length, conic, tuple(range(length)))

    values = _values_array(points, 2)
    best = Incidence(0, None, ())
    for subset in combinations(range(length), 5):
        for conic in kernel_basis(evaluation_matrix(points.subset(subset), 2)):
            mask = _on_curve(values, conic)
            count = int(mask.sum())
            if count > best.count:
                best = Incidence(count, conic, tuple(int(i) for i in np.flatnonzero(mask)))
                if count == length:
                    return best

    # reducible conics: a pair of lines (or a double line) through pairs of points
    lines = _lines_through_pairs(points)
    for a in range(len(lines)):
        for b in range(a, len(lines)):
            mask = lines[a][1] | lines[b][1]
            count = int(mask.sum())
            if count > best.count:
                conic = _product_of_lines(lines[a][0], lines[b][0])
                best = Incidence(count, conic, tuple(int(i) for i in np.flatnonzero(mask)))
    logger.debug(f"Max on a conic: {best.count} of {length}")
    return best


def max_on_conic(points: PointSet) -> Tuple[int, Witness]:
    best = best_conic(points)
    return best.count, best.witness


def contained_in_cubic(points: PointSet) -> Tuple[bool, Witness]:
    cubics = kernel_basis(evaluation_matrix(points, 3))
    if not cubics:
        return False, None
    return True, cubics[0]


def family_obstruction(points: PointSet, n: int, line: Optional[Incidence] = None,
                       conic: Optional[Incidence] = None) -> FamilyObstruction:
    """Collinear family if 5+n points lie on a line, else conic family if 9+2n lie on a conic"""
    if len(points) == 0:
        return FamilyObstruction(FamilyKind.NONE, 0)
    line = line or best_line(points)
    if line.count >= 5 + n:
        return FamilyObstruction(FamilyKind.COLLINEAR, 5 + n, line.indices)
    conic = conic or best_conic(points)
    if conic.count >= 9 + 2 * n:
        return FamilyObstruction(FamilyKind.CONIC, 9 + 2 * n, conic.indices)
    return FamilyObstruction(FamilyKind.NONE, 0)


def position_report(points: PointSet, line: Optional[Incidence] = None,
                    conic: Optional[Incidence] = None) -> PositionReport:
    line = line or best_line(points)
    conic = conic or best_conic(points)
    in_cubic, cubic = contained_in_cubic(points)
    return PositionReport(line.count, line.witness, conic.count, conic.witness, in_cubic, cubic)

# hilbert.py
"""Hilbert function of finite sets of points in the plane and the
Cayley-Bacharach property, computed as ranks of evaluation matrices."""
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from errors import DimensionError, DuplicatePoint, EmptyPointSet
from exact_linalg import Matrix, kernel_dim, rank
from forms import ProjPoint, as_point, basis_size, monomial_values

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointSet:
    points: Tuple[ProjPoint, ...]

    def __post_init__(self):
        points = tuple(as_point(p) for p in self.points)
        seen = set()
        for index, point in enumerate(points):
            if point in seen:
                raise DuplicatePoint(f"Point {point} repeated at index {index}")
            seen.add(point)
        object.__setattr__(self, "points", points)

    @classmethod
    def of(cls, points: Iterable) -> "PointSet":
        return cls(tuple(points))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def without(self, index: int) -> "PointSet":
        return PointSet(self.points[:index] + self.points[index + 1:])

    def subset(self, indices: Iterable[int]) -> "PointSet":
        return PointSet(tuple(self.points[i] for i in indices))

    def union(self, other: "PointSet") -> "PointSet":
        return PointSet(self.points + tuple(p for p in other.points if p not in self.points))


def evaluation_matrix(points: PointSet, d: int) -> Matrix:
    return Matrix.from_rows(
        [monomial_values(p.coords, d) for p in points],
        cols=basis_size(d),
    )


def hilbert_function(points: PointSet, d: int) -> int:
    if d < 0 or len(points) == 0:
        return 0
    return rank(evaluation_matrix(points, d))[0]


def ideal_dim(points: PointSet, d: int) -> int:
    """dim I_Z(d), the number of independent degree-d forms through every point"""
    return kernel_dim(evaluation_matrix(points, d))


@dataclass(frozen=True)
class HilbertProfile:
    h: Tuple[int, ...]
    dh: Tuple[int, ...]
    stabilization: int
    length: int
    complete: bool

    def h_at(self, d: int) -> int:
        if d < 0:
            return 0
        if d < len(self.h):
            return self.h[d]
        if self.complete:
            return self.length
        raise ValueError(f"Profile was capped at degree {self.stabilization}")

    def dh_at(self, d: int) -> int:
        return self.h_at(d) - self.h_at(d - 1)

    def as_dict(self):
        return {
            "length": self.length,
            "h": list(self.h),
            "Dh": list(self.dh),
            "stabilization": self.stabilization,
            "complete": self.complete,
        }


def hilbert_profile(points: PointSet, d_max: Optional[int] = None) -> HilbertProfile:
    """h and Dh from degree 0 until h reaches the number of points.

    Stabilization happens by degree len(points) - 1 at the latest; d_max caps
    the computation below that, in which case the profile is incomplete.
    """
    if d_max is not None and d_max < 0:
        raise DimensionError(f"Profile degree cap must be non-negative, got {d_max}")
    length = len(points)
    if length == 0:
        return HilbertProfile((0,), (0,), 0, 0, True)
    limit = length - 1 if d_max is None else min(d_max, length - 1)
    h = []
    for d in range(limit + 1):
        h.append(hilbert_function(points, d))
        if h[-1] == length:
            break
    dh = tuple(value - (h[d - 1] if d > 0 else 0) for d, value in enumerate(h))
    complete = h[-1] == length
    logger.debug(f"Hilbert profile of {length} points: h={h}, complete={complete}")
    return HilbertProfile(tuple(h), dh, len(h) - 1, length, complete)


def _same_ideal_without(points: PointSet, index: int, d: int, full_dim: int) -> bool:
    return ideal_dim(points.without(index), d) == full_dim


def cayley_bacharach(points: PointSet, d: int, executor=None) -> bool:
    """CB(d): every degree-d form through all but one point passes through that point too"""
    if len(points) == 0:
        raise EmptyPointSet("Cayley-Bacharach is undefined on the empty set")
    full_dim = ideal_dim(points, d)
    indices = range(len(points))
    if executor is not None:
        outcomes = executor.map(lambda i: _same_ideal_without(points, i, d, full_dim), indices)
        return all(list(outcomes))
    return all(_same_ideal_without(points, i, d, full_dim) for i in indices)


def gkr_inequality_holds(points: PointSet, i: int, profile: Optional[HilbertProfile] = None) -> bool:
    """sum_{t<=j} Dh(t) <= sum_{i+1-j<=t<=i+1} Dh(t) for every 0 <= j <= i+1"""
    profile = profile or hilbert_profile(points)
    for j in range(i + 2):
        left = sum(profile.dh_at(t) for t in range(j + 1))
        right = sum(profile.dh_at(t) for t in range(i + 1 - j, i + 2))
        if left > right:
            logger.debug(f"GKR inequality fails at j={j}: {left} > {right}")
            return False
    return True

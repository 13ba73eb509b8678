# generators.py
"""Seeded instance generators: general position, points on a line, on a
smooth conic or on the cuspidal cubic, and pairs of disjoint decompositions
of one binary form."""
import logging
import re
from itertools import combinations
from typing import List, NamedTuple, Optional, Tuple

import numpy as np

from errors import InvalidRequest
from exact_linalg import Matrix, kernel_basis
from forms import Form, Instance, ProjPoint, compose_tensor, monomial_values, power_coefficients
from functions import DEFAULT_SETTINGS
from hilbert import PointSet, evaluation_matrix
from position import FamilyKind, family_obstruction
from validate import max_length

logger = logging.getLogger(__name__)

_POSITION = re.compile(r"^\s*(general|collinear|conic|cubic)\s*(?:\(\s*(\d+)\s*\))?\s*$")


class Position(NamedTuple):
    kind: str
    size: Optional[int] = None

    def __str__(self):
        return self.kind if self.size is None else f"{self.kind}({self.size})"


def parse_position(text: str) -> Position:
    match = _POSITION.match(text)
    if not match:
        raise InvalidRequest(f"Unknown position '{text}', expected general, collinear(s), conic(s) or cubic")
    kind, size = match.group(1), match.group(2)
    if kind in ("collinear", "conic"):
        if size is None:
            raise InvalidRequest(f"Position {kind} needs a size, e.g. {kind}(5)")
        return Position(kind, int(size))
    if size is not None:
        raise InvalidRequest(f"Position {kind} takes no size")
    return Position(kind)


def _cross(p, q) -> Tuple[int, int, int]:
    return (p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0])


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


class PointSampler:
    """Adds points one at a time, rejecting candidates that would put three
    points on a line or six on a conic through five accepted points."""

    def __init__(self, rng: np.random.Generator, coordinate_range: int, max_attempts: int):
        self.rng = rng
        self.coordinate_range = coordinate_range
        self.max_attempts = max_attempts
        self.points: List[ProjPoint] = []
        self.lines: List[Tuple[int, ...]] = []
        self.conics: List[Tuple[int, ...]] = []

    def random_vector(self) -> Tuple[int, int, int]:
        bound = self.coordinate_range
        return tuple(int(v) for v in self.rng.integers(-bound, bound + 1, size=3))

    def fits(self, point: ProjPoint, avoid: Tuple[Tuple[int, ...], ...] = ()) -> bool:
        if point in self.points:
            return False
        if any(_dot(line, point.coords) == 0 for line in self.lines):
            return False
        values = monomial_values(point.coords, 2)
        if any(_dot(conic, values) == 0 for conic in self.conics + list(avoid)):
            return False
        return True

    def add(self, point: ProjPoint):
        for other in self.points:
            self.lines.append(_cross(other.coords, point.coords))
        for quadruple in combinations(self.points, 4):
            kernel = kernel_basis(evaluation_matrix(PointSet(quadruple + (point,)), 2))
            # a pencil of conics means the five points are degenerate; only unique conics are tracked
            if len(kernel) == 1:
                self.conics.append(kernel[0])
        self.points.append(point)

    def add_general(self, count: int, avoid: Tuple[Tuple[int, ...], ...] = ()):
        attempts = 0
        while count > 0:
            attempts += 1
            if attempts > self.max_attempts:
                raise InvalidRequest(f"No point in general position after {self.max_attempts} attempts")
            vector = self.random_vector()
            if vector == (0, 0, 0):
                continue
            point = ProjPoint(vector)
            if self.fits(point, avoid):
                self.add(point)
                count -= 1
        logger.debug(f"Sampled general points with {attempts} attempts")


def _distinct_parameters(rng: np.random.Generator, count: int, bound: int, nonzero: bool = False) -> List[int]:
    values = [t for t in range(-bound, bound + 1) if not (nonzero and t == 0)]
    if count > len(values):
        raise InvalidRequest(f"{count} distinct parameters requested from a range of {len(values)}")
    return [int(t) for t in rng.choice(values, size=count, replace=False)]


def _random_line(sampler: PointSampler) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    for _ in range(sampler.max_attempts):
        p, q = sampler.random_vector(), sampler.random_vector()
        if any(_cross(p, q)):
            return p, q
    raise InvalidRequest("Could not sample two independent points")


def _coefficients(rng: np.random.Generator, count: int, bound: int) -> Tuple[int, ...]:
    values = [a for a in range(-bound, bound + 1) if a != 0]
    return tuple(int(a) for a in rng.choice(values, size=count))


def _expected_kind(position: Position, n: int) -> Optional[FamilyKind]:
    if position.kind == "general":
        return FamilyKind.NONE
    if position.kind == "collinear":
        return FamilyKind.COLLINEAR if position.size >= 5 + n else FamilyKind.NONE
    if position.kind == "conic":
        return FamilyKind.CONIC if position.size >= 9 + 2 * n else FamilyKind.NONE
    return None


def _sample_points(position: Position, r: int, rng: np.random.Generator, settings: dict) -> List[ProjPoint]:
    sampler = PointSampler(rng, settings["coordinate_range"], settings["max_attempts"])
    bound = settings["parameter_range"]
    if position.kind == "general":
        sampler.add_general(r)
    elif position.kind == "collinear":
        p, q = _random_line(sampler)
        for t in _distinct_parameters(rng, position.size, bound):
            sampler.add(ProjPoint(tuple(a + t * b for a, b in zip(p, q))))
        sampler.add_general(r - position.size)
    elif position.kind == "conic":
        for t in _distinct_parameters(rng, position.size, bound):
            sampler.add(ProjPoint((1 - t * t, 2 * t, 1 + t * t)))
        # x^2 + y^2 - z^2
        sampler.add_general(r - position.size, avoid=((1, 0, 0, 1, 0, -1),))
    else:
        for t in _distinct_parameters(rng, r, bound, nonzero=True):
            sampler.add(ProjPoint((t * t, t ** 3, 1)))
    return sampler.points


def gen_instance(n: int, r: int, position="general", seed: int = 0,
                 allow_out_of_range: bool = False, settings: Optional[dict] = None) -> Instance:
    """Seeded instance of degree 8+2n with r points in the requested position"""
    settings = {**DEFAULT_SETTINGS["generator"], **(settings or {})}
    if not isinstance(position, Position):
        position = parse_position(position)
    if n < 0 or r < 1:
        raise InvalidRequest(f"Need n >= 0 and r >= 1, got n={n}, r={r}")
    if r > max_length(n) and not allow_out_of_range:
        raise InvalidRequest(f"r = {r} exceeds 3n+11 = {max_length(n)}; allow out-of-range instances to override")
    if position.size is not None and not 1 <= position.size <= r:
        raise InvalidRequest(f"{position} asks for {position.size} special points among {r}")

    rng = np.random.default_rng(seed)
    expected = _expected_kind(position, n)
    for attempt in range(1, settings["max_attempts"] + 1):
        points = _sample_points(position, r, rng, settings)
        if expected is not None:
            obstruction = family_obstruction(PointSet(tuple(points)), n)
            if obstruction.kind is not expected:
                logger.debug(f"Attempt {attempt}: obstruction {obstruction.kind.value}, wanted {expected.value}")
                continue
        coefficients = _coefficients(rng, r, settings["coefficient_range"])
        logger.debug(f"Generated {position} instance n={n} r={r} seed={seed} in {attempt} attempt(s)")
        return Instance(8 + 2 * n, tuple(points), coefficients)
    raise InvalidRequest(f"No {position} instance matched its obstruction class after {settings['max_attempts']} attempts")


def gen_double_decomposition_fixture(d: int, r: int, seed: int = 0,
                                     settings: Optional[dict] = None) -> Tuple[Instance, Instance, Form]:
    """Two disjoint length-r decompositions of one binary form of degree d supported on a line.

    2r points on a line have 2r - (d+1) independent linear relations among
    their d-th powers; a relation with no zero entry splits into A and B.
    """
    settings = {**DEFAULT_SETTINGS["generator"], **(settings or {})}
    if d < 1 or r < 1 or not (2 * r > d + 1 >= r):
        raise InvalidRequest(f"Need 2r > d+1 >= r, got d={d}, r={r}")
    rng = np.random.default_rng(seed)
    sampler = PointSampler(rng, settings["coordinate_range"], settings["max_attempts"])
    for attempt in range(1, settings["max_attempts"] + 1):
        p, q = _random_line(sampler)
        parameters = _distinct_parameters(rng, 2 * r, settings["parameter_range"])
        points = [ProjPoint(tuple(a + t * b for a, b in zip(p, q))) for t in parameters]
        rows = [power_coefficients(point.coords, d) for point in points]
        relations = kernel_basis(Matrix.from_rows(rows).transpose())
        weights = rng.integers(1, 10, size=len(relations)) * rng.choice([-1, 1], size=len(relations))
        relation = [sum(int(w) * v[i] for w, v in zip(weights, relations)) for i in range(2 * r)]
        if any(c == 0 for c in relation):
            logger.debug(f"Attempt {attempt}: relation has a zero entry, resampling")
            continue
        first = Instance(d, tuple(points[:r]), tuple(relation[:r]))
        second = Instance(d, tuple(points[r:]), tuple(-c for c in relation[r:]))
        form = compose_tensor(first)
        logger.debug(f"Double decomposition fixture d={d} r={r} seed={seed} in {attempt} attempt(s)")
        return first, second, form
    raise InvalidRequest(f"No relation without zero entries after {settings['max_attempts']} attempts")

# forms.py
"""Exact scalars, points of the projective plane and ternary forms.

A form of degree d is stored as its coefficient vector over the fixed
monomial basis of degree d: graded lexicographic order with x > y > z, i.e.
exponent triples in lexicographically descending order.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, gcd, lcm
from typing import Dict, Iterable, NamedTuple, Sequence, Tuple, Union

from errors import DimensionError, InvalidInstance, InvalidPoint

logger = logging.getLogger(__name__)

Scalar = Fraction
Rational = Union[int, Fraction]

VARIABLES = ("x", "y", "z")


class Monomial(NamedTuple):
    x: int
    y: int
    z: int

    @property
    def degree(self) -> int:
        return self.x + self.y + self.z

    def __str__(self):
        parts = []
        for name, exponent in zip(VARIABLES, self):
            if exponent == 1:
                parts.append(name)
            elif exponent > 1:
                parts.append(f"{name}^{exponent}")
        return "*".join(parts) or "1"


@lru_cache(maxsize=None)
def monomial_basis(degree: int) -> Tuple[Monomial, ...]:
    if degree < 0:
        raise DimensionError(f"Negative degree {degree}")
    return tuple(
        Monomial(i, j, degree - i - j)
        for i in range(degree, -1, -1)
        for j in range(degree - i, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(degree: int) -> Dict[Monomial, int]:
    return {monomial: index for index, monomial in enumerate(monomial_basis(degree))}


def basis_size(degree: int) -> int:
    """C(degree+2, 2), the dimension of the space of ternary forms of that degree"""
    return comb(degree + 2, 2) if degree >= 0 else 0


def primitive_integer_vector(values: Iterable[Rational]) -> Tuple[int, ...]:
    """Clear denominators, divide by the gcd and make the first nonzero entry positive"""
    values = [Fraction(v) for v in values]
    denominator = reduce(lcm, (v.denominator for v in values), 1)
    integers = [int(v * denominator) for v in values]
    divisor = reduce(gcd, integers, 0)
    if divisor == 0:
        return tuple(integers)
    integers = [v // divisor for v in integers]
    leading = next(v for v in integers if v != 0)
    if leading < 0:
        integers = [-v for v in integers]
    return tuple(integers)


@dataclass(frozen=True)
class ProjPoint:
    """A point of the projective plane, kept in canonical primitive coordinates"""
    coords: Tuple[int, int, int]

    def __post_init__(self):
        if len(self.coords) != 3:
            raise InvalidPoint(f"Expected 3 homogeneous coordinates, got {len(self.coords)}")
        if all(Fraction(c) == 0 for c in self.coords):
            raise InvalidPoint("All homogeneous coordinates are zero")
        object.__setattr__(self, "coords", primitive_integer_vector(self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "({}:{}:{})".format(*self.coords)


def normalize_point(coords: Sequence[Rational]) -> ProjPoint:
    return ProjPoint(tuple(Fraction(c) for c in coords))


def as_point(value) -> ProjPoint:
    if isinstance(value, ProjPoint):
        return value
    return normalize_point(value)


@dataclass(frozen=True)
class Form:
    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != basis_size(self.degree):
            raise DimensionError(
                f"A form of degree {self.degree} needs {basis_size(self.degree)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, degree: int) -> "Form":
        return cls(degree, (Fraction(0),) * basis_size(degree))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coefficient(self, monomial: Sequence[int]) -> Fraction:
        return self.coeffs[monomial_index(self.degree)[Monomial(*monomial)]]

    def scale(self, factor: Rational) -> "Form":
        factor = Fraction(factor)
        return Form(self.degree, tuple(factor * c for c in self.coeffs))

    def __add__(self, other: "Form") -> "Form":
        if self.degree != other.degree:
            raise DimensionError(f"Cannot add forms of degree {self.degree} and {other.degree}")
        return Form(self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self):
        terms = [f"{c}*{m}" for c, m in zip(self.coeffs, monomial_basis(self.degree)) if c != 0]
        return " + ".join(terms) or "0"


def monomial_values(coords: Sequence[int], degree: int) -> Tuple[int, ...]:
    """Plain values of the degree-d monomials at a coordinate vector"""
    a, b, c = coords
    return tuple(a ** i * b ** j * c ** k for i, j, k in monomial_basis(degree))


def evaluate(coeffs: Sequence[Rational], point: ProjPoint) -> Fraction:
    """Evaluate the form sum c_m * m (plain monomials) at the canonical coordinates of point"""
    degree = _degree_of_length(len(coeffs))
    return sum(
        (Fraction(c) * v for c, v in zip(coeffs, monomial_values(point.coords, degree)) if c),
        Fraction(0),
    )


def _degree_of_length(length: int) -> int:
    degree = 0
    while basis_size(degree) < length:
        degree += 1
    if basis_size(degree) != length:
        raise DimensionError(f"{length} is not the size of a monomial basis")
    return degree


@lru_cache(maxsize=4096)
def power_coefficients(coords: Tuple[int, ...], e: int) -> Tuple[int, ...]:
    """Coefficients of (a x + b y + c z)^e for raw coordinates, no canonicalization"""
    a, b, c = coords
    return tuple(
        comb(e, i) * comb(e - i, j) * a ** i * b ** j * c ** k
        for i, j, k in monomial_basis(e)
    )


def power_form(point: ProjPoint, e: int) -> Form:
    if e < 0:
        raise DimensionError(f"Negative exponent {e}")
    return Form(e, power_coefficients(tuple(point.coords), e))


def shift_by_variable(coeffs: Sequence, degree: int, j: int) -> list:
    """Coefficient list of x_j * F for F given by coeffs in the degree basis"""
    if j not in (0, 1, 2):
        raise DimensionError(f"Variable index must be 0, 1 or 2, got {j}")
    source = monomial_index(degree)
    shifted = []
    for monomial in monomial_basis(degree + 1):
        if monomial[j] == 0:
            shifted.append(0)
            continue
        lowered = list(monomial)
        lowered[j] -= 1
        shifted.append(coeffs[source[Monomial(*lowered)]])
    return shifted


def multiply_by_variable(form: Form, j: int) -> Form:
    return Form(form.degree + 1, shift_by_variable(form.coeffs, form.degree, j))


@dataclass(frozen=True)
class Instance:
    """A decomposition T = sum a_i L_i^d given by its points and coefficients"""
    degree: int
    points: Tuple[ProjPoint, ...]
    coefficients: Tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(as_point(p) for p in self.points))
        object.__setattr__(self, "coefficients", tuple(Fraction(a) for a in self.coefficients))

    @property
    def r(self) -> int:
        return len(self.points)


def compose_tensor(inst: Instance) -> Form:
    if len(inst.points) != len(inst.coefficients):
        raise InvalidInstance(
            f"{len(inst.points)} points but {len(inst.coefficients)} coefficients"
        )
    total = [Fraction(0)] * basis_size(inst.degree)
    for point, a in zip(inst.points, inst.coefficients):
        for index, c in enumerate(power_coefficients(tuple(point.coords), inst.degree)):
            if c:
                total[index] += a * c
    return Form(inst.degree, total)

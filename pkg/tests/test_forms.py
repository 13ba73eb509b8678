from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from errors import DimensionError, InvalidInstance, InvalidPoint
from forms import (Form, Instance, Monomial, ProjPoint, basis_size, compose_tensor, evaluate,
                   monomial_basis, multiply_by_variable, normalize_point, power_coefficients,
                   power_form)

coordinates = st.tuples(*[st.integers(-9, 9)] * 3).filter(any)


def test_monomial_basis_small_degrees():
    assert monomial_basis(0) == (Monomial(0, 0, 0),)
    assert monomial_basis(1) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert monomial_basis(2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


@pytest.mark.parametrize("degree", range(0, 11))
def test_monomial_basis_is_strictly_decreasing(degree):
    basis = monomial_basis(degree)
    assert len(basis) == comb(degree + 2, 2) == basis_size(degree)
    assert all(m.degree == degree for m in basis)
    assert all(a > b for a, b in zip(basis, basis[1:]))


def test_monomial_basis_rejects_negative_degree():
    with pytest.raises(DimensionError):
        monomial_basis(-1)


def test_normalize_point():
    assert normalize_point((Fraction(1, 2), 1, 0)).coords == (1, 2, 0)
    assert normalize_point((-2, -4, -6)).coords == (1, 2, 3)
    assert normalize_point((0, -3, 6)).coords == (0, 1, -2)
    with pytest.raises(InvalidPoint):
        normalize_point((0, 0, 0))


def test_proj_point_rejects_wrong_length():
    with pytest.raises(InvalidPoint):
        ProjPoint((1, 2))


def test_power_form_examples():
    assert power_form(ProjPoint((1, 0, 0)), 2).coeffs == (1, 0, 0, 0, 0, 0)
    assert power_form(ProjPoint((1, 1, 1)), 2).coeffs == (1, 2, 2, 1, 2, 1)
    assert power_form(ProjPoint((1, 2, 0)), 2).coeffs == (1, 4, 0, 4, 0, 0)


def test_multiply_by_variable_examples():
    x_plus_y = Form(1, (1, 1, 0))
    assert multiply_by_variable(x_plus_y, 0).coeffs == (1, 1, 0, 0, 0, 0)
    assert multiply_by_variable(Form.zero(4), 1).is_zero
    z_cubed = multiply_by_variable(Form(2, (0, 0, 0, 0, 0, 1)), 2)
    assert z_cubed.coefficient((0, 0, 3)) == 1
    assert sum(z_cubed.coeffs) == 1


def test_compose_tensor_examples():
    assert compose_tensor(Instance(2, ((1, 0, 0), (0, 1, 0)), (1, 1))).coeffs == (1, 0, 0, 1, 0, 0)
    five_x8 = compose_tensor(Instance(8, ((1, 0, 0),), (5,)))
    assert five_x8.coefficient((8, 0, 0)) == 5
    assert sum(five_x8.coeffs) == 5
    half = Fraction(1, 2)
    assert compose_tensor(Instance(2, ((1, 1, 0), (1, -1, 0)), (half, half))).coeffs == (1, 0, 0, 1, 0, 0)


def test_compose_tensor_length_mismatch():
    with pytest.raises(InvalidInstance):
        compose_tensor(Instance(8, ((1, 0, 0), (0, 1, 0)), (1,)))


@given(coordinates, st.integers(0, 6))
def test_power_form_satisfies_euler_identity(coords, e):
    # L * L^e = sum_j l_j * (x_j * L^e)
    point = ProjPoint(coords)
    power = power_form(point, e)
    combined = Form.zero(e + 1)
    for j, l_j in enumerate(point.coords):
        combined = combined + multiply_by_variable(power, j).scale(l_j)
    assert combined == power_form(point, e + 1)


@given(coordinates, st.integers(1, 9).map(lambda v: v * 3), st.integers(0, 5))
def test_power_coefficients_scale_homogeneously(coords, factor, e):
    scaled = tuple(factor * c for c in coords)
    assert power_coefficients(scaled, e) == tuple(factor ** e * c for c in power_coefficients(coords, e))


@given(st.lists(coordinates, min_size=1, max_size=5),
       st.data())
def test_compose_tensor_is_linear_in_coefficients(points, data):
    size = len(points)
    u = data.draw(st.lists(st.integers(-9, 9), min_size=size, max_size=size))
    v = data.draw(st.lists(st.integers(-9, 9), min_size=size, max_size=size))
    total = compose_tensor(Instance(4, points, [a + b for a, b in zip(u, v)]))
    assert total == compose_tensor(Instance(4, points, u)) + compose_tensor(Instance(4, points, v))


@given(coordinates, st.integers(0, 5))
def test_power_form_evaluates_to_power_of_linear_form(coords, e):
    point = ProjPoint(coords)
    probe = ProjPoint((2, -1, 3))
    # evaluate() uses plain monomial values, power_form stores L^e with multinomial weights
    linear = sum(a * b for a, b in zip(point.coords, probe.coords))
    assert evaluate(power_form(point, e).coeffs, probe) == linear ** e

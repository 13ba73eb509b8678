from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from errors import DimensionError
from exact_linalg import Matrix, OpCounter, is_in_span, kernel_basis, kernel_dim, rank
from forms import power_coefficients
from hilbert import PointSet, evaluation_matrix
from oracles import rank_oracle

small_matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-9, 9), min_size=cols, max_size=cols), min_size=1, max_size=6)
)


def identity(n):
    return Matrix.from_rows([[int(i == j) for j in range(n)] for i in range(n)])


def test_rank_examples():
    assert rank(identity(3))[0] == 3
    assert rank(Matrix.from_rows([(1, 2, 3), (1, 2, 3)]))[0] == 1
    points = PointSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    assert rank(evaluation_matrix(points, 2))[0] == 4


def test_empty_matrices_have_rank_zero():
    assert rank(Matrix(0, 5, ()))[0] == 0
    assert rank(Matrix(3, 0, ()))[0] == 0
    assert kernel_basis(Matrix(0, 3, ())) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_kernel_dim_examples():
    assert kernel_dim(identity(3)) == 0
    assert kernel_dim(Matrix.from_rows([(0,) * 6])) == 6
    five = PointSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)])
    assert kernel_dim(evaluation_matrix(five, 2)) == 1


def test_kernel_basis_examples():
    assert kernel_basis(identity(4)) == []
    basis = kernel_basis(Matrix.from_rows([(1, 1, 1)]))
    assert len(basis) == 2
    assert all(sum(v) == 0 for v in basis)
    assert rank(Matrix.from_rows(basis))[0] == 2


def test_kernel_conic_vanishes_on_five_points():
    five = PointSet.of([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)])
    matrix = evaluation_matrix(five, 2)
    (conic,) = kernel_basis(matrix)
    for row in matrix.row_list():
        assert sum(a * b for a, b in zip(row, conic)) == 0


def test_is_in_span_examples():
    m = Matrix.from_rows([(1, 2, 3), (0, 1, 1)])
    assert is_in_span(m.row(0), m)
    assert is_in_span((0, 0, 0), m)
    v8 = Matrix.from_rows([power_coefficients((0, 1, 0), 8), power_coefficients((0, 0, 1), 8)])
    assert not is_in_span(power_coefficients((1, 0, 0), 8), v8)
    with pytest.raises(DimensionError):
        is_in_span((1, 2), m)


def test_from_rows_rejects_ragged_rows():
    with pytest.raises(DimensionError):
        Matrix.from_rows([(1, 2), (1, 2, 3)])


def test_rank_accepts_rational_entries():
    m = Matrix.from_rows([(Fraction(1, 2), Fraction(1, 3)), (3, 2)])
    assert rank(m)[0] == 1


@given(small_matrices)
def test_rank_matches_oracle_and_transpose(rows):
    m = Matrix.from_rows(rows)
    value, _ = rank(m)
    assert value == rank_oracle(rows)
    assert value == rank(m.transpose())[0]


@given(small_matrices, st.data())
def test_rank_invariances(rows, data):
    m = Matrix.from_rows(rows)
    value = rank(m)[0]
    permutation = data.draw(st.permutations(range(len(rows))))
    scales = data.draw(st.lists(st.integers(1, 7), min_size=len(rows), max_size=len(rows)))
    transformed = [[Fraction(-s, 3) * e for e in rows[i]] for i, s in zip(permutation, scales)]
    assert rank(Matrix.from_rows(transformed))[0] == value
    assert rank(m.with_row(m.row(0)))[0] == value


@given(small_matrices)
def test_kernel_basis_is_a_basis_of_the_kernel(rows):
    m = Matrix.from_rows(rows)
    basis = kernel_basis(m)
    assert len(basis) == kernel_dim(m)
    for vector in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vector)) == 0
    if basis:
        assert rank(Matrix.from_rows(basis))[0] == len(basis)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.integers(1, 15), st.integers(0, 2 ** 32 - 1))
def test_rank_matches_oracle_on_random_integer_matrices(rows, cols, seed):
    rng = np.random.default_rng(seed)
    entries = rng.integers(-9, 10, size=(rows, cols)).tolist()
    assert rank(Matrix.from_rows(entries))[0] == rank_oracle(entries)


def test_counted_multiplications_grow_cubically():
    rng = np.random.default_rng(7)
    sizes = [8, 16, 32, 64]
    counts = []
    for n in sizes:
        value, counter = rank(Matrix.from_rows(rng.integers(-9, 10, size=(n, n)).tolist()))
        assert value == n
        counts.append(counter.multiplications)
    slope = np.polyfit(np.log(sizes), np.log(counts), 1)[0]
    assert 2.7 <= slope <= 3.3


def test_op_counter_merge():
    counter = OpCounter(3, 1).merge(OpCounter(4, 2))
    assert counter.as_dict() == {"multiplications": 7, "steps": 3}

from fractions import Fraction

import pytest
from sympy.polys.domains import QQ  # type: ignore

from cubegrowth.algebra.laurent import LaurentPolynomial
from cubegrowth.algebra.rings import (
    from_fraction,
    from_ring,
    polynomial_ring,
    solve_sparse,
    to_fraction,
    to_ring,
)
from cubegrowth.exceptions import SingularSystem

F = Fraction


def _solve(matrix, rhs_columns):
    rows = [{j: from_fraction(F(v)) for j, v in enumerate(row) if v} for row in matrix]
    rhs = [
        {c: from_fraction(F(column[i])) for c, column in enumerate(rhs_columns) if column[i]}
        for i in range(len(matrix))
    ]
    den, numerators = solve_sparse(rows, rhs, len(rhs_columns), QQ)
    den = to_fraction(den)
    return [[to_fraction(value) / den for value in column] for column in numerators]


def test_two_by_two():
    (x,) = _solve([[2, 1], [1, 3]], [[3, 5]])
    assert x == [F(4, 5), F(7, 5)]


def test_solution_satisfies_the_system_for_several_columns():
    matrix = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    columns = [[1, 2, 3], [0, 1, 0]]
    solutions = _solve(matrix, columns)
    for column, x in zip(columns, solutions):
        for row, expected in zip(matrix, column):
            assert sum(F(a) * b for a, b in zip(row, x)) == expected


def test_zero_leading_entry_needs_a_pivot_swap():
    (x,) = _solve([[0, 1], [1, 0]], [[7, 9]])
    assert x == [9, 7]


def test_zero_right_hand_side_gives_zero_solution():
    (x,) = _solve([[1, 1], [0, 2]], [[0, 0]])
    assert x == [0, 0]


def test_singular_system():
    with pytest.raises(SingularSystem):
        _solve([[1, 2], [2, 4]], [[1, 2]])


def test_empty_system():
    assert solve_sparse([], [], 2, QQ) == (None, [[], []])


def test_polynomial_ring_solution_is_exact():
    variables = ("t",)
    one = LaurentPolynomial.constant(variables)
    t = LaurentPolynomial.variable(variables, "t")
    # X0 = t*X1 + 1, X1 = t*X1 + t
    rows_laurent = [{0: one, 1: -t}, {1: one - t}]
    rhs_laurent = [{0: one}, {0: t}]
    R = polynomial_ring(variables, [p for row in rows_laurent + rhs_laurent for p in row.values()])
    den, (numerators,) = solve_sparse(
        [{k: to_ring(R, v) for k, v in row.items()} for row in rows_laurent],
        [{k: to_ring(R, v) for k, v in row.items()} for row in rhs_laurent],
        1, R.to_domain(),
    )
    den = from_ring(variables, den)
    x0 = from_ring(variables, numerators[0])
    # X0 = 1 + t^2/(1-t) = (1-t+t^2)/(1-t)
    assert x0 * (one - t) == (one - t + t * t) * den


def test_rational_coefficients_use_the_field():
    variables = ("t",)
    half = LaurentPolynomial.constant(variables, F(1, 2))
    R = polynomial_ring(variables, [half])
    assert str(R.domain) == "QQ"
    assert from_ring(variables, to_ring(R, half)) == half
    with pytest.raises(ValueError):
        to_ring(R, LaurentPolynomial(variables, {(-1,): 1}))


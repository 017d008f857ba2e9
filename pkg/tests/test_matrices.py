"""Exterior powers and determinants.

The determinant oracle here is an independent Laplace expansion, kept
separate from the library's fraction-free elimination so the two routes
cross-check each other.
"""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from singforms import (
    det_fraction_free,
    exterior_power_matrix,
    matrix_rank_over_quotient,
    parse_poly,
)


def laplace_det(m):
    n = len(m)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(m[0][j]) * laplace_det(minor)
    return total


def test_identity_exterior_square():
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert exterior_power_matrix(eye, 2) == [
        [1 if i == j else 0 for j in range(3)] for i in range(3)
    ]


def test_diagonal_example():
    d = [[2, 0, 0], [0, 3, 0], [0, 0, 5]]
    w = exterior_power_matrix(d, 2)
    assert [w[i][i] for i in range(3)] == [6, 10, 15]
    assert det_fraction_free(w) == 900 == det_fraction_free(d) ** 2


def test_det_wedge_random_rational():
    rng = random.Random(17)
    for _ in range(25):
        a = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(4)]
            for _ in range(4)
        ]
        det = laplace_det(a)
        wedge = exterior_power_matrix(a, 3)
        assert laplace_det(wedge) == det ** 3
        assert det_fraction_free(a) == det


def test_det_wedge_singular():
    a = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 0, 1], [1, 0, 1, 0]]
    assert det_fraction_free(a) == 0
    assert laplace_det(exterior_power_matrix(a, 3)) == 0


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=-9, max_value=9), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    ),
    st.integers(min_value=1, max_value=3),
)
def test_det_wedge_property(matrix, r):
    det = laplace_det(matrix)
    wedge = exterior_power_matrix(matrix, r)
    from math import comb

    # det of the r-th wedge is det^C(n-1, r-1); r = n-1 gives det^(n-1)
    assert laplace_det(wedge) == det ** comb(2, r - 1)


def test_exterior_power_range_errors():
    import pytest

    with pytest.raises(ValueError):
        exterior_power_matrix([[1, 0], [0, 1]], 3)
    with pytest.raises(ValueError):
        exterior_power_matrix([[1, 0], [0, 1]], 0)


def test_rank_over_quotient(ring3, quadric3):
    grad = [list(quadric3.gradient())]
    assert matrix_rank_over_quotient(grad, quadric3) == 1
    x, y, z = ring3.gens()
    zero = ring3.zero()
    singular = [[x, y], [x, y]]
    assert matrix_rank_over_quotient(singular, None) == 1
    assert matrix_rank_over_quotient([[zero, zero]], None) == 0


def test_rank_detects_relation_mod_f(ring2):
    # x*y = 0 in Q[x,y]/(x*y): the 1x1 matrix [x*y] has rank 0 there
    f = parse_poly("x*y", ring2)
    x, y = ring2.gens()
    assert matrix_rank_over_quotient([[x * y]], f) == 0
    assert matrix_rank_over_quotient([[x * y]], None) == 1

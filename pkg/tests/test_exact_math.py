from fractions import Fraction

import pytest

from src.exact_math import (
    DomainError,
    InvariantViolation,
    as_integer,
    binomial,
    catalan,
    exact_div,
    gcd_many,
    lcm2,
    newton_coefficients,
    rising_factorial,
    sign_power,
    solve_lower_triangular,
)


@pytest.mark.parametrize("n, k, expected", [(5, 2, 10), (4, 7, 0), (0, 0, 1), (6, -1, 0), (10, 10, 1)])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_negative_upper_index():
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_pascal_rule():
    for n in range(1, 61):
        for k in range(0, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("k, expected", [(0, 1), (3, 5), (5, 42)])
def test_catalan_values(k, expected):
    assert catalan(k) == expected


def test_catalan_times_k_plus_one():
    for k in range(61):
        assert catalan(k) * (k + 1) == binomial(2 * k, k)


def test_catalan_negative():
    with pytest.raises(DomainError):
        catalan(-1)


@pytest.mark.parametrize("x, n, expected", [(3, 0, 1), (2, 3, 24), (1, 4, 24), (-2, 3, 0)])
def test_rising_factorial(x, n, expected):
    assert rising_factorial(x, n) == expected


def test_rising_factorial_negative_length():
    with pytest.raises(DomainError):
        rising_factorial(1, -1)


def test_gcd_and_lcm():
    assert gcd_many([2, 4, 6]) == 2
    assert gcd_many([2, 1, 2]) == 1
    assert gcd_many([0, -4]) == 4
    assert lcm2(6, 4) == 12 == 2 * 3 * 4 // gcd_many([2, 2])


def test_gcd_all_zero():
    with pytest.raises(DomainError):
        gcd_many([0, 0])
    with pytest.raises(DomainError):
        gcd_many([])


def test_lcm_zero_argument():
    with pytest.raises(DomainError):
        lcm2(0, 3)


def test_lcm_triple_product_identity():
    for n in range(1, 61):
        assert lcm2(n * (n + 1), n + 2) * gcd_many([2, n]) == n * (n + 1) * (n + 2)


def test_exact_div():
    assert exact_div(36, 12) == 3
    assert exact_div(Fraction(10, 2), 5) == 1
    with pytest.raises(InvariantViolation):
        exact_div(36, 24)
    with pytest.raises(DomainError):
        exact_div(1, 0)


def test_as_integer():
    assert as_integer(Fraction(6, 3)) == 2
    assert as_integer(7) == 7
    with pytest.raises(InvariantViolation):
        as_integer(Fraction(1, 2))


def test_sign_power():
    assert [sign_power(-1, k) for k in range(4)] == [1, -1, 1, -1]
    assert sign_power(1, 5) == 1
    with pytest.raises(DomainError):
        sign_power(2, 1)


def test_solve_lower_triangular():
    matrix = [[2, 0, 0], [1, 3, 0], [4, -1, 5]]
    rhs = [4, 11, 20]
    x = solve_lower_triangular(matrix, rhs)
    assert x == [2, 3, Fraction(15, 5)]
    for row, b in zip(matrix, rhs):
        assert sum(a * v for a, v in zip(row, x)) == b


def test_solve_lower_triangular_singular():
    with pytest.raises(InvariantViolation):
        solve_lower_triangular([[1, 0], [1, 0]], [1, 2])


def test_newton_coefficients_square():
    # y^2 at nodes 2, 6, 12: f[2] = 4, f[2,6] = 8, f[2,6,12] = 1
    assert newton_coefficients([2, 6, 12], [4, 36, 144]) == [4, 8, 1]


def test_newton_coefficients_repeated_node():
    with pytest.raises(DomainError):
        newton_coefficients([1, 1], [1, 1])

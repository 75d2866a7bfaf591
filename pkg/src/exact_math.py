"""
Exact integer kernel and combinatorial primitives.

Integers are Python ints throughout; rationals appear only as
``fractions.Fraction`` intermediates and never leave a public call
unless the caller asked for one explicitly.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Union

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class InvariantViolation(ArithmeticError):
    """An exact division or integrality guaranteed by a proof did not hold."""


@lru_cache(maxsize=None)
def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero when k lies outside [0, n]."""
    if n < 0:
        raise DomainError(f"binomial upper index must be nonnegative, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(k: int) -> int:
    """The k-th Catalan number binom(2k, k) / (k + 1)."""
    if k < 0:
        raise DomainError(f"catalan index must be nonnegative, got k={k}")
    return exact_div(binomial(2 * k, k), k + 1)


def rising_factorial(x: int, n: int) -> int:
    """(x)_n = x (x + 1) ... (x + n - 1), with (x)_0 = 1."""
    if n < 0:
        raise DomainError(f"rising factorial length must be nonnegative, got n={n}")
    result = 1
    for i in range(n):
        result *= x + i
    return result


def gcd_many(values: Iterable[int]) -> int:
    """Nonnegative gcd of the listed integers; they must not all be zero."""
    values = list(values)
    if not values or all(v == 0 for v in values):
        raise DomainError(f"gcd of all-zero input is undefined: {values}")
    return math.gcd(*values)


def lcm2(a: int, b: int) -> int:
    """Positive least common multiple of two nonzero integers."""
    if a == 0 or b == 0:
        raise DomainError(f"lcm arguments must be nonzero, got ({a}, {b})")
    return math.lcm(a, b)


def exact_div(numerator: Number, denominator: Number) -> int:
    """
    Divide and insist the result is an integer.

    Raises:
        InvariantViolation: the quotient is not integral.
    """
    if denominator == 0:
        raise DomainError("division by zero")
    quotient = Fraction(numerator) / Fraction(denominator)
    if quotient.denominator != 1:
        raise InvariantViolation(
            f"expected exact division, got {numerator}/{denominator} = {quotient}"
        )
    return quotient.numerator


def as_integer(value: Number, what: str = "value") -> int:
    """Return value as an int, raising InvariantViolation if it is fractional."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise InvariantViolation(f"{what} is not integral: {value}")
    return value.numerator


def sign_power(sign: int, k: int) -> int:
    """sign**k for sign in {-1, +1}."""
    if sign not in (-1, 1):
        raise DomainError(f"sign must be -1 or +1, got {sign}")
    if sign == 1 or k % 2 == 0:
        return 1
    return -1


def solve_lower_triangular(matrix: Sequence[Sequence[Number]],
                           rhs: Sequence[Number]) -> List[Fraction]:
    """
    Forward substitution over the rationals.

    Args:
        matrix: square lower-triangular matrix with nonzero diagonal
        rhs: right-hand side of the same length

    Returns:
        The exact solution as a list of Fractions.
    """
    size = len(rhs)
    if len(matrix) != size:
        raise DomainError("matrix and right-hand side sizes differ")
    solution: List[Fraction] = []
    for row in range(size):
        pivot = matrix[row][row]
        if pivot == 0:
            raise InvariantViolation(f"singular triangular system at row {row}")
        acc = Fraction(rhs[row])
        for col in range(row):
            acc -= matrix[row][col] * solution[col]
        solution.append(acc / pivot)
    return solution


def newton_coefficients(nodes: Sequence[int], values: Sequence[int]) -> List[Fraction]:
    """
    Newton divided differences f[y_0], f[y_0, y_1], ..., f[y_0, ..., y_d].

    Nodes must be pairwise distinct.
    """
    if len(nodes) != len(values):
        raise DomainError("nodes and values must have the same length")
    table = [Fraction(v) for v in values]
    for order in range(1, len(nodes)):
        for i in range(len(nodes) - 1, order - 1, -1):
            gap = nodes[i] - nodes[i - order]
            if gap == 0:
                raise DomainError(f"repeated interpolation node {nodes[i]}")
            table[i] = (table[i] - table[i - 1]) / gap
    return table

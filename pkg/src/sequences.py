"""
Generalized Delannoy (Schmidt) and Schröder polynomial families.
"""

import logging
from enum import Enum
from functools import lru_cache

from src.IntPoly import IntPoly
from src.exact_math import DomainError, binomial, catalan

logger = logging.getLogger(__name__)


class FamilyId(str, Enum):
    """The two polynomial families; values are the CLI spellings."""

    D = "D"
    S = "S"

    @classmethod
    def parse(cls, value: str) -> "FamilyId":
        try:
            return cls(str(value).upper())
        except ValueError:
            raise DomainError(f"unknown family {value!r}, expected D or S")


def _check_bounds(n: int, h: int) -> None:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if h < 1:
        raise DomainError(f"h must be at least 1, got {h}")


def delannoy_poly(n: int, h: int) -> IntPoly:
    """sum_{k=0}^{n} binom(n,k)^h binom(n+k,k)^h x^k."""
    _check_bounds(n, h)
    return IntPoly(
        (binomial(n, k) * binomial(n + k, k)) ** h for k in range(n + 1)
    )


def delannoy_poly_central_form(n: int, h: int) -> IntPoly:
    """The same polynomial written as sum binom(n+k,2k)^h binom(2k,k)^h x^k."""
    _check_bounds(n, h)
    return IntPoly(
        (binomial(n + k, 2 * k) * binomial(2 * k, k)) ** h for k in range(n + 1)
    )


def schroder_poly(n: int, h: int) -> IntPoly:
    """sum_{k=0}^{n} binom(n+k,2k)^h C_k^h x^k."""
    _check_bounds(n, h)
    return IntPoly(
        (binomial(n + k, 2 * k) * catalan(k)) ** h for k in range(n + 1)
    )


def central_delannoy(n: int) -> int:
    return delannoy_poly(n, 1).eval_int(1)


def large_schroder(n: int) -> int:
    return schroder_poly(n, 1).eval_int(1)


@lru_cache(maxsize=None)
def family_poly(family: FamilyId, n: int, h: int) -> IntPoly:
    """Memoized P_n^(h)(x) for the chosen family."""
    family = FamilyId(family)
    if family is FamilyId.D:
        poly = delannoy_poly(n, h)
    else:
        poly = schroder_poly(n, h)
    logger.debug(f"Built {family.value}_{n}^({h}) of degree {poly.degree}")
    return poly


@lru_cache(maxsize=None)
def family_power(family: FamilyId, n: int, h: int, m: int) -> IntPoly:
    """Memoized P_n^(h)(x)^m."""
    return family_poly(family, n, h).pow(m)

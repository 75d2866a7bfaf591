import pytest

from src.IntPoly import IntPoly
from src.exact_math import DomainError
from src.sequences import (
    FamilyId,
    central_delannoy,
    delannoy_poly,
    delannoy_poly_central_form,
    family_poly,
    family_power,
    large_schroder,
    schroder_poly,
)


def test_central_delannoy_numbers():
    assert [central_delannoy(n) for n in range(5)] == [1, 3, 13, 63, 321]


def test_large_schroder_numbers():
    assert [large_schroder(n) for n in range(5)] == [1, 2, 6, 22, 90]


def test_delannoy_poly_examples():
    assert delannoy_poly(0, 1) == IntPoly([1])
    assert delannoy_poly(2, 1).render() == "1 + 6*x + 6*x^2"
    assert delannoy_poly(1, 3) == IntPoly([1, 8])


def test_schroder_poly_examples():
    assert schroder_poly(1, 1) == IntPoly([1, 1])
    assert schroder_poly(2, 1) == IntPoly([1, 3, 2])
    assert schroder_poly(2, 2) == IntPoly([1, 9, 4])


def test_two_delannoy_forms_agree():
    for n in range(16):
        for h in range(1, 4):
            assert delannoy_poly(n, h) == delannoy_poly_central_form(n, h)


def test_degree_is_n():
    for n in range(12):
        for h in range(1, 4):
            assert delannoy_poly(n, h).degree == n
            assert schroder_poly(n, h).degree == n


@pytest.mark.parametrize("n, h", [(-1, 1), (2, 0)])
def test_out_of_domain(n, h):
    with pytest.raises(DomainError):
        delannoy_poly(n, h)
    with pytest.raises(DomainError):
        schroder_poly(n, h)


def test_family_parse():
    assert FamilyId.parse("d") is FamilyId.D
    assert FamilyId.parse("S") is FamilyId.S
    with pytest.raises(DomainError):
        FamilyId.parse("X")


def test_family_poly_dispatch():
    assert family_poly(FamilyId.D, 3, 2) == delannoy_poly(3, 2)
    assert family_poly(FamilyId.S, 3, 2) == schroder_poly(3, 2)
    assert family_poly("S", 3, 2) == schroder_poly(3, 2)


@pytest.mark.parametrize("h", [1, 2, 3])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_family_power_at_one(h, m):
    assert family_power(FamilyId.D, 1, h, m) == IntPoly([1, 2 ** h]).pow(m)
    assert family_power(FamilyId.S, 1, h, m) == IntPoly([1, 1]).pow(m)

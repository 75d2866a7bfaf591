import pickle
import random

import pytest

from src.IntPoly import IntPoly, NotDivisibleError, poly_sum
from src.exact_math import DomainError


def random_poly(rng: random.Random) -> IntPoly:
    degree = rng.randint(-1, 8)
    return IntPoly(rng.randint(-1000, 1000) for _ in range(degree + 1))


@pytest.fixture
def corpus():
    rng = random.Random(20240917)
    return [(random_poly(rng), random_poly(rng), random_poly(rng), rng.randint(-5, 5))
            for _ in range(200)]


def test_normalization():
    assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPoly([0, 0]).is_zero()
    assert IntPoly().degree == -1
    assert IntPoly([5]).degree == 0


def test_examples():
    one_plus_x = IntPoly([1, 1])
    assert one_plus_x.mul(IntPoly([1, -1])) == IntPoly([1, 0, -1])
    assert IntPoly([1, 2]).pow(2) == IntPoly([1, 4, 4])
    assert IntPoly([3, 7, 1]).pow(0) == IntPoly.constant(1)
    assert IntPoly().pow(0) == 1


def test_pow_negative():
    with pytest.raises(DomainError):
        IntPoly([1, 1]).pow(-1)


def test_eval_int():
    assert IntPoly([1, 6, 6]).eval_int(1) == 13
    assert IntPoly().eval_int(7) == 0
    assert IntPoly([1, 3, 2]).eval_int(1) == 6
    assert IntPoly([1, 3, 2])(2) == 15


def test_ring_axioms(corpus):
    for p, q, r, _ in corpus:
        assert p.add(q) == q.add(p)
        assert p.mul(q) == q.mul(p)
        assert p.add(q).add(r) == p.add(q.add(r))
        assert p.mul(q).mul(r) == p.mul(q.mul(r))
        assert p.mul(q.add(r)) == p.mul(q).add(p.mul(r))
        assert p.sub(p).is_zero()


def test_eval_is_homomorphism(corpus):
    for p, q, _, t in corpus:
        assert p.mul(q).eval_int(t) == p.eval_int(t) * q.eval_int(t)
        assert p.add(q).eval_int(t) == p.eval_int(t) + q.eval_int(t)


def test_pow_matches_repeated_multiplication(corpus):
    for p, _, _, _ in corpus[:30]:
        acc = IntPoly.constant(1)
        for m in range(5):
            assert p.pow(m) == acc
            acc = acc.mul(p)


def test_divexact_inverts_scalar_mul(corpus):
    for p, _, _, d in corpus:
        if d == 0:
            continue
        assert p.scalar_mul(d).divexact_by(d) == p


def test_divisible_by():
    p = IntPoly([2, 4, 6])
    assert p.divisible_by(2) == (True, None)
    assert p.divisible_by(4) == (False, (0, 2))
    assert IntPoly([4, 6]).divisible_by(4) == (False, (1, 6))
    assert IntPoly([-24, 48]).divisible_by(24) == (True, None)


def test_divisible_by_zero():
    with pytest.raises(DomainError):
        IntPoly([1]).divisible_by(0)


def test_divexact_by():
    assert IntPoly([36, 192, 180]).divexact_by(12) == IntPoly([3, 16, 15])


def test_divexact_by_carries_witness():
    with pytest.raises(NotDivisibleError) as info:
        IntPoly([36, 192, 180]).divexact_by(24)
    assert info.value.witness == (0, 36)
    assert info.value.divisor == 24


def test_not_divisible_error_pickles():
    error = pickle.loads(pickle.dumps(NotDivisibleError(24, (0, 36))))
    assert error.witness == (0, 36) and error.divisor == 24
    assert "x^0" in str(error)


def test_render():
    assert IntPoly([1, 6, 6]).render() == "1 + 6*x + 6*x^2"
    assert IntPoly([0, -1, 0, 3]).render() == "-1*x + 3*x^3"
    assert IntPoly([2, -5]).render() == "2 - 5*x"
    assert str(IntPoly()) == "0"


def test_operators():
    p = IntPoly([1, 1])
    assert p + 1 == IntPoly([2, 1])
    assert 2 * p == IntPoly([2, 2])
    assert p * p == p ** 2
    assert -p == IntPoly([-1, -1])
    assert 1 - p == IntPoly([0, -1])
    assert poly_sum([p, p, p]) == 3 * p

"""
Dense univariate polynomials over the integers.
"""

import logging
from typing import Iterable, List, Optional, Sequence, Tuple

from src.exact_math import DomainError, InvariantViolation

logger = logging.getLogger(__name__)

Witness = Tuple[int, int]


class NotDivisibleError(InvariantViolation):
    """A polynomial was divided by a scalar that does not divide it."""

    def __init__(self, divisor: int, witness: Witness):
        self.divisor = divisor
        self.witness = witness
        index, value = witness
        super().__init__(
            f"coefficient of x^{index} ({value}) is not divisible by {divisor}"
        )

    def __reduce__(self):
        return type(self), (self.divisor, self.witness)


class IntPoly:
    """
    Immutable dense polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Trailing zeros are stripped, so the zero polynomial has no coefficients
    and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def constant(cls, value: int) -> "IntPoly":
        return cls((value,))

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, index: int) -> int:
        if 0 <= index < len(self._coeffs):
            return self._coeffs[index]
        return 0

    # Ring operations

    def add(self, other: "IntPoly") -> "IntPoly":
        size = max(len(self._coeffs), len(other._coeffs))
        return IntPoly(self.coefficient(i) + other.coefficient(i) for i in range(size))

    def neg(self) -> "IntPoly":
        return IntPoly(-c for c in self._coeffs)

    def sub(self, other: "IntPoly") -> "IntPoly":
        return self.add(other.neg())

    def scalar_mul(self, c: int) -> "IntPoly":
        if c == 0:
            return IntPoly()
        return IntPoly(c * v for v in self._coeffs)

    def mul(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero() or other.is_zero():
            return IntPoly()
        product: List[int] = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return IntPoly(product)

    def pow(self, m: int) -> "IntPoly":
        """Square-and-multiply power; ``pow(p, 0)`` is the constant 1."""
        if m < 0:
            raise DomainError(f"polynomial exponent must be nonnegative, got {m}")
        result = IntPoly.constant(1)
        base = self
        while m:
            if m & 1:
                result = result.mul(base)
            m >>= 1
            if m:
                base = base.mul(base)
        return result

    def eval_int(self, t: int) -> int:
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    # Scalar divisibility

    def divisible_by(self, d: int) -> Tuple[bool, Optional[Witness]]:
        """
        Test whether d divides every coefficient.

        Returns:
            ``(True, None)`` or ``(False, (index, value))`` for the lowest
            offending coefficient.
        """
        if d == 0:
            raise DomainError("divisor must be nonzero")
        for index, value in enumerate(self._coeffs):
            if value % d:
                return False, (index, value)
        return True, None

    def divexact_by(self, d: int) -> "IntPoly":
        ok, witness = self.divisible_by(d)
        if not ok:
            raise NotDivisibleError(d, witness)
        return IntPoly(c // d for c in self._coeffs)

    # Python protocol

    def __add__(self, other: "IntPoly") -> "IntPoly":
        return self.add(_coerce(other))

    __radd__ = __add__

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self.sub(_coerce(other))

    def __rsub__(self, other: "IntPoly") -> "IntPoly":
        return _coerce(other).sub(self)

    def __neg__(self) -> "IntPoly":
        return self.neg()

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return self.scalar_mul(other)
        return self.mul(other)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "IntPoly":
        return self.pow(m)

    def __call__(self, t: int) -> int:
        return self.eval_int(t)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == IntPoly.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self._coeffs)})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        """Text form ``1 + 6*x + 6*x^2``; zero terms are skipped."""
        terms: List[str] = []
        for index, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if index == 0:
                body = str(abs(c))
            elif index == 1:
                body = f"{abs(c)}*x"
            else:
                body = f"{abs(c)}*x^{index}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def _coerce(value) -> IntPoly:
    if isinstance(value, IntPoly):
        return value
    if isinstance(value, int):
        return IntPoly.constant(value)
    raise TypeError(f"cannot combine IntPoly with {type(value).__name__}")


def poly_sum(polys: Sequence[IntPoly]) -> IntPoly:
    total = IntPoly()
    for p in polys:
        total = total.add(p)
    return total

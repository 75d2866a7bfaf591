"""
Finite verification of the lemma-level identities behind the divisibility
theorems: telescoping certificates, the Pfaff-Saalschütz special case,
the w/H parities, the parity lemmas over reduction coefficients, and the
quotient families F_u, G_u.

Each verifier returns a CheckResult. A failed check is data (``passed`` is
False and ``witness`` names the first failing point); only broken
preconditions raise.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Dict, Iterable, List, Optional

from src.CoeffTable import (
    CoeffTable,
    a_pair_quotient_form,
    catalan_basis,
    central_basis,
    default_table,
    interpolation_nodes,
)
from src.IntPoly import IntPoly
from src.TheoremChecker import SumSpec, weighted_power_sum
from src.exact_math import (
    DomainError,
    binomial,
    catalan,
    exact_div,
    rising_factorial,
    sign_power,
)
from src.sequences import FamilyId

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """Outcome of one identity check at one parameter point."""
    check: str
    params: Dict[str, Any]
    passed: bool
    witness: Optional[Dict[str, Any]] = None
    detail: Optional[str] = None

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"failed check {self.check} must carry a witness")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CheckResult":
        return cls(**data)


def _result(check: str, params: Dict[str, Any],
            witness: Optional[Dict[str, Any]] = None,
            detail: Optional[str] = None) -> CheckResult:
    passed = witness is None
    if not passed:
        logger.error(f"Check {check} failed at {params}: {witness}")
    return CheckResult(check, dict(params), passed, witness, detail)


def _first_mismatch(points: Iterable[int], lhs: Callable[[int], Any],
                    rhs: Callable[[int], Any], name: str = "k") -> Optional[Dict[str, Any]]:
    for point in points:
        left, right = lhs(point), rhs(point)
        if left != right:
            return {name: point, "lhs": left, "rhs": right}
    return None


def _tuples(length: int, top: int, total: int) -> Iterable[tuple]:
    """Ordered tuples in [0, top]^length with the given sum."""
    for candidate in product(range(top + 1), repeat=length):
        if sum(candidate) == total:
            yield candidate


# Telescoping certificates

def telescope_summand(sign: int, big_l: int, k: int) -> int:
    """sign^k (2k+1) binom(k+L, 2L)."""
    return sign_power(sign, k) * (2 * k + 1) * binomial(k + big_l, 2 * big_l)


def telescope_certificate(sign: int, big_l: int, k: int) -> Fraction:
    """Antidifference of telescope_summand in k."""
    base = (k - big_l) * binomial(k + big_l, 2 * big_l)
    if sign == -1:
        return Fraction(sign_power(-1, k + 1) * base)
    return Fraction(k * base, big_l + 1)


def summed_closed_form(sign: int, big_l: int, n: int) -> Fraction:
    """sum_{k=0}^{n} telescope_summand(sign, L, k) in closed form."""
    if sign == -1:
        return Fraction(sign_power(-1, n) * (n + 1 + big_l) * binomial(n + big_l, 2 * big_l))
    return Fraction((n + 1) * (n + 1 + big_l) * binomial(n + big_l, 2 * big_l), big_l + 1)


def _check_sign(sign: int) -> None:
    if sign not in (-1, 1):
        raise DomainError(f"sign must be -1 or +1, got {sign}")


def verify_telescope(sign: int, l: int, u: int, k_max: int) -> CheckResult:
    """summand(k) = G(k+1) - G(k) for k in [0, k_max], with G integral."""
    _check_sign(sign)
    big_l = l + u
    params = {"sign": sign, "l": l, "u": u, "k_max": k_max}
    for k in range(k_max + 2):
        value = telescope_certificate(sign, big_l, k)
        if value.denominator != 1:
            return _result("telescope", params, {"k": k, "certificate": str(value)},
                           "certificate division is not exact")
    witness = _first_mismatch(
        range(k_max + 1),
        lambda k: telescope_summand(sign, big_l, k),
        lambda k: telescope_certificate(sign, big_l, k + 1) - telescope_certificate(sign, big_l, k),
    )
    return _result("telescope", params, witness)


def verify_summed(sign: int, l: int, u: int, n_max: int) -> CheckResult:
    """Partial sums over k = 0..n agree with the closed form for n in [0, n_max]."""
    _check_sign(sign)
    big_l = l + u
    params = {"sign": sign, "l": l, "u": u, "n_max": n_max}
    partial = 0
    for n in range(n_max + 1):
        partial += telescope_summand(sign, big_l, n)
        closed = summed_closed_form(sign, big_l, n)
        if closed.denominator != 1:
            return _result("summed", params, {"n": n, "closed": str(closed)},
                           "closed-form division is not exact")
        if partial != closed:
            return _result("summed", params, {"n": n, "lhs": partial, "rhs": closed.numerator})
    return _result("summed", params)


def _telescope_lemma(check: str, sign: int, l: int, u: int, k_max: int) -> CheckResult:
    params = {"l": l, "u": u, "k_max": k_max}
    for partial in (verify_telescope(sign, l, u, k_max), verify_summed(sign, l, u, k_max)):
        if not partial.passed:
            return CheckResult(check, params, False, partial.witness, partial.check)
    return CheckResult(check, params, True)


def verify_alternating_telescope(l: int, u: int, k_max: int) -> CheckResult:
    return _telescope_lemma("2.3", -1, l, u, k_max)


def verify_positive_telescope(l: int, u: int, k_max: int) -> CheckResult:
    return _telescope_lemma("3.1", 1, l, u, k_max)


# n+2 quotient

def verify_n_plus_two_quotient(n: int, l: int) -> CheckResult:
    """2 binom(n-1,l-1) binom(n+l+1,l) / (n+2) is an integer with a subtraction form."""
    if n < 1 or l < 1:
        raise DomainError(f"need n, l >= 1, got n={n}, l={l}")
    params = {"n": n, "l": l}
    quotient = Fraction(2 * binomial(n - 1, l - 1) * binomial(n + l + 1, l), n + 2)
    if quotient.denominator != 1:
        return _result("2.4", params, {"quotient": str(quotient)}, "not an integer")
    decomposition = (binomial(n - 1, l - 1) * binomial(n + l + 1, l)
                     - binomial(n, l) * binomial(n + l + 1, n + 2))
    if quotient != decomposition:
        return _result("2.4", params, {"lhs": quotient.numerator, "rhs": decomposition})
    return _result("2.4", params)


# C parity and closed forms

def c0_closed_form(l: int, a: int, table: Optional[CoeffTable] = None) -> int:
    """sum_{u>=1} (-1)^(u-1) C_u prod_{v=1}^{u} m_v, valid for a >= 1."""
    table = table or default_table()
    c = table.c_coeffs(l, a)
    nodes = interpolation_nodes(l, a)
    total = 0
    for u in range(1, a + 1):
        prod_nodes = 1
        for v in range(u):
            prod_nodes *= nodes[v]
        total += sign_power(-1, u - 1) * c[u] * prod_nodes
    return total


def c1_closed_form(l: int, a: int, table: Optional[CoeffTable] = None) -> int:
    """sum_{u>=2} (-1)^u C_u sum_j prod_{v != j} m_v, valid for a > 1."""
    table = table or default_table()
    c = table.c_coeffs(l, a)
    nodes = interpolation_nodes(l, a)
    total = 0
    for u in range(2, a + 1):
        inner = 0
        for j in range(u):
            term = 1
            for v in range(u):
                if v != j:
                    term *= nodes[v]
            inner += term
        total += sign_power(-1, u) * c[u] * inner
    return total


def verify_c_parity(l: int, a: int) -> CheckResult:
    """
    C_0(l,a)/(l(l+1)) is 1 for a = 1 and even for a >= 2, where C_1(l,a) is
    even too; C_0 and C_1 also match their closed forms in the higher C_u.
    """
    if l < 1 or a < 1:
        raise DomainError(f"need l, a >= 1, got l={l}, a={a}")
    params = {"l": l, "a": a}
    table = default_table()
    c = table.c_coeffs(l, a)
    if c[0] % (l * (l + 1)):
        return _result("2.5", params, {"C0": c[0]}, "l(l+1) does not divide C_0")
    reduced = c[0] // (l * (l + 1))
    if c0_closed_form(l, a, table) != c[0]:
        return _result("2.5", params, {"C0": c[0], "closed": c0_closed_form(l, a, table)})
    if a == 1:
        if reduced != 1 or c[1] != 1:
            return _result("2.5", params, {"C0_reduced": reduced, "C1": c[1]})
        return _result("2.5", params)
    if c1_closed_form(l, a, table) != c[1]:
        return _result("2.5", params, {"C1": c[1], "closed": c1_closed_form(l, a, table)})
    if reduced % 2 or c[1] % 2:
        return _result("2.5", params, {"C0_reduced": reduced, "C1": c[1]}, "odd value")
    return _result("2.5", params)


def verify_k_expansion(l: int, a: int, k_max: int) -> CheckResult:
    """k^a (k+1)^a beta_l(k) = sum_u K_u(l,a) binom(k+l+u, 2l+2u) for k in [0, k_max]."""
    params = {"l": l, "a": a, "k_max": k_max}
    table = default_table()
    ks = table.k_coeffs(l, a)
    witness = _first_mismatch(
        range(k_max + 1),
        lambda k: (k * (k + 1)) ** a * central_basis(l, k),
        lambda k: sum(ks[u] * binomial(k + l + u, 2 * (l + u)) for u in range(a + 1)),
    )
    return _result("k-expansion", params, witness)


# b composition parity

def verify_b_composition_parity(M: int, n: int, I: int, l: int) -> CheckResult:
    """sum of B_{i_1..i_2M}^(l) over i in [0,n]^(2M) with total I is even."""
    if M < 1 or n < 1 or not 0 <= I <= 2 * M * n:
        raise DomainError(f"need M, n >= 1 and 0 <= I <= 2Mn, got M={M}, n={n}, I={I}")
    params = {"M": M, "n": n, "I": I, "l": l}
    table = default_table()
    total = sum(table.b_multi(t, l) for t in _tuples(2 * M, n, I))
    if l < 1:
        logger.warning(f"b composition parity at l = 0 is not asserted; sum is {total}")
        return _result("2.6", params, detail=f"l = 0 not asserted (sum {total})")
    if total % 2:
        return _result("2.6", params, {"sum": total})
    return _result("2.6", params)


# Pfaff-Saalschütz

def verify_pfaff_saalschutz(x: int, y: int, a: int, b: int) -> CheckResult:
    """binom(x+a,b) binom(y+b,a) = sum_i binom(x+y+i,i) binom(y,a-i) binom(x,b-i)."""
    if min(x, y, a, b) < 0:
        raise DomainError(f"arguments must be nonnegative, got {(x, y, a, b)}")
    params = {"x": x, "y": y, "a": a, "b": b}
    lhs = binomial(x + a, b) * binomial(y + b, a)
    rhs = sum(binomial(x + y + i, i) * binomial(y, a - i) * binomial(x, b - i)
              for i in range(a + 1))
    if lhs != rhs:
        return _result("pfaff", params, {"lhs": lhs, "rhs": rhs})
    return _result("pfaff", params)


# w and H

def w_val(n: int, l: int) -> int:
    """w(n,l) = binom(n-1,l-1) binom(n+l,l) - binom(n,l) binom(n+l,l-1)."""
    if n < 1 or l < 1:
        raise DomainError(f"w(n, l) needs n, l >= 1, got ({n}, {l})")
    return binomial(n - 1, l - 1) * binomial(n + l, l) - binomial(n, l) * binomial(n + l, l - 1)


def w_val_quotient_form(n: int, l: int) -> Fraction:
    return Fraction(binomial(n - 1, l - 1) * binomial(n + l, l - 1), l)


def h_val(n: int, l: int) -> int:
    """H(n,l) = w(n,l+1) + w(n+1,l+1)."""
    if l < 0:
        raise DomainError(f"H(n, l) needs l >= 0, got {l}")
    return w_val(n, l + 1) + w_val(n + 1, l + 1)


def verify_w_partial_sum_parity(n: int, b: int) -> CheckResult:
    """sum_{l=0}^{2b} w(n,l+1) is odd and sum_{l=0}^{2b} H(n,l) is even."""
    if n < 1 or b < 0:
        raise DomainError(f"need n >= 1, b >= 0, got n={n}, b={b}")
    params = {"n": n, "b": b}
    for l in range(1, 2 * b + 2):
        if w_val_quotient_form(n, l) != w_val(n, l):
            return _result("3.4", params, {"l": l, "lhs": w_val(n, l),
                                           "rhs": str(w_val_quotient_form(n, l))})
    w_sum = sum(w_val(n, l + 1) for l in range(2 * b + 1))
    h_sum = sum(h_val(n, l) for l in range(2 * b + 1))
    if w_sum % 2 != 1:
        return _result("3.4", params, {"w_sum": w_sum}, "w-sum is even")
    if h_sum % 2:
        return _result("3.4", params, {"h_sum": h_sum}, "H-sum is odd")
    return _result("3.4", params)


def verify_w_pair(n: int, b: int) -> CheckResult:
    """w(n,2b) + w(n,2b+1) = binom(n+2b, n-2b) C_2b, an even number."""
    if n < 1 or b < 1:
        raise DomainError(f"need n, b >= 1, got n={n}, b={b}")
    params = {"n": n, "b": b}
    lhs = w_val(n, 2 * b) + w_val(n, 2 * b + 1)
    rhs = binomial(n + 2 * b, n - 2 * b) * catalan(2 * b)
    if lhs != rhs:
        return _result("w-pair", params, {"lhs": lhs, "rhs": rhs})
    if lhs % 2:
        return _result("w-pair", params, {"value": lhs}, "odd")
    return _result("w-pair", params)


# Diagonal A parity

def is_mersenne(value: int) -> bool:
    """value = 2^c - 1 for some c >= 1."""
    return value >= 1 and (value + 1) & value == 0


def verify_diagonal_a_parity(J: int) -> CheckResult:
    """A_{J,J}^(l), J <= l <= 2J, is odd exactly when J = 2^c - 1."""
    params = {"J": J}
    table = default_table()
    if J == 0:
        value = table.a_pair(0, 0, 0)
        logger.warning(f"Diagonal parity at J = 0 is outside its statement; A_00^(0) = {value}")
        return _result("3.5", params, detail=f"J = 0 not asserted (A = {value})")
    if J < 0:
        raise DomainError(f"J must be nonnegative, got {J}")
    expected_odd = is_mersenne(J)
    for l in range(J, 2 * J + 1):
        value = table.a_pair(J, J, l)
        first = a_pair_quotient_form(J, J, l)
        second = Fraction(2 * binomial(2 * J - 1, J) * binomial(J, 2 * J - l)
                          * binomial(l + 1, l - J), J + 1)
        if first != value or second != value:
            return _result("3.5", params, {"l": l, "value": value,
                                           "quotient_form": str(first),
                                           "doubled_form": str(second)})
        if (value % 2 == 1) != expected_odd:
            return _result("3.5", params, {"l": l, "value": value},
                           f"expected {'odd' if expected_odd else 'even'}")
    return _result("3.5", params)


# A total and doubled parity

def verify_a_odd_total_parity(M: int, n: int, I: int, l: int, h: int) -> CheckResult:
    """For odd I, sum over i in [0,n]^(2M) with total I of A~^(l,h) prod C_i^(h-1) is even."""
    if I % 2 == 0:
        raise DomainError(f"I must be odd, got {I}")
    if M < 1 or n < 1 or h < 1:
        raise DomainError(f"need M, n, h >= 1, got M={M}, n={n}, h={h}")
    params = {"M": M, "n": n, "I": I, "l": l, "h": h}
    table = default_table()
    total = 0
    for t in _tuples(2 * M, n, I):
        weight = 1
        for i in t:
            weight *= catalan(i) ** (h - 1)
        total += table.a_tilde(t, l, h) * weight
    if total % 2:
        return _result("3.6", params, {"sum": total})
    return _result("3.6", params)


def verify_a_doubled_parity(M: int, n: int, I: int, e: int, h: int) -> CheckResult:
    """
    For even I and e,

        sum_{l=0}^{e} H(n,l) sum_{j in [0,n]^M, |j| = I/2} A~_{j,j}^(l,h) (prod C_j^(h-1))^2

    is even.
    """
    if I % 2 or e % 2:
        raise DomainError(f"I and e must be even, got I={I}, e={e}")
    if M < 1 or n < 1 or h < 1:
        raise DomainError(f"need M, n, h >= 1, got M={M}, n={n}, h={h}")
    params = {"M": M, "n": n, "I": I, "e": e, "h": h}
    table = default_table()
    inner: Dict[int, int] = {}
    for j in _tuples(M, n, I // 2):
        weight = 1
        for i in j:
            weight *= catalan(i) ** (h - 1)
        for l, value in table.tilde_row("A", j + j, h).items():
            if l <= e:
                inner[l] = inner.get(l, 0) + value * weight * weight
    total = sum(h_val(n, l) * value for l, value in inner.items())
    if total % 2:
        return _result("3.7", params, {"sum": total})
    return _result("3.7", params)


# Quotient families

QUOTIENT_KINDS = ("F", "Gplus", "Gminus")


def f_value(l: int, a: int, u: int, n: int) -> int:
    """F_u(l,a,n) = K_u (-1)^n (n+1+l+u) binom(n+l+u, 2l+2u)."""
    big_l = l + u
    return (default_table().k_coeff(u, l, a) * sign_power(-1, n)
            * (n + 1 + big_l) * binomial(n + big_l, 2 * big_l))


def g_plus_value(l: int, a: int, u: int, n: int) -> Fraction:
    big_l = l + u
    return Fraction(default_table().k_coeff(u, l, a) * (n + 1) * (n + 1 + big_l)
                    * binomial(n + big_l, 2 * big_l), (l + 1) * (big_l + 1))


def g_minus_value(l: int, a: int, u: int, n: int) -> Fraction:
    big_l = l + u
    return Fraction(default_table().k_coeff(u, l, a) * (n + 1 + big_l)
                    * binomial(n + big_l, 2 * big_l), l + 1)


def _displayed_quotient(kind: str, l: int, a: int, u: int, n: int) -> Fraction:
    """The binomial product the proofs give for each quotient."""
    c = default_table().c_coeffs(l, a)
    big_l = l + u
    if kind == "F":
        if u == 0:
            # 2 F_0 / (n(n+1)(n+2))
            return (sign_power(-1, n) * Fraction(c[0], l)
                    * Fraction(2 * binomial(n + l + 1, l) * binomial(n - 1, l - 1), n + 2))
        return Fraction(sign_power(-1, n) * c[u] * binomial(n + 1 + big_l, n + 2)
                        * binomial(n - 1, n - big_l) * rising_factorial(l + 1, u - 1) ** 2)
    if kind == "Gplus":
        if u == 0:
            return Fraction(c[0], l * (l + 1)) * binomial(n + l + 1, l + 1) * binomial(n - 1, l - 1)
        if u == 1:
            return Fraction(c[1] * binomial(n + l + 2, l + 2) * binomial(n - 1, l))
        return Fraction(c[u] * binomial(n + 1 + big_l, big_l + 1) * binomial(n - 1, big_l - 1)
                        * rising_factorial(l + 1, u) * rising_factorial(l + 2, u - 2))
    if u == 0:
        return Fraction(c[0], l * (l + 1)) * binomial(n + l + 1, l) * binomial(n - 1, l - 1)
    if u == 1:
        return Fraction(c[1] * binomial(n + l + 2, l + 1) * binomial(n - 1, l))
    return Fraction(c[u] * binomial(n + 1 + big_l, big_l - 1) * binomial(n - 1, big_l - 1)
                    * rising_factorial(l + 1, u - 1) * rising_factorial(l + 2, u - 2))


def verify_quotients(kind: str, l: int, a: int, u: int, n: int) -> CheckResult:
    """
    Exact quotients of F_u and G_u^(+-1) by n(n+1) or n(n+1)(n+2).

    Args:
        kind: "F", "Gplus" or "Gminus"
        l, a, u, n: with 0 <= u <= a, l >= 1, n >= 1

    Returns:
        CheckResult; the witness names the failing quotient.
    """
    if kind not in QUOTIENT_KINDS:
        raise DomainError(f"unknown quotient kind {kind!r}")
    if l < 1 or n < 1 or not 0 <= u <= a:
        raise DomainError(f"need l, n >= 1 and 0 <= u <= a, got l={l}, a={a}, u={u}, n={n}")
    params = {"kind": kind, "l": l, "a": a, "u": u, "n": n}
    n2 = n * (n + 1)
    n3 = n2 * (n + 2)

    # (label, quotient, displayed closed form or None, must be integral)
    checks: List[tuple] = []
    displayed = _displayed_quotient(kind, l, a, u, n)
    if kind == "F":
        value = Fraction(f_value(l, a, u, n))
        if u == 0:
            checks.append(("F0/(n(n+1))", value / n2, None, True))
            checks.append(("2F0/(n(n+1)(n+2))", 2 * value / n3, displayed, True))
        else:
            checks.append(("Fu/(n(n+1)(n+2))", value / n3, displayed, True))
    elif kind == "Gplus":
        value = g_plus_value(l, a, u, n)
        checks.append(("Gu/(n(n+1))", value / n2, displayed, True))
    else:
        value = g_minus_value(l, a, u, n)
        if u <= 1:
            checks.append(("Gu/(n(n+1))", value / n2, displayed, True))
        else:
            checks.append(("Gu/(n(n+1)(n+2))", value / n3, displayed, True))
        if a == 1:
            paired = (g_minus_value(l, 1, 0, n) + g_minus_value(l, 1, 1, n)) / n3
            checks.append(("(G0+G1)/(n(n+1)(n+2))", paired, Fraction(h_val(n, l), 2), False))

    for label, quotient, expected, integral in checks:
        if integral and quotient.denominator != 1:
            return _result("quotients", params, {"quotient": label, "value": str(quotient)},
                           "not an integer")
        if expected is not None and quotient != expected:
            return _result("quotients", params, {"quotient": label, "lhs": str(quotient),
                                                 "rhs": str(expected)})
    return _result("quotients", params)


# Reduction identities

def verify_reduction_family(kind: str, m: int, top: int, h: int, k_max: int) -> CheckResult:
    """
    Pointwise expansion identities for every sorted index tuple of length m
    with entries in [0, top]:

        prod_j binom(k+i_j,2i_j)^h w_{i_j} = sum_l tilde^(l,h) basis_l(k)

    where w is binom(2i,i) and the basis is beta for kind "B", and w is C_i
    with the Catalan basis for kind "A". At h = 1 the m-fold table is used
    directly; for h > 1 the tilde table is also compared with its defining
    t-sum.
    """
    if kind not in ("A", "B"):
        raise DomainError(f"reduction kind must be 'A' or 'B', got {kind!r}")
    if m < 1 or h < 1 or top < 0:
        raise DomainError(f"need m, h >= 1 and top >= 0, got m={m}, h={h}, top={top}")
    params = {"kind": kind, "m": m, "top": top, "h": h, "k_max": k_max}
    table = default_table()
    basis = central_basis if kind == "B" else catalan_basis

    def factor(i: int, k: int) -> int:
        weight = binomial(2 * i, i) if kind == "B" else catalan(i)
        return binomial(k + i, 2 * i) ** h * weight

    seen = set()
    for indices in product(range(top + 1), repeat=m):
        key = tuple(sorted(indices))
        if key in seen:
            continue
        seen.add(key)
        row = table.multi_row(kind, key) if h == 1 else table.tilde_row(kind, key, h)
        if h > 1:
            defined = table.tilde_row_by_definition(kind, key, h)
            for l in sorted(set(row) | set(defined)):
                if row.get(l, 0) != defined.get(l, 0):
                    return _result("reduction", params, {"indices": list(key), "l": l,
                                                         "lhs": row.get(l, 0),
                                                         "rhs": defined.get(l, 0)})
        for k in range(k_max + 1):
            lhs = 1
            for i in key:
                lhs *= factor(i, k)
            rhs = sum(value * basis(l, k) for l, value in row.items())
            if lhs != rhs:
                return _result("reduction", params, {"indices": list(key), "k": k,
                                                     "lhs": lhs, "rhs": rhs})
    return _result("reduction", params)


def reduction_sum(family: FamilyId, n: int, h: int, m: int, a: int, eps: int) -> IntPoly:
    """
    sum_{k=1}^{n} eps^k k^a (k+1)^a (2k+1) P_k^(h)(x)^m rebuilt from the
    reduction tables, the K expansion and the telescoped closed forms.
    """
    family = FamilyId(family)
    _check_sign(eps)
    table = default_table()
    kind = "B" if family is FamilyId.D else "A"

    closed_cache: Dict[int, int] = {}

    def telescoped(l: int) -> int:
        # sum_{k=0}^{n} eps^k k^a (k+1)^a (2k+1) basis_l(k)
        if l not in closed_cache:
            total = Fraction(0)
            for u, k_u in enumerate(table.k_coeffs(l, a)):
                total += k_u * summed_closed_form(eps, l + u, n)
            if kind == "A":
                total /= l + 1
            closed_cache[l] = exact_div(total, 1)
        return closed_cache[l]

    coeffs = [0] * (n * m + 1)
    for indices in product(range(n + 1), repeat=m):
        weight = 1
        for i in indices:
            weight *= (binomial(2 * i, i) if kind == "B" else catalan(i)) ** (h - 1)
        row = table.tilde_row(kind, indices, h)
        coeffs[sum(indices)] += weight * sum(v * telescoped(l) for l, v in row.items())
    return IntPoly(coeffs)


def verify_reduction_path(family: str, n: int, h: int, m: int, a: int, eps: int) -> CheckResult:
    """The reduction-built weighted power sum equals the directly summed one."""
    family = FamilyId.parse(family)
    params = {"family": family.value, "n": n, "h": h, "m": m, "a": a, "eps": eps}
    direct = weighted_power_sum(SumSpec(family, n, h, m, a, eps))
    reduced = reduction_sum(family, n, h, m, a, eps)
    if direct != reduced:
        size = max(direct.degree, reduced.degree) + 1
        for index in range(size):
            if direct.coefficient(index) != reduced.coefficient(index):
                return _result("path", params, {"index": index,
                                                "lhs": direct.coefficient(index),
                                                "rhs": reduced.coefficient(index)})
    return _result("path", params)

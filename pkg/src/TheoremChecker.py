"""
Weighted power sums of the Delannoy/Schröder families and their Z[x]
divisibility checks.

Sums here are built directly from the polynomial families; nothing in this
module consults the reduction tables.
"""

import logging
from dataclasses import asdict, dataclass, field, replace
from typing import Any, Dict, Iterable, List, Optional

from src.IntPoly import IntPoly, Witness, poly_sum
from src.exact_math import DomainError, InvariantViolation, gcd_many, sign_power
from src.sequences import FamilyId, family_power

logger = logging.getLogger(__name__)

THEOREM_IDS = ("2.1", "2.2", "3.1", "5.3", "cg")
PROBE_IDS = ("2.1", "2.2", "3.1", "5.3")


@dataclass(frozen=True)
class SumSpec:
    """Parameters naming one weighted power sum."""
    family: FamilyId
    n: int
    h: int = 1
    m: int = 1
    a: int = 1
    eps: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", FamilyId(self.family))
        if self.n < 1 or self.h < 1 or self.m < 1:
            raise DomainError(f"n, h, m must be positive: {self}")
        if self.a < 0:
            raise DomainError(f"a must be nonnegative: {self}")
        if self.eps not in (-1, 1):
            raise DomainError(f"eps must be -1 or +1: {self}")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SumSpec":
        return cls(**data)

    def to_params(self) -> Dict[str, Any]:
        params = asdict(self)
        params["family"] = self.family.value
        return params


@dataclass
class DivisibilityReport:
    """Outcome of checking that ``modulus`` divides a weighted power sum."""
    spec: SumSpec
    check: str
    modulus: int
    passed: bool
    witness: Optional[Witness] = None
    quotient_degree: int = -1
    partial: Dict[str, bool] = field(default_factory=dict)
    detail: Optional[str] = None

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if self.passed != (self.witness is None):
            raise ValueError("a report passes exactly when it has no witness")


def weighted_power_sum(spec: SumSpec, start: int = 1, stop: Optional[int] = None) -> IntPoly:
    """
    sum_{k=start}^{stop} eps^k k^a (k+1)^a (2k+1) P_k^(h)(x)^m, with stop
    defaulting to n.
    """
    stop = spec.n if stop is None else stop
    terms = []
    for k in range(start, stop + 1):
        weight = sign_power(spec.eps, k) * (k * (k + 1)) ** spec.a * (2 * k + 1)
        if weight:
            terms.append(family_power(spec.family, k, spec.h, spec.m).scalar_mul(weight))
    return poly_sum(terms)


def _triple(n: int) -> int:
    return n * (n + 1) * (n + 2)


def _partial_checks(poly: IntPoly, n: int) -> Dict[str, bool]:
    return {label: poly.divisible_by(d)[0]
            for label, d in (("n", n), ("n+1", n + 1), ("n+2", n + 2))}


def _report(spec: SumSpec, check: str, modulus: int, poly: IntPoly,
            partial: bool = True, detail: Optional[str] = None) -> DivisibilityReport:
    ok, witness = poly.divisible_by(modulus)
    report = DivisibilityReport(
        spec=spec,
        check=check,
        modulus=modulus,
        passed=ok,
        witness=witness,
        quotient_degree=poly.degree,
        partial=_partial_checks(poly, spec.n) if partial else {},
        detail=detail,
    )
    if ok:
        logger.debug(f"{check} {spec.to_params()}: modulus {modulus} divides the sum")
    else:
        logger.error(f"{check} {spec.to_params()}: modulus {modulus} fails at "
                     f"x^{witness[0]} (coefficient {witness[1]})")
    return report


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise DomainError(message)


def _require_weighted(spec: SumSpec) -> None:
    _require(spec.a >= 1, f"theorem checks need a >= 1, got a={spec.a}")


def delannoy_modulus(spec: SumSpec) -> int:
    return _triple(spec.n) // gcd_many([2, spec.n])


def alternating_delannoy_modulus(spec: SumSpec) -> int:
    if spec.h > 1:
        return _triple(spec.n)
    return _triple(spec.n) // gcd_many([2, spec.m - 1, spec.n])


def schroder_modulus(spec: SumSpec) -> int:
    if spec.eps == 1:
        return _triple(spec.n) // gcd_many([2, spec.n])
    return _triple(spec.n) // gcd_many([2, spec.m - 1, spec.n])


def check_delannoy_sum(spec: SumSpec) -> DivisibilityReport:
    """n(n+1)(n+2)/(2,n) divides the D-family sum for either sign."""
    _require(spec.family is FamilyId.D, "this check applies to the D family")
    _require_weighted(spec)
    return _report(spec, "2.1", delannoy_modulus(spec), weighted_power_sum(spec))


def check_alternating_delannoy_sum(spec: SumSpec) -> DivisibilityReport:
    """
    Alternating D-family sum: n(n+1)(n+2) divides it for h > 1, and
    n(n+1)(n+2)/(2,m-1,n) for h = 1.
    """
    _require(spec.family is FamilyId.D, "this check applies to the D family")
    _require(spec.eps == -1, "this check applies to the alternating sum")
    _require_weighted(spec)
    return _report(spec, "2.2", alternating_delannoy_modulus(spec), weighted_power_sum(spec))


def check_schroder_sum(spec: SumSpec) -> DivisibilityReport:
    """S-family sum: /(2,n) for eps = +1 and /(2,m-1,n) for eps = -1."""
    _require(spec.family is FamilyId.S, "this check applies to the S family")
    _require_weighted(spec)
    return _report(spec, "3.1", schroder_modulus(spec), weighted_power_sum(spec))


_DELEGATES = {
    (FamilyId.D, 1): check_delannoy_sum,
    (FamilyId.D, -1): check_alternating_delannoy_sum,
    (FamilyId.S, 1): check_schroder_sum,
    (FamilyId.S, -1): check_schroder_sum,
}


def conjecture_modulus(family: FamilyId, n: int, h: int, m: int, eps: int) -> int:
    """Modulus of the matching a = 1 display; (2,hm-1,n) for alternating D."""
    if eps == 1:
        return _triple(n) // gcd_many([2, n])
    if FamilyId(family) is FamilyId.D:
        return _triple(n) // gcd_many([2, h * m - 1, n])
    return _triple(n) // gcd_many([2, m - 1, n])


def check_power_sum_conjecture(family: FamilyId, n: int, h: int, m: int,
                               eps: int = 1) -> DivisibilityReport:
    """
    The a = 1 displays, decided by the matching theorem check: the theorem
    modulus is a multiple of the conjectured one.
    """
    spec = SumSpec(FamilyId(family), n, h, m, 1, eps)
    delegate = _DELEGATES[(spec.family, eps)](spec)
    modulus = conjecture_modulus(spec.family, n, h, m, eps)
    if delegate.modulus % modulus:
        raise InvariantViolation(f"theorem modulus {delegate.modulus} is not a multiple of {modulus}")
    report = _report(spec, "5.3", modulus, weighted_power_sum(spec),
                     detail=f"implied by {delegate.check} (modulus {delegate.modulus})")
    if delegate.passed and not report.passed:
        raise InvariantViolation("conjecture failed although the stronger theorem check passed")
    return report


def check_lower_sum_by_n(spec: SumSpec) -> DivisibilityReport:
    """
    n divides sum_{k=0}^{n-1} eps^k k^a (k+1)^a (2k+1) P_k^(h)(x)^m.

    a = 0 is allowed for the D family only; the S family needs the k^a
    factor (at n = 2 the unweighted S sum is 4 + 3x).
    """
    if spec.family is FamilyId.S:
        _require_weighted(spec)
    poly = weighted_power_sum(spec, start=0, stop=spec.n - 1)
    return _report(spec, "cg", spec.n, poly, partial=False)


def check_theorem(theorem_id: str, spec: SumSpec) -> DivisibilityReport:
    """Dispatch a theorem id to its checker."""
    if theorem_id == "2.1":
        return check_delannoy_sum(spec)
    if theorem_id == "2.2":
        return check_alternating_delannoy_sum(spec)
    if theorem_id == "3.1":
        return check_schroder_sum(spec)
    if theorem_id == "5.3":
        return check_power_sum_conjecture(spec.family, spec.n, spec.h, spec.m, spec.eps)
    if theorem_id == "cg":
        return check_lower_sum_by_n(spec)
    raise DomainError(f"unknown theorem id {theorem_id!r}")


def probe_spec(theorem_id: str, spec: SumSpec) -> DivisibilityReport:
    """Re-check one spec with every gcd factor dropped from the modulus."""
    if theorem_id not in PROBE_IDS:
        raise DomainError(f"sharpness probe supports {PROBE_IDS}, got {theorem_id!r}")
    if theorem_id == "5.3":
        spec = replace(spec, a=1)
    baseline = check_theorem(theorem_id, spec)
    report = _report(spec, f"probe:{theorem_id}", _triple(spec.n), weighted_power_sum(spec),
                     detail=f"stated modulus {baseline.modulus}")
    return report


def sharpness_probe(theorem_id: str, specs: Iterable[SumSpec]) -> List[DivisibilityReport]:
    """Failing reports for the full modulus n(n+1)(n+2), with witnesses."""
    return [report for report in (probe_spec(theorem_id, spec) for spec in specs)
            if not report.passed]

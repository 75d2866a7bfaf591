"""
Registry of every sweepable check: lemma verifiers and theorem checkers,
their parameter order, categorical choices and validity predicates.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple

from src import identities
from src.TheoremChecker import SumSpec, check_theorem, probe_spec

logger = logging.getLogger(__name__)

LEMMA = "lemma"
THEOREM = "verify"
PROBE = "probe"

FAMILIES = ("D", "S")
SIGNS = (1, -1)


@dataclass(frozen=True)
class CheckEntry:
    """One check id: how to call it and which parameter points are valid."""
    check_id: str
    func: Callable[..., Any]
    params: Tuple[str, ...]
    choices: Dict[str, Tuple[Any, ...]] = field(default_factory=dict)
    valid: Callable[..., bool] = lambda **_: True
    description: str = ""

    def is_valid(self, point: Dict[str, Any]) -> bool:
        return bool(self.valid(**point))


def _lemma(check_id: str, func: Callable[..., Any], params: Tuple[str, ...],
           description: str, valid: Optional[Callable[..., bool]] = None,
           choices: Optional[Dict[str, Tuple[Any, ...]]] = None) -> CheckEntry:
    return CheckEntry(check_id, func, params, choices or {},
                      valid or (lambda **_: True), description)


LEMMA_CHECKS: Dict[str, CheckEntry] = {entry.check_id: entry for entry in (
    _lemma("2.3", identities.verify_alternating_telescope, ("l", "u", "k_max"),
           "alternating telescoping certificate and closed form"),
    _lemma("3.1", identities.verify_positive_telescope, ("l", "u", "k_max"),
           "positive telescoping certificate and closed form"),
    _lemma("2.4", identities.verify_n_plus_two_quotient, ("n", "l"),
           "2 binom(n-1,l-1) binom(n+l+1,l)/(n+2) is integral",
           valid=lambda n, l: n >= 1 and l >= 1),
    _lemma("2.5", identities.verify_c_parity, ("l", "a"),
           "parity and closed forms of C_0, C_1",
           valid=lambda l, a: l >= 1 and a >= 1),
    _lemma("2.6", identities.verify_b_composition_parity, ("M", "n", "I", "l"),
           "even sums of m-fold B coefficients",
           valid=lambda M, n, I, l: M >= 1 and n >= 1 and 0 <= I <= 2 * M * n
           and 1 <= l <= 2 * M * n),
    _lemma("pfaff", identities.verify_pfaff_saalschutz, ("x", "y", "a", "b"),
           "Pfaff-Saalschütz special case",
           valid=lambda x, y, a, b: min(x, y, a, b) >= 0),
    _lemma("3.4", identities.verify_w_partial_sum_parity, ("n", "b"),
           "w partial sums odd, H partial sums even",
           valid=lambda n, b: n >= 1 and b >= 0),
    _lemma("3.5", identities.verify_diagonal_a_parity, ("J",),
           "A_{J,J} odd exactly for J = 2^c - 1",
           valid=lambda J: J >= 1),
    _lemma("3.6", identities.verify_a_odd_total_parity, ("M", "n", "I", "l", "h"),
           "even A-tilde sums for odd totals",
           valid=lambda M, n, I, l, h: M >= 1 and n >= 1 and h >= 1 and I % 2 == 1
           and 0 < I <= 2 * M * n and l >= 0),
    _lemma("3.7", identities.verify_a_doubled_parity, ("M", "n", "I", "e", "h"),
           "even H-weighted diagonal A-tilde sums",
           valid=lambda M, n, I, e, h: M >= 1 and n >= 1 and h >= 1 and I % 2 == 0
           and e % 2 == 0 and 0 <= I <= 2 * M * n and e >= 0),
    _lemma("quotients", identities.verify_quotients, ("kind", "l", "a", "u", "n"),
           "exact quotients of F_u and G_u",
           valid=lambda kind, l, a, u, n: l >= 1 and n >= 1 and 0 <= u <= a,
           choices={"kind": identities.QUOTIENT_KINDS}),
    _lemma("w-pair", identities.verify_w_pair, ("n", "b"),
           "w(n,2b) + w(n,2b+1) closed form and parity",
           valid=lambda n, b: n >= 1 and b >= 1),
    _lemma("k-expansion", identities.verify_k_expansion, ("l", "a", "k_max"),
           "K_u expansion of k^a (k+1)^a beta_l(k)",
           valid=lambda l, a, k_max: l >= 0 and a >= 0 and k_max >= 0),
    _lemma("reduction", identities.verify_reduction_family, ("kind", "m", "top", "h", "k_max"),
           "pair, m-fold and tilde basis expansions",
           valid=lambda kind, m, top, h, k_max: m >= 1 and h >= 1 and top >= 0,
           choices={"kind": ("B", "A")}),
    _lemma("path", identities.verify_reduction_path, ("family", "n", "h", "m", "a", "eps"),
           "weighted sum rebuilt from reduction tables",
           valid=lambda family, n, h, m, a, eps: n >= 1 and h >= 1 and m >= 1 and a >= 1,
           choices={"family": FAMILIES, "eps": SIGNS}),
)}


def _theorem(check_id: str, params: Tuple[str, ...], families: Tuple[str, ...],
             signs: Tuple[int, ...], description: str,
             valid: Optional[Callable[..., bool]] = None) -> CheckEntry:
    return CheckEntry(check_id, check_theorem, params,
                      {"family": families, "eps": signs},
                      valid or (lambda **point: point.get("a", 1) >= 1),
                      description)


_SPEC_PARAMS = ("family", "n", "h", "m", "a", "eps")

THEOREM_CHECKS: Dict[str, CheckEntry] = {entry.check_id: entry for entry in (
    _theorem("2.1", _SPEC_PARAMS, ("D",), SIGNS, "(2,n)/n(n+1)(n+2) times the D sum"),
    _theorem("2.2", _SPEC_PARAMS, ("D",), (-1,), "alternating D sum, h > 1 and h = 1 moduli"),
    _theorem("3.1", _SPEC_PARAMS, ("S",), SIGNS, "S sum for both signs"),
    _theorem("5.3", ("family", "n", "h", "m", "eps"), FAMILIES, SIGNS, "a = 1 displays"),
    _theorem("cg", _SPEC_PARAMS, FAMILIES, SIGNS, "n divides the sum over k = 0..n-1",
             valid=lambda **point: point["a"] >= (0 if point["family"] == "D" else 1)),
)}


def entry_for(group: str, check_id: str) -> CheckEntry:
    table = LEMMA_CHECKS if group == LEMMA else THEOREM_CHECKS
    if group == PROBE and check_id == "cg":
        raise KeyError(check_id)
    return table[check_id]


def _spec_from(point: Dict[str, Any]) -> SumSpec:
    values = dict(point)
    values.setdefault("a", 1)
    return SumSpec(values["family"], values["n"], values["h"], values["m"],
                   values["a"], values["eps"])


def execute(group: str, check_id: str, point: Dict[str, Any]) -> Any:
    """Run one check at one parameter point and return its result object."""
    entry = entry_for(group, check_id)
    if group == LEMMA:
        return entry.func(**point)
    spec = _spec_from(point)
    if group == PROBE:
        return probe_spec(check_id, spec)
    return entry.func(check_id, spec)

"""
Memoized reduction coefficients.

Products of the central basis  beta_t(k) = binom(k+t,2t) binom(2t,t)  and of
the Catalan basis  alpha_t(k) = binom(k+t,2t) C_t  re-expand with integer
coefficients. This module computes every family those expansions need:

    C_u(l,a), K_u(l,a)      k^a (k+1)^a beta_l(k) = sum_u K_u binom(k+l+u, 2l+2u)
    b_{i,t}^(h), a_{i,t}^(h)  h-th power of one basis element
    B/A pair and m-fold     products of basis elements
    B~/A~                   products of h-th powers

Every stored value is checked to be an integer when it is inserted.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import REDUCTION_CONFIG
from src.exact_math import (
    DomainError,
    InvariantViolation,
    Number,
    as_integer,
    binomial,
    newton_coefficients,
    rising_factorial,
    solve_lower_triangular,
)

logger = logging.getLogger(__name__)

KINDS = ("C", "K", "b", "a", "Bpair", "Bmulti", "Apair", "Amulti", "Btilde", "Atilde")

Row = Dict[int, int]


def central_basis(t: int, k: int) -> int:
    """beta_t(k) = binom(k+t, 2t) binom(2t, t)."""
    return binomial(k + t, 2 * t) * binomial(2 * t, t)


def catalan_basis(t: int, k: int) -> int:
    """alpha_t(k) = binom(k+t, 2t) C_t."""
    return binomial(k + t, 2 * t) * binomial(2 * t, t) // (t + 1)


def interpolation_nodes(l: int, a: int) -> List[int]:
    """m_v = (l+v-1)(l+v) for v = 1..a+1."""
    return [(l + v - 1) * (l + v) for v in range(1, a + 2)]


def b_pair_formula(i: int, j: int, l: int) -> int:
    return binomial(i + j, i) * binomial(j, i + j - l) * binomial(l, j)


def a_pair_formula(i: int, j: int, l: int) -> int:
    """Subtraction form; well defined at j = 0."""
    return (binomial(i + j, i + j - l) * binomial(l, j) * binomial(l + 1, i + 1)
            - binomial(i + j, i + 1) * binomial(j, i + j - l) * binomial(l + 1, l - j))


def a_pair_quotient_form(i: int, j: int, l: int) -> Fraction:
    """(1/j) binom(i+j,i+1) binom(j,i+j-l) binom(l+1,l-j), for j >= 1."""
    if j < 1:
        raise DomainError(f"quotient form of A needs j >= 1, got j={j}")
    return Fraction(
        binomial(i + j, i + 1) * binomial(j, i + j - l) * binomial(l + 1, l - j), j
    )


def _require_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise DomainError(f"{name} must be nonnegative, got {value}")


class CoeffTable:
    """Store of reduction coefficients keyed by (kind, index tuple)."""

    def __init__(self, sort_index_keys: Optional[bool] = None):
        if sort_index_keys is None:
            sort_index_keys = REDUCTION_CONFIG["sort_index_keys"]
        self.sort_index_keys = sort_index_keys
        self._values: Dict[Tuple[str, Tuple[int, ...]], int] = {}
        self._rows: Dict[Tuple[str, Tuple[int, ...]], Row] = {}

    # Storage

    def _store(self, kind: str, key: Tuple[int, ...], value: Number) -> int:
        value = as_integer(value, f"{kind}{key}")
        self._values[(kind, key)] = value
        return value

    def _store_row(self, kind: str, key: Tuple[int, ...], row: Dict[int, Number]) -> Row:
        clean = {index: as_integer(v, f"{kind}{key}[{index}]") for index, v in row.items()}
        self._rows[(kind, key)] = clean
        logger.debug(f"CoeffTable: stored {kind}{key} with {len(clean)} entries "
                     f"({len(self)} rows and values total)")
        return clean

    def get(self, kind: str, key: Tuple[int, ...]) -> Optional[int]:
        return self._values.get((kind, key))

    def __len__(self) -> int:
        return len(self._values) + len(self._rows)

    def stats(self) -> Dict[str, int]:
        counts = {kind: 0 for kind in KINDS}
        for kind, _ in self._values:
            counts[kind] += 1
        for kind, _ in self._rows:
            counts[kind] += 1
        return counts

    def _index_key(self, indices: Iterable[int]) -> Tuple[int, ...]:
        key = tuple(int(i) for i in indices)
        if not key:
            raise DomainError("index tuple must contain at least one index")
        if any(i < 0 for i in key):
            raise DomainError(f"indices must be nonnegative, got {key}")
        return tuple(sorted(key)) if self.sort_index_keys else key

    # C_u and K_u

    def c_coeffs(self, l: int, a: int) -> List[int]:
        """[C_0(l,a), ..., C_a(l,a)] from Newton divided differences of y^a."""
        _require_nonnegative(l=l, a=a)
        key = (l, a)
        row = self._rows.get(("C", key))
        if row is None:
            nodes = interpolation_nodes(l, a)
            diffs = newton_coefficients(nodes, [y ** a for y in nodes])
            row = self._store_row("C", key, dict(enumerate(diffs)))
            if row[a] != 1:
                raise InvariantViolation(f"leading C_{a}({l},{a}) is {row[a]}, expected 1")
        return [row[u] for u in range(a + 1)]

    def k_coeff(self, u: int, l: int, a: int) -> int:
        """K_u(l,a) = C_u(l,a) binom(2l+2u, l+u) ((l+1)_u)^2."""
        if not 0 <= u <= a:
            raise DomainError(f"need 0 <= u <= a, got u={u}, a={a}")
        key = (u, l, a)
        cached = self.get("K", key)
        if cached is not None:
            return cached
        c_u = self.c_coeffs(l, a)[u]
        value = c_u * binomial(2 * (l + u), l + u) * rising_factorial(l + 1, u) ** 2
        return self._store("K", key, value)

    def k_coeffs(self, l: int, a: int) -> List[int]:
        return [self.k_coeff(u, l, a) for u in range(a + 1)]

    # b and a tables

    def b_table(self, i: int, h: int) -> Row:
        """
        Coefficients b_{i,t}^(h), i <= t <= h*i, of

            binom(k+i,2i)^h binom(2i,i) = sum_t b_{i,t} beta_t(k).

        Solved by forward substitution at k = i, ..., h*i, where beta_t(k)
        vanishes for k < t.
        """
        _require_nonnegative(i=i)
        if h < 1:
            raise DomainError(f"h must be at least 1, got {h}")
        key = (i, h)
        row = self._rows.get(("b", key))
        if row is not None:
            return dict(row)

        points = list(range(i, h * i + 1))
        matrix = [[central_basis(t, k) for t in points] for k in points]
        rhs = [binomial(k + i, 2 * i) ** h * binomial(2 * i, i) for k in points]
        solution = solve_lower_triangular(matrix, rhs)

        values: Dict[int, Number] = {}
        for t, value in zip(points, solution):
            if value.denominator != 1:
                raise InvariantViolation(f"b_{{{i},{t}}}^({h}) = {value} is not an integer")
            if value.numerator % binomial(t, i):
                raise InvariantViolation(
                    f"binom({t},{i}) does not divide b_{{{i},{t}}}^({h}) = {value}"
                )
            values[t] = value
        return dict(self._store_row("b", key, values))

    def a_coeff(self, i: int, t: int, h: int) -> int:
        """a_{i,t}^(h) = b_{i,t}^(h) (t+1)/(i+1)."""
        if not i <= t <= h * i:
            raise DomainError(f"need i <= t <= h*i, got i={i}, t={t}, h={h}")
        key = (i, t, h)
        cached = self.get("a", key)
        if cached is not None:
            return cached
        b = self.b_table(i, h)[t]
        return self._store("a", key, Fraction(b * (t + 1), i + 1))

    def a_table(self, i: int, h: int) -> Row:
        return {t: self.a_coeff(i, t, h) for t in range(i, h * i + 1)}

    # Pair coefficients

    def b_pair(self, i: int, j: int, l: int) -> int:
        _require_nonnegative(i=i, j=j, l=l)
        key = (i, j, l)
        cached = self.get("Bpair", key)
        if cached is not None:
            return cached
        return self._store("Bpair", key, b_pair_formula(i, j, l))

    def a_pair(self, i: int, j: int, l: int) -> int:
        _require_nonnegative(i=i, j=j, l=l)
        key = (i, j, l)
        cached = self.get("Apair", key)
        if cached is not None:
            return cached
        return self._store("Apair", key, a_pair_formula(i, j, l))

    def _pair(self, kind: str):
        return self.b_pair if kind == "B" else self.a_pair

    # m-fold coefficients

    def multi_row(self, kind: str, indices: Sequence[int]) -> Row:
        """Copy of the memoized m-fold row; see _multi_row."""
        return dict(self._multi_row(kind, indices))

    def _multi_row(self, kind: str, indices: Sequence[int]) -> Row:
        """
        All nonzero B (kind "B") or A (kind "A") m-fold coefficients for one
        index tuple, as a map l -> value. Built by folding pair coefficients
        one index at a time.
        """
        table_kind = _kind_name(kind, "multi")
        key = self._index_key(indices)
        row = self._rows.get((table_kind, key))
        if row is not None:
            return row
        if len(key) == 1:
            folded: Dict[int, int] = {key[0]: 1}
        else:
            pair = self._pair(kind)
            head = self._multi_row(kind, key[:-1])
            last = key[-1]
            folded = _fold(head, {last: 1}, pair)
        self._check_upper_support(table_kind, key, folded, sum(key))
        return self._store_row(table_kind, key, folded)

    def b_multi(self, indices: Sequence[int], l: int) -> int:
        return self._multi_row("B", indices).get(l, 0)

    def a_multi(self, indices: Sequence[int], l: int) -> int:
        return self._multi_row("A", indices).get(l, 0)

    # Tilde coefficients

    def tilde_row(self, kind: str, indices: Sequence[int], h: int) -> Row:
        """Copy of the memoized tilde row; see _tilde_row."""
        return dict(self._tilde_row(kind, indices, h))

    def _tilde_row(self, kind: str, indices: Sequence[int], h: int) -> Row:
        """
        B~ (kind "B") or A~ (kind "A") for one index tuple:

            prod_j binom(k+i_j,2i_j)^h w_{i_j} = sum_l tilde^(l,h) basis_l(k)

        with w = binom(2i,i) for B and C_i for A. Folded one index at a time
        through the b (resp. a) table of that index.
        """
        if h < 1:
            raise DomainError(f"h must be at least 1, got {h}")
        table_kind = _kind_name(kind, "tilde")
        key = self._index_key(indices)
        row = self._rows.get((table_kind, key + (h,)))
        if row is not None:
            return row
        single = self.b_table if kind == "B" else self.a_table
        if len(key) == 1:
            folded = {t: v for t, v in single(key[0], h).items() if v}
        else:
            pair = self._pair(kind)
            head = self._tilde_row(kind, key[:-1], h)
            folded = _fold(head, single(key[-1], h), pair)
        self._check_upper_support(table_kind, key, folded, h * sum(key))
        return self._store_row(table_kind, key + (h,), folded)

    def b_tilde(self, indices: Sequence[int], l: int, h: int) -> int:
        return self._tilde_row("B", indices, h).get(l, 0)

    def a_tilde(self, indices: Sequence[int], l: int, h: int) -> int:
        return self._tilde_row("A", indices, h).get(l, 0)

    def tilde_row_by_definition(self, kind: str, indices: Sequence[int], h: int) -> Row:
        """
        The tilde row as the explicit t-sum: over i_j <= t_j <= h*i_j, the
        product of b (or a) table entries times the m-fold row of (t_1..t_m).
        Not memoized; used to cross-check tilde_row.
        """
        single = self.b_table if kind == "B" else self.a_table
        tables = [single(i, h) for i in indices]
        totals: Dict[int, int] = {}
        for ts in product(*(sorted(table) for table in tables)):
            weight = 1
            for table, t in zip(tables, ts):
                weight *= table[t]
            if not weight:
                continue
            for l, value in self._multi_row(kind, ts).items():
                totals[l] = totals.get(l, 0) + weight * value
        return {l: v for l, v in sorted(totals.items()) if v}

    def support(self, kind: str, indices: Sequence[int], h: Optional[int] = None) -> Optional[Tuple[int, int]]:
        """Observed (lowest, highest) l with a nonzero coefficient, or None."""
        row = self._multi_row(kind, indices) if h is None else self._tilde_row(kind, indices, h)
        if not row:
            return None
        return min(row), max(row)

    @staticmethod
    def _check_upper_support(kind: str, key: Tuple[int, ...], row: Dict[int, int], bound: int) -> None:
        beyond = [l for l in row if l > bound]
        if beyond:
            raise InvariantViolation(f"{kind}{key} has support beyond l = {bound}: {beyond}")


def _fold(left: Row, right: Row, pair) -> Row:
    """Combine two expansions through the pair coefficients of their basis."""
    folded: Dict[int, int] = {}
    for l1, x in left.items():
        for l2, y in right.items():
            if not y:
                continue
            # pair(l1, l2, l) vanishes outside max(l1, l2) <= l <= l1 + l2
            for l in range(max(l1, l2), l1 + l2 + 1):
                folded[l] = folded.get(l, 0) + x * y * pair(l1, l2, l)
    return {l: v for l, v in sorted(folded.items()) if v}


def _kind_name(kind: str, suffix: str) -> str:
    if kind not in ("A", "B"):
        raise DomainError(f"coefficient family must be 'A' or 'B', got {kind!r}")
    return f"{kind}{suffix}"


# Per-process default table

_default_table: Optional[CoeffTable] = None


def default_table() -> CoeffTable:
    global _default_table
    if _default_table is None:
        _default_table = CoeffTable()
    return _default_table


def c_coeffs(l: int, a: int) -> List[int]:
    return default_table().c_coeffs(l, a)


def k_coeff(u: int, l: int, a: int) -> int:
    return default_table().k_coeff(u, l, a)


def b_table(i: int, h: int) -> Row:
    return default_table().b_table(i, h)


def a_coeff(i: int, t: int, h: int) -> int:
    return default_table().a_coeff(i, t, h)


def b_pair(i: int, j: int, l: int) -> int:
    return default_table().b_pair(i, j, l)


def a_pair(i: int, j: int, l: int) -> int:
    return default_table().a_pair(i, j, l)


def b_multi(indices: Sequence[int], l: int) -> int:
    return default_table().b_multi(indices, l)


def a_multi(indices: Sequence[int], l: int) -> int:
    return default_table().a_multi(indices, l)


def b_tilde(indices: Sequence[int], l: int, h: int) -> int:
    return default_table().b_tilde(indices, l, h)


def a_tilde(indices: Sequence[int], l: int, h: int) -> int:
    return default_table().a_tilde(indices, l, h)

"""The identity catalog: first-class checkers with structured reports.

Every identity the library guarantees lives here under a stable id (also the
CLI token). Scalar checks return the two sides exactly as computed; sweep
runners walk an identity's natural index range up to a chosen bound,
collecting every violation (never failing fast) into an
:class:`IdentityReport`. Sweeps are sequential and deterministic, so
counterexamples always appear in index order.

The catalog:

    eq1   s(n, m) equals the alternating binomial sum over second-kind values
    eq2   S(n, m) equals the mirrored sum over signed first-kind values
    eq3   sum_l s(l, j) S(k, l) = 1 if j == k else 0
    eq4   sum_l s(k, l) S(l, j) = 1 if j == k else 0
    eq5   sum_j s(m, j) sum_k S(j, k) = 1
    eq6   sum_j S(m, j) sum_k s(j, k) = 1
    eq11  sum_j s(m, j) sum_k S(j, k) x^k  =  x^m
    eq12  sum_m S(j, m) sum_k s(m, k) x^k  =  x^j
    eq13  eq11 with the diagonal term split off collapses to the zero poly
    eq14  eq13 at x = 1: -sum_{j<m} s(m, j) sum_k S(j, k) = sum_{k<m} S(m, k)
    eq15  eq12 with the diagonal term split off collapses to the zero poly
    eq16  eq15 at x = 1: -sum_{m<j} S(j, m) sum_k s(m, k) = sum_{k<j} s(j, k)
    eq17  linear term of eq13: S(m, 1) = -sum_{j<m} s(m, j) S(j, 1)
    eq18  linear term of eq15: s(j, 1) = -sum_{m<j} S(j, m) s(m, 1)

Out-of-triangle factors contribute zero everywhere; the eq3/eq4 sums run
l = 0 .. max(j, k) + 1 as stated even though the trailing term is provably
zero, so both range conventions agree.
"""

import enum
import time
from dataclasses import dataclass
from fractions import Fraction

from .engine import StirlingKind, shared_calculator
from .exact import check_index, dump_json, format_rational
from .poly import (
    Poly,
    basis_poly_first,
    basis_poly_second,
    residual_poly_first,
    residual_poly_second,
)

_FIRST = StirlingKind.FIRST_SIGNED
_SECOND = StirlingKind.SECOND


class IdentityId(enum.Enum):
    """Stable catalog ids; declaration order is the catalog order."""

    CONVERSION_1 = "eq1"
    CONVERSION_2 = "eq2"
    ORTHOGONALITY_3 = "eq3"
    ORTHOGONALITY_4 = "eq4"
    UNIT_SUM_5 = "eq5"
    UNIT_SUM_6 = "eq6"
    BASIS_POLY_11 = "eq11"
    BASIS_POLY_12 = "eq12"
    RESIDUAL_13 = "eq13"
    ROW_RELATION_14 = "eq14"
    RESIDUAL_15 = "eq15"
    ROW_RELATION_16 = "eq16"
    DERIV_RELATION_17 = "eq17"
    DERIV_RELATION_18 = "eq18"

    @classmethod
    def from_token(cls, token: str) -> "IdentityId":
        for identity in cls:
            if identity.value == token:
                return identity
        valid = ", ".join(i.value for i in cls)
        raise ValueError(f"unknown identity {token!r}; expected one of: {valid}")


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


@dataclass(frozen=True)
class Counterexample:
    """One failing index point, both sides recorded exactly as computed."""

    indices: dict
    lhs: object
    rhs: object

    def to_json_data(self) -> dict:
        return {
            "indices": dict(self.indices),
            "lhs": _fmt(self.lhs),
            "rhs": _fmt(self.rhs),
        }


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of sweeping one identity over a range."""

    id: IdentityId
    range: str
    status: str
    counterexamples: tuple
    elapsed_ms: int

    def __post_init__(self):
        consistent = (self.status == "pass") == (not self.counterexamples)
        if self.status not in ("pass", "fail") or not consistent:
            raise ValueError(
                "status must be 'pass' with no counterexamples "
                "or 'fail' with at least one"
            )

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_data(self) -> dict:
        return {
            "id": self.id.value,
            "range": self.range,
            "status": self.status,
            "counterexamples": [c.to_json_data() for c in self.counterexamples],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return dump_json(self.to_json_data())


# scalar checks


def check_orthogonality(j: int, k: int, calc=None, mirrored: bool = False):
    """Orthogonality sum and its Kronecker-delta target, as (lhs, expected).

    Default composition: sum over l of s(l, j) * S(k, l). With
    ``mirrored=True`` the order flips: sum over l of s(k, l) * S(l, j).
    Both run l = 0 .. max(j, k) + 1 with out-of-triangle factors zero.
    """
    calc = calc or shared_calculator()
    check_index(j, calc.index_cap, "j")
    check_index(k, calc.index_cap, "k")
    top = max(j, k) + 1
    if mirrored:
        lhs = sum(
            calc._value(_FIRST, k, l) * calc._value(_SECOND, l, j)
            for l in range(top + 1)
        )
    else:
        lhs = sum(
            calc._value(_FIRST, l, j) * calc._value(_SECOND, k, l)
            for l in range(top + 1)
        )
    return lhs, 1 if j == k else 0


def check_unit_sum_first(m: int, calc=None) -> int:
    """sum_{j=1}^{m} s(m, j) sum_{k=1}^{j} S(j, k); must equal 1."""
    calc = calc or shared_calculator()
    _require_at_least(m, 1, "m", calc)
    total = 0
    for j in range(1, m + 1):
        inner = sum(calc._value(_SECOND, j, k) for k in range(1, j + 1))
        total += calc._value(_FIRST, m, j) * inner
    return total


def check_unit_sum_second(m: int, calc=None) -> int:
    """sum_{j=1}^{m} S(m, j) sum_{k=1}^{j} s(j, k); must equal 1."""
    calc = calc or shared_calculator()
    _require_at_least(m, 1, "m", calc)
    total = 0
    for j in range(1, m + 1):
        inner = sum(calc._value(_FIRST, j, k) for k in range(1, j + 1))
        total += calc._value(_SECOND, m, j) * inner
    return total


def check_row_relation_first(m: int, calc=None):
    """(lhs, rhs) of: -sum_{j=1}^{m-1} s(m, j) sum_{k=1}^{j} S(j, k)
    against sum_{k=1}^{m-1} S(m, k). Defined for m >= 2."""
    calc = calc or shared_calculator()
    _require_at_least(m, 2, "m", calc)
    lhs = 0
    for j in range(1, m):
        inner = sum(calc._value(_SECOND, j, k) for k in range(1, j + 1))
        lhs -= calc._value(_FIRST, m, j) * inner
    rhs = sum(calc._value(_SECOND, m, k) for k in range(1, m))
    return lhs, rhs


def check_row_relation_second(j: int, calc=None):
    """(lhs, rhs) of: -sum_{m=1}^{j-1} S(j, m) sum_{k=1}^{m} s(m, k)
    against sum_{k=1}^{j-1} s(j, k). Defined for j >= 2."""
    calc = calc or shared_calculator()
    _require_at_least(j, 2, "j", calc)
    lhs = 0
    for m in range(1, j):
        inner = sum(calc._value(_FIRST, m, k) for k in range(1, m + 1))
        lhs -= calc._value(_SECOND, j, m) * inner
    rhs = sum(calc._value(_FIRST, j, k) for k in range(1, j))
    return lhs, rhs


def check_deriv_relation_second(m: int, calc=None):
    """(lhs, rhs) of: S(m, 1) = -sum_{j=1}^{m-1} s(m, j) S(j, 1).

    This is the vanishing linear coefficient of residual_poly_first(m),
    restated; both computation paths must agree. Defined for m >= 2.
    """
    calc = calc or shared_calculator()
    _require_at_least(m, 2, "m", calc)
    lhs = calc._value(_SECOND, m, 1)
    rhs = -sum(
        calc._value(_FIRST, m, j) * calc._value(_SECOND, j, 1)
        for j in range(1, m)
    )
    return lhs, rhs


def check_deriv_relation_first(j: int, calc=None):
    """(lhs, rhs) of: s(j, 1) = -sum_{m=1}^{j-1} S(j, m) s(m, 1).
    Defined for j >= 2."""
    calc = calc or shared_calculator()
    _require_at_least(j, 2, "j", calc)
    lhs = calc._value(_FIRST, j, 1)
    rhs = -sum(
        calc._value(_SECOND, j, m) * calc._value(_FIRST, m, 1)
        for m in range(1, j)
    )
    return lhs, rhs


def _require_at_least(value: int, minimum: int, name: str, calc):
    check_index(value, calc.index_cap, name)
    if value < minimum:
        raise ValueError(f"{name} must be at least {minimum}, got {value}")


# sweeps


def _sweep_conversion_first(max_index, calc):
    for n in range(1, max_index + 1):
        for m in range(1, n + 1):
            converted = calc.first_from_second(n, m)
            direct = calc._value(_FIRST, n, m)
            if converted != direct:
                yield Counterexample({"n": n, "m": m}, converted, direct)


def _sweep_conversion_second(max_index, calc):
    for n in range(1, max_index + 1):
        for m in range(1, n + 1):
            converted = calc.second_from_first(n, m)
            direct = calc._value(_SECOND, n, m)
            if converted != direct:
                yield Counterexample({"n": n, "m": m}, converted, direct)


def _sweep_orthogonality(mirrored):
    def sweep(max_index, calc):
        for j in range(max_index + 1):
            for k in range(max_index + 1):
                lhs, expected = check_orthogonality(j, k, calc, mirrored=mirrored)
                if lhs != expected:
                    yield Counterexample({"j": j, "k": k}, lhs, expected)

    return sweep


def _sweep_unit_sum(check):
    def sweep(max_index, calc):
        for m in range(1, max_index + 1):
            total = check(m, calc)
            if total != 1:
                yield Counterexample({"m": m}, total, 1)

    return sweep


def _sweep_monomial_rebuild(builder, index_name):
    def sweep(max_index, calc):
        for m in range(1, max_index + 1):
            built = builder(m, calc)
            expected = Poly.monomial(m)
            if built != expected:
                for k in range(max(built.degree(), m) + 1):
                    actual = built.coefficient(k)
                    want = expected.coefficient(k)
                    if actual != want:
                        yield Counterexample({index_name: m, "k": k}, actual, want)

    return sweep


def _sweep_zero_residual(builder, index_name):
    def sweep(max_index, calc):
        for m in range(1, max_index + 1):
            built = builder(m, calc)
            for k in range(built.degree() + 1):
                coeff = built.coefficient(k)
                if coeff != 0:
                    yield Counterexample({index_name: m, "k": k}, coeff, Fraction(0))

    return sweep


def _sweep_two_sided(check, index_name, start):
    def sweep(max_index, calc):
        for m in range(start, max_index + 1):
            lhs, rhs = check(m, calc)
            if lhs != rhs:
                yield Counterexample({index_name: m}, lhs, rhs)

    return sweep


def _plural(count, noun):
    return f"{count} {noun}" if count == 1 else f"{count} {noun}s"


def _range_triangle(max_index):
    pairs = max_index * (max_index + 1) // 2
    return f"1 <= m <= n <= {max_index} ({_plural(pairs, 'pair')})"


def _range_grid(max_index):
    return f"0 <= j,k <= {max_index} ({_plural((max_index + 1) ** 2, 'pair')})"


def _range_from(start, index_name):
    def describe(max_index):
        count = max(0, max_index - start + 1)
        return f"{start} <= {index_name} <= {max_index} ({_plural(count, 'case')})"

    return describe


_SWEEPS = {
    IdentityId.CONVERSION_1: (_range_triangle, _sweep_conversion_first),
    IdentityId.CONVERSION_2: (_range_triangle, _sweep_conversion_second),
    IdentityId.ORTHOGONALITY_3: (_range_grid, _sweep_orthogonality(False)),
    IdentityId.ORTHOGONALITY_4: (_range_grid, _sweep_orthogonality(True)),
    IdentityId.UNIT_SUM_5: (_range_from(1, "m"), _sweep_unit_sum(check_unit_sum_first)),
    IdentityId.UNIT_SUM_6: (_range_from(1, "m"), _sweep_unit_sum(check_unit_sum_second)),
    IdentityId.BASIS_POLY_11: (
        _range_from(1, "m"),
        _sweep_monomial_rebuild(basis_poly_first, "m"),
    ),
    IdentityId.BASIS_POLY_12: (
        _range_from(1, "j"),
        _sweep_monomial_rebuild(basis_poly_second, "j"),
    ),
    IdentityId.RESIDUAL_13: (
        _range_from(1, "m"),
        _sweep_zero_residual(residual_poly_first, "m"),
    ),
    IdentityId.ROW_RELATION_14: (
        _range_from(2, "m"),
        _sweep_two_sided(check_row_relation_first, "m", 2),
    ),
    IdentityId.RESIDUAL_15: (
        _range_from(1, "j"),
        _sweep_zero_residual(residual_poly_second, "j"),
    ),
    IdentityId.ROW_RELATION_16: (
        _range_from(2, "j"),
        _sweep_two_sided(check_row_relation_second, "j", 2),
    ),
    IdentityId.DERIV_RELATION_17: (
        _range_from(2, "m"),
        _sweep_two_sided(check_deriv_relation_second, "m", 2),
    ),
    IdentityId.DERIV_RELATION_18: (
        _range_from(2, "j"),
        _sweep_two_sided(check_deriv_relation_first, "j", 2),
    ),
}


def run_identity(identity: IdentityId, max_index: int, calc=None) -> IdentityReport:
    """Sweep one identity up to max_index, collecting every violation."""
    calc = calc or shared_calculator()
    check_index(max_index, calc.index_cap, "max_index")
    describe_range, sweep = _SWEEPS[identity]
    start = time.perf_counter()
    found = tuple(sweep(max_index, calc))
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return IdentityReport(
        id=identity,
        range=describe_range(max_index),
        status="pass" if not found else "fail",
        counterexamples=found,
        elapsed_ms=elapsed_ms,
    )


def run_all(max_index: int, calc=None) -> list:
    """Sweep the whole catalog in catalog order."""
    return [run_identity(identity, max_index, calc) for identity in IdentityId]

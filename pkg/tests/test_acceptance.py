"""Acceptance gate: every criterion at exact (zero-tolerance) equality, one
printed pass/fail line per criterion. Lines print even under pytest capture.

Run just this gate with:  pytest tests/test_acceptance.py -v
"""

import json
import random
import time
from fractions import Fraction

import jsonschema
import pytest

from stirling.cli import run
from stirling.engine import PerturbedCalculator, StirlingKind, stirling
from stirling.identities import IdentityId, run_identity
from stirling.oracle import count_permutations_by_cycles, count_set_partitions
from stirling.poly import (
    Poly,
    basis_poly_first,
    basis_poly_second,
    linear_coefficient,
    poly_eval,
    residual_poly_first,
    residual_poly_second,
)
from stirling import (
    check_deriv_relation_first,
    check_deriv_relation_second,
    check_orthogonality,
    check_row_relation_first,
    check_row_relation_second,
    check_unit_sum_first,
    check_unit_sum_second,
    first_from_second,
    second_from_first,
)

FIRST = StirlingKind.FIRST_SIGNED
UNSIGNED = StirlingKind.FIRST_UNSIGNED
SECOND = StirlingKind.SECOND


def _gate(capsys, number, description, budget_s, started, problems):
    elapsed = time.perf_counter() - started
    status = "PASS" if not problems and elapsed < budget_s else "FAIL"
    with capsys.disabled():
        print(f"ACCEPTANCE {number:>2} {status} [{elapsed:6.2f}s < {budget_s}s] {description}")
    assert elapsed < budget_s, f"criterion {number} exceeded {budget_s}s ({elapsed:.2f}s)"
    assert not problems, f"criterion {number}: {problems[:5]}"


def test_criterion_01_oracle_equivalence(capsys):
    started = time.perf_counter()
    problems = []
    cases = 0
    for n in range(1, 11):
        for m in range(1, n + 1):
            cases += 1
            if count_permutations_by_cycles(n, m) != stirling(UNSIGNED, n, m):
                problems.append(("first", n, m))
            cases += 1
            if count_set_partitions(n, m) != stirling(SECOND, n, m):
                problems.append(("second", n, m))
    if cases != 110:
        problems.append(("case count", cases))
    _gate(capsys, 1, "oracle equivalence, both kinds, 1 <= m <= n <= 10 (110 cases)",
          60, started, problems)


def test_criterion_02_conversion_identities(capsys):
    started = time.perf_counter()
    problems = []
    for n in range(1, 41):
        for m in range(1, n + 1):
            if first_from_second(n, m) != stirling(FIRST, n, m):
                problems.append(("eq1", n, m))
            if second_from_first(n, m) != stirling(SECOND, n, m):
                problems.append(("eq2", n, m))
    _gate(capsys, 2, "conversion sums match recurrences, 1 <= m <= n <= 40",
          10, started, problems)


def test_criterion_03_orthogonality(capsys):
    started = time.perf_counter()
    problems = []
    pairs = 0
    for j in range(31):
        for k in range(31):
            pairs += 1
            delta = 1 if j == k else 0
            if check_orthogonality(j, k) != (delta, delta):
                problems.append(("eq3", j, k))
            if check_orthogonality(j, k, mirrored=True) != (delta, delta):
                problems.append(("eq4", j, k))
    if pairs != 961:
        problems.append(("pair count", pairs))
    _gate(capsys, 3, "orthogonality sums equal the delta, 0 <= j,k <= 30 (961 pairs each)",
          5, started, problems)


def test_criterion_04_unit_sums(capsys):
    started = time.perf_counter()
    problems = []
    for m in range(1, 61):
        if check_unit_sum_first(m) != 1:
            problems.append(("eq5", m))
        if check_unit_sum_second(m) != 1:
            problems.append(("eq6", m))
    _gate(capsys, 4, "unit sums equal 1 exactly, 1 <= m <= 60", 5, started, problems)


def test_criterion_05_basis_polynomials(capsys):
    started = time.perf_counter()
    problems = []
    for m in range(1, 41):
        if basis_poly_first(m) != Poly.monomial(m):
            problems.append(("eq11", m))
        if basis_poly_second(m) != Poly.monomial(m):
            problems.append(("eq12", m))
    points = (Fraction(1), Fraction(-2), Fraction(3, 7))
    for m in range(1, 26):
        built_first = basis_poly_first(m)
        built_second = basis_poly_second(m)
        for x in points:
            power = Fraction(1)
            for _ in range(m):
                power *= x
            if poly_eval(built_first, x) != power:
                problems.append(("eq11 eval", m, str(x)))
            if poly_eval(built_second, x) != power:
                problems.append(("eq12 eval", m, str(x)))
    _gate(capsys, 5, "basis polynomials equal x^m coefficientwise (m <= 40) "
          "and at x in {1, -2, 3/7} (m <= 25)", 10, started, problems)


def test_criterion_06_residual_polynomials(capsys):
    started = time.perf_counter()
    problems = []
    for m in range(1, 41):
        if not residual_poly_first(m).is_zero():
            problems.append(("eq13", m))
        if not residual_poly_second(m).is_zero():
            problems.append(("eq15", m))
    _gate(capsys, 6, "residual polynomials are identically zero, 1 <= m <= 40",
          10, started, problems)


def test_criterion_07_row_relations(capsys):
    started = time.perf_counter()
    problems = []
    for m in range(2, 61):
        lhs, rhs = check_row_relation_first(m)
        if lhs != rhs:
            problems.append(("eq14", m, lhs, rhs))
        lhs, rhs = check_row_relation_second(m)
        if lhs != rhs:
            problems.append(("eq16", m, lhs, rhs))
    _gate(capsys, 7, "row relations lhs == rhs exactly, 2 <= m <= 60", 5, started, problems)


def test_criterion_08_derivative_relations(capsys):
    started = time.perf_counter()
    problems = []
    for m in range(2, 61):
        lhs, rhs = check_deriv_relation_second(m)
        if lhs != rhs:
            problems.append(("eq17", m, lhs, rhs))
        lhs, rhs = check_deriv_relation_first(m)
        if lhs != rhs:
            problems.append(("eq18", m, lhs, rhs))
    for m in range(2, 41):
        if linear_coefficient(residual_poly_first(m)) != 0:
            problems.append(("eq17 via residual", m))
    _gate(capsys, 8, "derivative relations hold (m <= 60) and agree with the "
          "residual linear coefficient (m <= 40)", 5, started, problems)


def test_criterion_09_mutation_sensitivity(capsys):
    started = time.perf_counter()
    problems = []
    sensitive = (
        IdentityId.UNIT_SUM_5,
        IdentityId.UNIT_SUM_6,
        IdentityId.ORTHOGONALITY_3,
        IdentityId.RESIDUAL_13,
    )
    rng = random.Random(987654321)
    entries = set()
    while len(entries) < 5:
        kind = rng.choice((FIRST, SECOND))
        n = rng.randint(0, 10)
        entries.add((kind, n, rng.randint(0, n)))
    for kind, n, m in sorted(entries, key=str):
        faulty = PerturbedCalculator(kind, n, m, delta=1)
        reports = [run_identity(identity, 12, faulty) for identity in sensitive]
        if all(report.passed for report in reports):
            problems.append(("undetected", kind.value, n, m))
    _gate(capsys, 9, "each of 5 random single-entry +1 faults (n <= 10) is detected",
          60, started, problems)


REPORT_SCHEMA = {
    "type": "object",
    "properties": {
        "id": {"type": "string", "pattern": "^eq([1-6]|1[1-8])$"},
        "range": {"type": "string"},
        "status": {"enum": ["pass", "fail"]},
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "indices": {
                        "type": "object",
                        "additionalProperties": {"type": "integer"},
                    },
                    "lhs": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
                    "rhs": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
                },
                "required": ["indices", "lhs", "rhs"],
                "additionalProperties": False,
            },
        },
        "elapsed_ms": {"type": "integer", "minimum": 0},
    },
    "required": ["id", "range", "status", "counterexamples", "elapsed_ms"],
    "additionalProperties": False,
}

ENVELOPE_SCHEMA = {
    "type": "object",
    "properties": {
        "reports": {
            "type": "array",
            "items": REPORT_SCHEMA,
            "minItems": 14,
            "maxItems": 14,
        },
        "all_passed": {"type": "boolean"},
    },
    "required": ["reports", "all_passed"],
    "additionalProperties": False,
}


def test_criterion_10_cli_contract(capsys):
    started = time.perf_counter()
    problems = []

    code = run(["verify", "--identity", "all", "--max", "25", "--format", "json"])
    healthy_out = capsys.readouterr().out
    if code != 0:
        problems.append(("healthy exit", code))
    data = json.loads(healthy_out)
    jsonschema.validate(data, ENVELOPE_SCHEMA)
    if data["all_passed"] is not True:
        problems.append("all_passed not true")
    if len(data["reports"]) != 14:
        problems.append(("report count", len(data["reports"])))
    if any(r["status"] != "pass" for r in data["reports"]):
        problems.append("non-pass report in healthy run")

    code = run([
        "verify", "--identity", "all", "--max", "25",
        "--inject-fault", "second:6:3:1", "--format", "json",
    ])
    faulty_out = capsys.readouterr().out
    if code != 1:
        problems.append(("faulty exit", code))
    data = json.loads(faulty_out)
    jsonschema.validate(data, ENVELOPE_SCHEMA)
    if data["all_passed"] is not False:
        problems.append("all_passed not false under fault")
    serialized = [ce for r in data["reports"] for ce in r["counterexamples"]]
    if not serialized:
        problems.append("no counterexamples serialized under fault")

    _gate(capsys, 10, "verify all: exit 0 with 14 schema-valid pass reports; "
          "injected fault exits 1 with counterexamples", 60, started, problems)

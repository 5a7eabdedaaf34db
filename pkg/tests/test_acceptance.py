"""Exit criteria, one test per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints
one PASS/FAIL line per criterion.
"""

import json
import random
import time
from itertools import permutations, product

import pytest

from cyclocode.charsum import (
    additive_character,
    character_value,
    gaussian_period_closed_N2,
    gaussian_period_direct,
    jacobi_closed,
    jacobi_sum,
    quadratic_index,
    reduced_jacobi_closed,
)
from cyclocode.code_family import (
    build_lambda,
    codeword,
    distribution_to_json,
    hamming_weight,
    theorem1_distribution,
    theorem1_rows,
    theorem2_distribution,
    theorem3_distribution,
    validate_params,
    weight_by_tracesum,
    weights_by_enumeration,
    weights_by_tracesum,
)
from cyclocode.charsum import gaussian_period_table
from cyclocode.cyclotomic import CyclotomicValue
from cyclocode.finite_field import build_field
from cyclocode.omega import (
    OmegaPattern,
    omega_bruteforce,
    omega_closed,
    omega_sum_form,
    omega_table_bruteforce,
    omega_via_jacobi,
)
from cyclocode.polynomials import parity_check_polynomial

EX1_A2 = {0: 1, 4: 72, 6: 312, 7: 864, 8: 1740, 9: 3408, 10: 5184, 11: 3168, 12: 876}
EX1_A1 = {0: 1, 8: 24, 10: 96, 12: 312, 14: 816, 16: 1680, 18: 3456, 20: 5208, 22: 3168, 24: 864}


def _ref_field():
    return build_field(5, 1, 2, modulus=[2, 4, 1], gamma_poly=[0, 1])


def _dist_bytes(dist):
    return json.dumps(distribution_to_json(dist)["distribution"], sort_keys=True).encode()


def _problems(checks):
    return [name for name, ok in checks if not ok]


@pytest.mark.acceptance(1, "first worked code (a=2) by four methods")
def test_criterion_1_example_a2():
    start = time.perf_counter()
    P = validate_params(_ref_field(), 4, 3, 2, (1, 2, 3))
    enum = weights_by_enumeration(P)
    trace = weights_by_tracesum(P)
    th1 = theorem1_distribution(P)
    th2 = theorem2_distribution(P)
    elapsed = time.perf_counter() - start
    blobs = {_dist_bytes(d) for d in (enum, trace, th1, th2)}
    checks = [
        ("a_i", P.exponents == (8, 14, 20)),
        ("delta", P.delta == 2),
        ("n", P.n == 12),
        ("h(x)", str(parity_check_polynomial(P)) == "x^6 + 3x^5 + 3x^3 + 3x + 4"),
        ("min distance", enum.min_distance() == 4),
        ("enumerator", enum.entries == EX1_A2),
        ("byte-identical", len(blobs) == 1),
        ("table III tag", th2.detail == "Table III"),
        ("runtime < 1 s", elapsed < 1.0),
    ]
    assert not _problems(checks), _problems(checks)


@pytest.mark.acceptance(2, "second worked code (a=1) by four methods")
def test_criterion_2_example_a1():
    start = time.perf_counter()
    P = validate_params(_ref_field(), 4, 3, 1, (1, 2, 3))
    enum = weights_by_enumeration(P)
    trace = weights_by_tracesum(P)
    th2 = theorem2_distribution(P)
    lam = build_lambda(P)
    th3 = theorem3_distribution(P, lam)
    elapsed = time.perf_counter() - start
    h = str(parity_check_polynomial(P))
    blobs = {_dist_bytes(d) for d in (enum, trace, th2, th3)}
    checks = [
        ("a_i", P.exponents == (7, 13, 19)),
        ("delta", P.delta == 1),
        ("n", P.n == 24),
        ("min distance", enum.min_distance() == 8),
        ("enumerator", enum.entries == EX1_A1),
        ("byte-identical", len(blobs) == 1),
        ("table IV tag", th2.detail == "Table IV"),
        ("l0, l1", (lam.l0, lam.l1) == (1, 2)),
        ("runtime < 1 s", elapsed < 1.0),
        (f"h(x) = x^6 + 2x^5 + 4x^4 + x^3 + 2x^2 + 3x + 4 (computed {h})",
         h == "x^6 + 2x^5 + 4x^4 + x^3 + 2x^2 + 3x + 4"),
    ]
    assert not _problems(checks), _problems(checks)


@pytest.mark.acceptance(3, "conservation identities on both worked codes")
def test_criterion_3_conservation():
    F = _ref_field()
    for a in (2, 1):
        P = validate_params(F, 4, 3, a, (1, 2, 3))
        dist = weights_by_enumeration(P)
        assert dist.total() == 15625 == P.r**P.t
        assert dist.first_moment() == P.n * (P.q - 1) * P.q ** (P.dim - 1)
        if a == 2:
            assert dist.first_moment() == 150000


@pytest.mark.acceptance(4, "quadratic Gaussian periods, closed form = direct")
def test_criterion_4_gaussian_periods():
    start = time.perf_counter()
    fields = [(3, 1, 2), (5, 1, 2), (7, 1, 2), (3, 1, 4)]
    got = {}
    for p, s, m in fields:
        F = build_field(p, s, m)
        direct = tuple(gaussian_period_direct(F, 2, i).to_int() for i in range(2))
        assert gaussian_period_closed_N2(F) == direct
        got[F.r] = direct
    assert got[25] == (-3, 2)
    assert got[9] == (1, -2)
    assert time.perf_counter() - start < 1.0


@pytest.mark.acceptance(5, "Jacobi and reduced Jacobi sums, brute force = closed form")
def test_criterion_5_jacobi():
    start = time.perf_counter()
    for p in (3, 5):
        F = build_field(p, 1, 2)
        rho = quadratic_index(F)
        for k in (2, 3, 4):
            for bits in product((0, 1), repeat=k):
                chars = [rho if b else 0 for b in bits]
                n_eps = bits.count(0)
                J = jacobi_sum(F, chars).to_int()
                Jr = jacobi_sum(F, chars, reduced=True).to_int()
                assert J == jacobi_closed(F, k, n_eps)
                assert Jr == reduced_jacobi_closed(F, k, n_eps).to_int()
                if n_eps == k:
                    assert J == F.r ** (k - 1)
                elif n_eps:
                    assert J == 0
    assert time.perf_counter() - start < 30.0


@pytest.mark.acceptance(6, "pattern counts agree four ways, listed values hold")
def test_criterion_6_omega():
    start = time.perf_counter()
    for p in (3, 5, 7):
        F = build_field(p, 1, 2)
        r = F.r
        for length in range(2, 6):
            for bits in product((0, 1), repeat=length):
                pat = OmegaPattern(bits)
                brute = omega_bruteforce(pat, F)
                assert omega_via_jacobi(pat, F) == brute, (r, pat)
                assert omega_sum_form(pat, F) == brute, (r, pat)
                assert omega_closed(pat.zeros, pat.ones, F) == brute, (r, pat)
        listed = {
            "00": (r - 1) // 2,
            "01": 0,
            "000": (r - 1) * (r - 5) // 8,
            "001": (r - 1) ** 2 // 8,
            "0000": (r - 1) * (r * r - 2 * r + 9) // 16,
            "0001": (r - 1) * (r * r - 4 * r + 3) // 16,
            "0011": (r - 1) ** 3 // 16,
        }
        for text, value in listed.items():
            assert omega_bruteforce(OmegaPattern.parse(text), F) == value, (r, text)
    assert time.perf_counter() - start < 60.0


@pytest.mark.acceptance(7, "third instance (q,m,e,t,a)=(9,2,3,2,2), deltas (1,2)")
def test_criterion_7_third_instance():
    start = time.perf_counter()
    F = build_field(3, 2, 2)
    P = validate_params(F, 3, 2, 2, (1, 2))
    assert P.N == 2 and P.t == P.e - 1 == 2
    enum = weights_by_enumeration(P)
    assert enum.total() == 6561
    assert enum == weights_by_tracesum(P)
    assert enum == theorem1_distribution(P)
    assert enum == theorem3_distribution(P)
    assert len(enum.nonzero_weights()) <= 6
    row = [f for k, u, _, f in theorem1_rows(P) if (k, u) == (1, 1)]
    assert row == [0]
    assert time.perf_counter() - start < 5.0


@pytest.mark.acceptance(8, "property suite on random samples")
def test_criterion_8_properties():
    start = time.perf_counter()
    rng = random.Random(20261016)

    for p in (3, 5, 7):
        F = build_field(p, 1, 2)
        # additive orthogonality
        for a in rng.sample(range(F.r), 5) + [0]:
            total = CyclotomicValue.from_int(F.p, 0)
            for x in F.elements():
                total = total + additive_character(F, F.mul(a, x))
            assert total.to_int() == (F.r if a == 0 else 0)
        # multiplicative orthogonality for eps and rho
        for j in (0, quadratic_index(F)):
            s = sum(character_value(F, j, x) for x in F.nonzero())
            assert s == (F.order if j == 0 else 0)

    F = build_field(5, 1, 2)
    rho = quadratic_index(F)
    for bits in [(1, 0, 0), (1, 1, 0), (1, 0, 1, 0)]:
        chars = [rho if b else 0 for b in bits]
        base = jacobi_sum(F, chars, reduced=True)
        for perm in set(permutations(chars)):
            assert jacobi_sum(F, list(perm), reduced=True) == base

    for p in (3, 5):
        F = build_field(p, 1, 2)
        for u in (1, 2, 3):
            table, zero_sum = omega_table_bruteforce(F, u)
            assert sum(table.values()) + zero_sum == F.order**u
            for pat, val in table.items():
                assert val == omega_bruteforce(OmegaPattern(tuple(sorted(pat.bits))), F)

    instances = [
        (_ref_field(), 4, 3, 2, (1, 2, 3)),
        (_ref_field(), 4, 3, 1, (1, 2, 3)),
        (build_field(7, 1, 2), 3, 2, 2, (1, 2)),
        (build_field(5, 1, 2), 3, 2, 1, (0, 1)),
    ]
    for F, e, t, a, deltas in instances:
        P = validate_params(F, e, t, a, deltas)
        table = gaussian_period_table(F, P.N)
        for _ in range(1000):
            x = [rng.randrange(F.r) for _ in range(t)]
            assert hamming_weight(codeword(P, x)) == weight_by_tracesum(P, x, table)
    assert time.perf_counter() - start < 60.0


def test_valid_third_instance_over_gf49():
    """A nearby instance that satisfies every condition: (q,m,e,t,a)=(7,2,3,2,2)."""
    F = build_field(7, 1, 2)
    P = validate_params(F, 3, 2, 2, (1, 2))
    assert P.N == 2 and P.exponents == (18, 34)
    enum = weights_by_enumeration(P)
    assert enum.total() == 49**2
    assert enum == weights_by_tracesum(P) == theorem1_distribution(P) == theorem3_distribution(P)
    assert len(enum.nonzero_weights()) <= 6
    assert [f for k, u, _, f in theorem1_rows(P) if (k, u) == (1, 1)] == [0]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))

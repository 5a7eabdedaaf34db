import random

import pytest
from hypothesis import given, settings, strategies as st

from cyclocode.charsum import gaussian_period_table
from cyclocode.code_family import (
    WeightDistribution,
    auto_theorem,
    build_lambda,
    codeword,
    hamming_weight,
    minimal_distance,
    theorem1_distribution,
    theorem1_rows,
    theorem2_distribution,
    theorem3_distribution,
    theorem_min_distance,
    tracesum_T,
    validate_params,
    weight_by_tracesum,
    weights_by_enumeration,
    weights_by_tracesum,
)
from cyclocode.errors import (
    BudgetExceededError,
    ConditionIError,
    ConditionIIError,
    ConditionIIIError,
    PreconditionsNotMetError,
    TRangeError,
)
from cyclocode.finite_field import build_field


@pytest.fixture(scope="module")
def ex_a2(gf25_ref):
    return validate_params(gf25_ref, 4, 3, 2, (1, 2, 3))


@pytest.fixture(scope="module")
def ex_a1(gf25_ref):
    return validate_params(gf25_ref, 4, 3, 1, (1, 2, 3))


def _instances():
    """(label, params) for several shapes of N, t and field."""
    gf25 = build_field(5, 1, 2)
    return [
        ("gf49 e=3", validate_params(build_field(7, 1, 2), 3, 2, 2, (1, 2))),
        ("N=3", validate_params(gf25, 3, 2, 1, (0, 1))),
        ("N=1", validate_params(build_field(3, 1, 3), 2, 2, 1, (0, 1))),
        ("t=e", validate_params(gf25, 4, 4, 1, (0, 1, 2, 3))),
        ("N=4", validate_params(build_field(7, 1, 2), 4, 4, 1, (0, 1, 2, 3))),
        ("q=9", validate_params(build_field(3, 2, 2), 4, 3, 1, (1, 2, 3))),
    ]


def test_derived_parameters(ex_a2, ex_a1):
    assert (ex_a2.exponents, ex_a2.N, ex_a2.delta, ex_a2.n) == ((8, 14, 20), 2, 2, 12)
    assert (ex_a1.exponents, ex_a1.N, ex_a1.delta, ex_a1.n) == ((7, 13, 19), 2, 1, 24)
    assert ex_a2.dim == 6


def test_condition_errors(gf25_ref):
    F = gf25_ref
    with pytest.raises(ConditionIError):
        validate_params(F, 4, 3, 0, (1, 2, 3))
    with pytest.raises(ConditionIError):
        validate_params(F, 5, 3, 1, (1, 2, 3))
    with pytest.raises(ConditionIIError, match="condition ii: deltas not distinct mod e"):
        validate_params(F, 4, 3, 1, (1, 5, 3))
    with pytest.raises(ConditionIIError):
        validate_params(F, 4, 2, 1, (0, 2))
    with pytest.raises(TRangeError):
        validate_params(F, 4, 1, 1, (1,))
    with pytest.raises(TRangeError):
        validate_params(F, 4, 5, 1, (0, 1, 2, 3, 4))


def test_condition_iii(gf25_ref):
    # a = 6 with e = 4 gives exponents 6 and 12, whose cosets have size 2 and 1
    with pytest.raises(ConditionIIIError):
        validate_params(gf25_ref, 4, 2, 6, (0, 1))


def test_second_condition_instance_from_third_criterion():
    with pytest.raises(ConditionIError, match="e=3 does not divide r-1=80"):
        validate_params(build_field(3, 2, 2), 3, 2, 2, (1, 2))


def test_lambda(ex_a2, ex_a1):
    F = ex_a2.field
    for P, expect in ((ex_a2, (3, 0)), (ex_a1, (1, 2))):
        lam = build_lambda(P)
        assert (lam.l0, lam.l1) == expect
        assert all(x != 0 for x in lam.lam)
        row = (1,) + lam.lam
        for tau in range(P.t):
            acc = 0
            for h in range(P.t + 1):
                acc = F.add(acc, F.mul(row[h], lam.B[h][tau]))
            assert acc == 0


def test_enumeration_examples(ex_a2, ex_a1):
    assert weights_by_enumeration(ex_a2).entries[11] == 3168
    assert weights_by_enumeration(ex_a1).entries[24] == 864


def test_all_routes_agree_on_examples(ex_a2, ex_a1):
    for P in (ex_a2, ex_a1):
        enum = weights_by_enumeration(P)
        assert enum == weights_by_tracesum(P) == theorem2_distribution(P) == theorem3_distribution(P)
    assert weights_by_enumeration(ex_a2) == theorem1_distribution(ex_a2)


def test_theorem1_details(ex_a2):
    rows = theorem1_rows(ex_a2)
    assert [f for k, u, _, f in rows if (k, u) == (1, 1)] == [0]
    dist = theorem1_distribution(ex_a2)
    t = ex_a2.t
    assert len(dist.nonzero_weights()) <= (t * t + 5 * t - 2) // 2
    assert theorem_min_distance(ex_a2) == 4 == minimal_distance(dist)
    assert dist.detail == "Table I"


def test_theorem1_rejects_odd_a(ex_a1):
    with pytest.raises(PreconditionsNotMetError, match="a=1 is odd"):
        theorem1_distribution(ex_a1)


def test_auto_prefers_strongest(ex_a2, ex_a1):
    assert auto_theorem(ex_a2).label == "theorem1(Table I)"
    assert auto_theorem(ex_a1).label == "theorem2(Table IV)"


def test_table_iv_total(ex_a1):
    dist = theorem2_distribution(ex_a1)
    assert dist.total() == ex_a1.r**3
    assert len(dist.nonzero_weights()) <= 12


_INSTANCES = _instances()


@pytest.mark.parametrize("label,P", _INSTANCES, ids=[label for label, _ in _INSTANCES])
def test_enumeration_equals_tracesum(label, P):
    enum = weights_by_enumeration(P)
    assert enum == weights_by_tracesum(P)
    assert enum.total() == P.r**P.t
    assert enum.entries[0] == 1
    assert enum.first_moment() == P.n * (P.q - 1) * P.q ** (P.dim - 1)


def test_theorem3_on_q9():
    P = validate_params(build_field(3, 2, 2), 4, 3, 1, (1, 2, 3))
    enum = weights_by_enumeration(P)
    assert enum == theorem2_distribution(P) == theorem3_distribution(P)
    assert theorem2_distribution(P).detail == "Table IV"


def test_no_closed_form_for_n3():
    P = validate_params(build_field(5, 1, 2), 3, 2, 1, (0, 1))
    assert P.N == 3
    with pytest.raises(PreconditionsNotMetError, match="N=3"):
        auto_theorem(P)


def test_zero_tuple_weight(ex_a2):
    assert hamming_weight(codeword(ex_a2, (0, 0, 0))) == 0
    T = tracesum_T(ex_a2, (0, 0, 0))
    assert T.to_int() == ex_a2.e * (ex_a2.r - 1) // ex_a2.N
    assert weight_by_tracesum(ex_a2, (0, 0, 0)) == 0


def test_unit_vector_weight_in_table(ex_a2, ex_a1):
    for P in (ex_a2, ex_a1):
        w = hamming_weight(codeword(P, (1, 0, 0)))
        assert w in theorem2_distribution(P).entries
        assert w == weight_by_tracesum(P, (1, 0, 0))


def test_cyclic_closure(ex_a1):
    P, F = ex_a1, ex_a1.field
    rng = random.Random(7)
    for _ in range(100):
        x = [rng.randrange(F.r) for _ in range(P.t)]
        word = codeword(P, x)
        shifted = word[-1:] + word[:-1]
        x2 = [F.mul(xj, F.exp(-aj)) for xj, aj in zip(x, P.exponents)]
        assert codeword(P, x2) == shifted


def test_only_zero_tuple_gives_zero_word(ex_a2):
    dist = weights_by_enumeration(ex_a2)
    assert dist.entries[0] == 1


def test_zero_code_has_no_distance():
    assert WeightDistribution({0: 1}, "enumeration").min_distance() is None


def test_budget(ex_a2):
    with pytest.raises(BudgetExceededError):
        weights_by_enumeration(ex_a2, budget=100)
    with pytest.raises(BudgetExceededError):
        weights_by_tracesum(ex_a2, budget=100)


def test_threads_do_not_change_result(ex_a1):
    assert weights_by_enumeration(ex_a1, threads=1) == weights_by_enumeration(ex_a1, threads=4)


@settings(max_examples=200, deadline=None)
@given(st.tuples(st.integers(0, 24), st.integers(0, 24), st.integers(0, 24)), st.sampled_from([1, 2]))
def test_weight_formula_matches_definition(x, a):
    F = build_field(5, 1, 2, modulus=[2, 4, 1], gamma_poly=[0, 1])
    P = validate_params(F, 4, 3, a, (1, 2, 3))
    assert hamming_weight(codeword(P, x)) == weight_by_tracesum(P, x)


@pytest.mark.slow
def test_larger_instance_gf169():
    P = validate_params(build_field(13, 1, 2), 4, 3, 1, (1, 2, 3))
    enum = weights_by_enumeration(P)
    assert enum == theorem2_distribution(P) == theorem3_distribution(P)
    table = gaussian_period_table(P.field, P.N)
    rng = random.Random(3)
    for _ in range(200):
        x = [rng.randrange(P.r) for _ in range(P.t)]
        assert hamming_weight(codeword(P, x)) == weight_by_tracesum(P, x, table)

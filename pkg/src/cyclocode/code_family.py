"""The codes C_(a_1..a_t) and their weight distributions.

Three independent routes are implemented:

* enumeration of every codeword from the trace definition,
* the Gaussian-period formula ``w = (r-1)(q-1)/(q delta) - N(q-1)/(e q delta) * T(x)``,
* closed-form tables for N = 2, t = e - 1 (theorem1/2/3_distribution).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb

import numpy as np

from . import kernels
from .charsum import (
    GaussianPeriodTable,
    gaussian_period_closed_N2,
    gaussian_period_table,
)
from .cyclotomic import CyclotomicValue
from .errors import (
    BudgetExceededError,
    ConditionIError,
    ConditionIIError,
    ConditionIIIError,
    NonIntegerWeightError,
    NonRationalValueError,
    PreconditionsNotMetError,
    RankDeficientError,
    TRangeError,
)
from .finite_field import FieldSpec
from .omega import omega_closed
from .polynomials import cyclotomic_coset


def _binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True)
class CodeParams:
    field: FieldSpec
    e: int
    t: int
    a: int
    deltas: tuple
    exponents: tuple        # a_1 .. a_t
    N: int
    delta: int
    n: int
    g: int                  # gamma^a
    beta: int               # gamma^((r-1)/e)
    betas: tuple            # beta^Delta_tau

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def r(self) -> int:
        return self.field.r

    @property
    def dim(self) -> int:
        return self.t * self.field.m

    @property
    def sqrt_r(self) -> int | None:
        root = math.isqrt(self.r)
        return root if root * root == self.r else None

    def applicability(self) -> dict:
        m = self.field.m
        return {
            "N_is_2": self.N == 2,
            "t_is_e_minus_1": self.t == self.e - 1,
            "a_even": self.a % 2 == 0,
            "e_divides_sqrt_q_minus_1": m % 2 == 0 and (self.q ** (m // 2) - 1) % self.e == 0,
        }

    def as_dict(self) -> dict:
        F = self.field
        return {
            "p": F.p, "s": F.s, "m": F.m, "e": self.e, "t": self.t, "a": self.a,
            "deltas": list(self.deltas), "N": self.N, "delta": self.delta,
            "n": self.n, "dim": self.dim,
        }


def validate_params(field: FieldSpec, e: int, t: int, a: int, deltas) -> CodeParams:
    """Check conditions i)-iii) and 2 <= t <= e, then derive everything else."""
    deltas = tuple(int(d) for d in deltas)
    order = field.order
    if len(deltas) != t:
        raise TRangeError(f"t={t} but {len(deltas)} deltas given", datum=deltas)
    if not 2 <= t <= e:
        raise TRangeError(f"need 2 <= t <= e, got t={t}, e={e}", datum=(t, e))
    if a % order == 0:
        raise ConditionIError(f"a={a} is 0 mod r-1={order}", datum=a)
    if e < 1 or order % e:
        raise ConditionIError(f"e={e} does not divide r-1={order}", datum=e)
    if len({d % e for d in deltas}) != t:
        raise ConditionIIError("deltas not distinct mod e", datum=deltas)
    g = e
    for d in deltas[1:]:
        g = math.gcd(g, d - deltas[0])
    if g != 1:
        raise ConditionIIError(f"gcd(Delta_i - Delta_1, e) = {g} != 1", datum=deltas)

    exponents = tuple((a + order * d // e) % order for d in deltas)
    cosets = [cyclotomic_coset(x, field) for x in exponents]
    for x, c in zip(exponents, cosets):
        if len(c) != field.m:
            raise ConditionIIIError(f"deg h_{x} = {len(c)} != m = {field.m}", datum=x)
    if len({c.members for c in cosets}) != t:
        raise ConditionIIIError("two of the h_{a_i} coincide", datum=exponents)

    N = math.gcd(order // (field.q - 1), a * e)
    delta = order
    for x in exponents:
        delta = math.gcd(delta, x)
    beta = field.exp(order // e)
    return CodeParams(
        field=field, e=e, t=t, a=a, deltas=deltas, exponents=exponents,
        N=N, delta=delta, n=order // delta, g=field.exp(a), beta=beta,
        betas=tuple(field.pow(beta, d) for d in deltas),
    )


# ---------------------------------------------------------------------------
# weight distributions

@dataclass
class WeightDistribution:
    entries: dict                       # weight -> frequency
    method: str
    detail: str = ""
    params: CodeParams | None = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.entries = {int(w): int(f) for w, f in sorted(self.entries.items()) if f}

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return self.entries == other.entries

    def total(self) -> int:
        return sum(self.entries.values())

    def first_moment(self) -> int:
        return sum(w * f for w, f in self.entries.items())

    def nonzero_weights(self) -> list[int]:
        return [w for w in self.entries if w > 0]

    def min_distance(self) -> int | None:
        ws = self.nonzero_weights()
        return min(ws) if ws else None

    @property
    def label(self) -> str:
        return f"{self.method}({self.detail})" if self.detail else self.method

    def checks(self) -> dict:
        out = {}
        P = self.params
        if P is not None:
            out["sum_freq"] = "pass" if self.total() == P.r**P.t else "fail"
            expected = P.n * (P.q - 1) * P.q ** (P.dim - 1)
            out["first_moment"] = "pass" if self.first_moment() == expected else "fail"
        return out

    def enumerator(self) -> str:
        terms = []
        for w, f in self.entries.items():
            terms.append(str(f) if w == 0 else f"{f}Y^{w}")
        return " + ".join(terms)


def minimal_distance(dist: WeightDistribution) -> int | None:
    """Smallest positive weight; None for the zero code."""
    return dist.min_distance()


def theorem_min_distance(params: CodeParams) -> int:
    S = params.sqrt_r
    val = Fraction(2 * (params.q - 1) * (params.r - S), (params.t + 1) * params.q * params.delta)
    if val.denominator != 1:
        raise NonIntegerWeightError(f"d = {val}")
    return int(val)


# -- route A: enumeration ------------------------------------------------------

def _subfield_codes(field: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    """Map GF(r) codes of GF(q) elements to 0..q-1, plus the GF(q) addition table."""
    subs = field.subfield_elements()
    to_sub = np.full(field.r, -1, dtype=np.int64)
    for i, x in enumerate(subs):
        to_sub[x] = i
    add = np.array([[to_sub[field.add(x, y)] for y in subs] for x in subs], dtype=np.int32)
    return to_sub, add


def coordinate_tables(params: CodeParams) -> np.ndarray:
    """``words[j, x, i]`` = tr_{r/q}(x gamma^{a_j i}) as a GF(q) code."""
    F = params.field
    to_sub, _ = _subfield_codes(F)
    logs = np.arange(F.order, dtype=np.int64)
    i = np.arange(params.n, dtype=np.int64)
    words = np.zeros((params.t, F.r, params.n), dtype=np.int32)
    nz = F.np_exp  # codes of gamma^0 .. gamma^(r-2)
    for j, aj in enumerate(params.exponents):
        prod = F.np_exp[(logs[:, None] + aj * i[None, :]) % F.order]
        words[j, nz] = to_sub[F.np_trace_q[prod]]
    return words


def codeword(params: CodeParams, x) -> list[int]:
    """(tr_{r/q}(sum_j x_j gamma^{a_j i}))_{i < n}, entries as GF(r) codes."""
    F = params.field
    out = []
    for i in range(params.n):
        acc = 0
        for xj, aj in zip(x, params.exponents):
            acc = F.add(acc, F.mul(xj, F.exp(aj * i)))
        out.append(F.trace(acc, "q"))
    return out


def hamming_weight(word) -> int:
    return sum(1 for c in word if c)


def weights_by_enumeration(params: CodeParams, budget: int | None = None, threads: int = 1,
                           backend: str | None = None) -> WeightDistribution:
    budget = kernels.default_budget() if budget is None else budget
    cost = params.r**params.t * params.n
    if cost > budget:
        raise BudgetExceededError(f"{cost} symbol evaluations exceed the budget {budget}")
    words = coordinate_tables(params)
    _, add = _subfield_codes(params.field)
    hist = kernels.weight_histogram(words, add, threads=threads, backend=backend)
    entries = {w: int(c) for w, c in enumerate(hist) if c}
    return WeightDistribution(entries, "enumeration", params=params)


# -- route B: Gaussian-period sums -----------------------------------------

def _weight_from_T(params: CodeParams, T: CyclotomicValue) -> int:
    try:
        Tv = T.to_int()
    except NonRationalValueError as exc:
        raise NonRationalValueError(f"T(x) = {T} is not rational") from exc
    q, d = params.q, params.delta
    w = Fraction((params.r - 1) * (q - 1), q * d) - Fraction(params.N * (q - 1), params.e * q * d) * Tv
    if w.denominator != 1 or w < 0:
        raise NonIntegerWeightError(f"weight {w} from T = {Tv}")
    return int(w)


def tracesum_T(params: CodeParams, x, table: GaussianPeriodTable | None = None) -> CyclotomicValue:
    F = params.field
    if table is None:
        table = gaussian_period_table(F, params.N)
    T = CyclotomicValue.from_int(F.p, 0)
    for h in range(params.e):
        y = 0
        for xt, bt in zip(x, params.betas):
            y = F.add(y, F.mul(xt, F.pow(bt, h)))
        T = T + table.modified(F, F.mul(F.pow(params.g, h), y))
    return T


def weight_by_tracesum(params: CodeParams, x, table: GaussianPeriodTable | None = None) -> int:
    return _weight_from_T(params, tracesum_T(params, x, table))


def weights_by_tracesum(params: CodeParams, budget: int | None = None,
                        table: GaussianPeriodTable | None = None) -> WeightDistribution:
    """Value distribution of T over all x, vectorized per x_1 slice.

    For each x only the class of every g^h y_h matters, so T is grouped by
    its class-count signature and each distinct signature is evaluated once
    in exact arithmetic.
    """
    F, P = params.field, params
    budget = kernels.default_budget() if budget is None else budget
    cost = P.r**P.t * P.e
    if cost > budget:
        raise BudgetExceededError(f"{cost} evaluations exceed the budget {budget}")
    if table is None:
        table = gaussian_period_table(F, P.N)
    N, e, t = P.N, P.e, P.t
    logs = F.np_log
    cls_of = np.where(np.arange(F.r) == 0, N, logs % N)     # N marks zero
    pw = np.array([F.p**i for i in range(F.degree)], dtype=np.int64)
    # digit vectors of x * g^h beta_tau^h, per (h, tau), shape (r, d)
    digits = []
    for h in range(e):
        row = []
        for bt in P.betas:
            c = F.mul(F.pow(P.g, h), F.pow(bt, h))
            lc = F.log(c)
            prod = np.zeros(F.r, dtype=np.int64)
            prod[1:] = F.np_exp[(logs[1:] + lc) % F.order]
            row.append(F.np_digits[prod])
        digits.append(row)

    base = e + 1
    keys_total: dict[int, int] = {}
    for x1 in range(F.r):
        key = np.zeros((F.r,) * (t - 1), dtype=np.int64)
        for h in range(e):
            acc = digits[h][0][x1]
            for tau in range(1, t):
                shape = [1] * (t - 1) + [F.degree]
                shape[tau - 1] = F.r
                acc = acc + digits[h][tau].reshape(shape)
            code = (acc % F.p) @ pw
            key = key + base ** cls_of[code]
        uniq, cnt = np.unique(key, return_counts=True)
        for k, c in zip(uniq.tolist(), cnt.tolist()):
            keys_total[k] = keys_total.get(k, 0) + c

    entries: dict[int, int] = {}
    for k, c in keys_total.items():
        T = CyclotomicValue.from_int(F.p, 0)
        for j in range(N + 1):
            k, cj = divmod(k, base)
            if cj:
                T = T + (table.zero_value if j == N else table.periods[j]) * cj
        w = _weight_from_T(P, T)
        entries[w] = entries.get(w, 0) + c
    return WeightDistribution(entries, "tracesum", params=P)


# -- route C: closed forms ---------------------------------------------------

def theorem1_failures(params: CodeParams) -> list[str]:
    ap = params.applicability()
    out = []
    if not ap["N_is_2"]:
        out.append(f"N={params.N}")
    if not ap["t_is_e_minus_1"]:
        out.append(f"t={params.t} != e-1={params.e - 1}")
    if not ap["e_divides_sqrt_q_minus_1"]:
        out.append(f"e={params.e} does not divide q^(m/2)-1")
    if not ap["a_even"]:
        out.append(f"a={params.a} is odd")
    return out


def theorem2_failures(params: CodeParams) -> list[str]:
    out = []
    if params.N != 2:
        out.append(f"N={params.N}")
    if not (params.t == params.e - 1 == 3):
        out.append(f"need t=e-1=3, got t={params.t}, e={params.e}")
    return out


def theorem3_failures(params: CodeParams) -> list[str]:
    out = []
    if params.N != 2:
        out.append(f"N={params.N}")
    if params.t != params.e - 1:
        out.append(f"t={params.t} != e-1={params.e - 1}")
    return out


def _exact(val: Fraction, what: str) -> int:
    if val.denominator != 1:
        raise NonIntegerWeightError(f"{what} = {val} is not an integer")
    return int(val)


def _merge(rows) -> dict:
    out: dict[int, int] = {}
    for w, f in rows:
        if f:
            out[w] = out.get(w, 0) + f
    return out


def theorem1_distribution(params: CodeParams) -> WeightDistribution:
    failed = theorem1_failures(params)
    if failed:
        raise PreconditionsNotMetError(failed)
    q, r, t, d, m = params.q, params.r, params.t, params.delta, params.m
    S = params.sqrt_r
    if q % 4 == 1:
        eps, table = 1, "Table I"
    else:
        eps, table = (-1) ** (m // 2), "Table II"
    rows = [(0, 1)]
    for k in range(1, t + 1):
        for u in range(k + 2):
            w = Fraction(q - 1, (t + 1) * q * d) * ((k + 1) * r - eps * (k + 1 - 2 * u) * S)
            sym = (1 + S) ** u * (1 - S) ** (k + 1 - u) + (1 - S) ** u * (1 + S) ** (k + 1 - u)
            brace = 2 * (r - 1) ** k - (-1) ** k * sym
            f = Fraction((r - 1) * comb(t + 1, k + 1) * comb(k + 1, u) * brace, r * 2 ** (k + 2))
            rows.append((_exact(w, "weight"), _exact(f, "frequency")))
    return WeightDistribution(_merge(rows), "theorem1", table, params=params)


def theorem1_rows(params: CodeParams) -> list[tuple[int, int, int, int]]:
    """(k, u, weight, frequency) rows before merging, zero rows included."""
    q, r, t, d, m = params.q, params.r, params.t, params.delta, params.m
    S = params.sqrt_r
    eps = 1 if q % 4 == 1 else (-1) ** (m // 2)
    out = []
    for k in range(1, t + 1):
        for u in range(k + 2):
            w = Fraction(q - 1, (t + 1) * q * d) * ((k + 1) * r - eps * (k + 1 - 2 * u) * S)
            sym = (1 + S) ** u * (1 - S) ** (k + 1 - u) + (1 - S) ** u * (1 + S) ** (k + 1 - u)
            brace = 2 * (r - 1) ** k - (-1) ** k * sym
            f = Fraction((r - 1) * comb(t + 1, k + 1) * comb(k + 1, u) * brace, r * 2 ** (k + 2))
            out.append((k, u, _exact(w, "weight"), _exact(f, "frequency")))
    return out


# weight = (q-1)/(delta q) * scale * (r_coef * r + s_coef * sqrt(r)); frequency(r)
_TABLE_III = [
    (Fraction(1, 2), 1, 1, lambda r: 3 * (r - 1)),
    (Fraction(1, 2), 1, -1, lambda r: 3 * (r - 1)),
    (Fraction(3, 4), 1, 1, lambda r: Fraction((r - 1) * (r - 5), 2)),
    (Fraction(3, 4), 1, -1, lambda r: Fraction((r - 1) * (r - 5), 2)),
    (Fraction(1, 4), 3, 1, lambda r: Fraction(3 * (r - 1) ** 2, 2)),
    (Fraction(1, 4), 3, -1, lambda r: Fraction(3 * (r - 1) ** 2, 2)),
    (Fraction(1), 1, 1, lambda r: Fraction((r - 1) * (r * r - 2 * r + 9), 16)),
    (Fraction(1), 1, -1, lambda r: Fraction((r - 1) * (r * r - 2 * r + 9), 16)),
    (Fraction(1, 2), 2, 1, lambda r: Fraction((r - 1) * (r * r - 4 * r + 3), 4)),
    (Fraction(1, 2), 2, -1, lambda r: Fraction((r - 1) * (r * r - 4 * r + 3), 4)),
    (Fraction(1), 1, 0, lambda r: Fraction(3 * (r - 1) ** 3, 8)),
]

_TABLE_IV = [
    (Fraction(1, 2), 1, 1, lambda r: r - 1),
    (Fraction(1, 2), 1, -1, lambda r: r - 1),
    (Fraction(1, 2), 1, 0, lambda r: 4 * (r - 1)),
    (Fraction(3, 4), 1, 1, lambda r: Fraction((r - 1) ** 2, 2)),
    (Fraction(3, 4), 1, -1, lambda r: Fraction((r - 1) ** 2, 2)),
    (Fraction(1, 4), 3, 1, lambda r: Fraction((r - 1) * (3 * r - 7), 2)),
    (Fraction(1, 4), 3, -1, lambda r: Fraction((r - 1) * (3 * r - 7), 2)),
    (Fraction(1), 1, 1, lambda r: Fraction((r - 1) ** 3, 16)),
    (Fraction(1), 1, -1, lambda r: Fraction((r - 1) ** 3, 16)),
    (Fraction(1, 2), 2, 1, lambda r: Fraction((r - 1) * (r * r - 4 * r + 3), 4)),
    (Fraction(1, 2), 2, -1, lambda r: Fraction((r - 1) * (r * r - 4 * r + 3), 4)),
    (Fraction(1), 1, 0, lambda r: Fraction((r - 1) * (3 * r * r - 6 * r + 11), 8)),
]


def theorem2_distribution(params: CodeParams) -> WeightDistribution:
    failed = theorem2_failures(params)
    if failed:
        raise PreconditionsNotMetError(failed)
    q, r, d, S = params.q, params.r, params.delta, params.sqrt_r
    if params.a % 2 == 0:
        rows_def, table = _TABLE_III, "Table III"
    else:
        rows_def, table = _TABLE_IV, "Table IV"
    rows = [(0, 1)]
    for scale, rc, sc, freq in rows_def:
        w = Fraction(q - 1, d * q) * scale * (rc * r + sc * S)
        rows.append((_exact(w, "weight"), _exact(Fraction(freq(r)), "frequency")))
    return WeightDistribution(_merge(rows), "theorem2", table, params=params)


@dataclass(frozen=True)
class LambdaData:
    B: tuple                # (t+1) x t, rows h = 0..t
    lam: tuple              # lambda_1 .. lambda_t
    lam_tilde: tuple        # 1 or gamma
    l0: int
    l1: int


def _solve(field: FieldSpec, M, b):
    """Solve M x = b over GF(r) by Gauss-Jordan elimination."""
    n = len(M)
    A = [list(row) + [bi] for row, bi in zip(M, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col]), None)
        if piv is None:
            raise RankDeficientError(f"singular system at column {col}")
        A[col], A[piv] = A[piv], A[col]
        inv = field.inv(A[col][col])
        A[col] = [field.mul(v, inv) for v in A[col]]
        for i in range(n):
            if i != col and A[i][col]:
                c = A[i][col]
                A[i] = [field.sub(v, field.mul(c, w)) for v, w in zip(A[i], A[col])]
    return [A[i][n] for i in range(n)]


def build_lambda(params: CodeParams) -> LambdaData:
    """Left kernel (1, lambda_1..lambda_t) of the selected Vandermonde columns."""
    if params.t != params.e - 1:
        raise PreconditionsNotMetError([f"t={params.t} != e-1={params.e - 1}"])
    F, e, t = params.field, params.e, params.t
    cols = [d % e for d in params.deltas]
    B = tuple(tuple(F.pow(params.beta, h * c) for c in cols) for h in range(t + 1))
    # (1, lambda) B = 0  <=>  B[1:]^T lambda = -B[0]
    Mt = [[B[h][tau] for h in range(1, t + 1)] for tau in range(t)]
    rhs = [F.neg(B[0][tau]) for tau in range(t)]
    lam = _solve(F, Mt, rhs)
    for tau in range(t):
        acc = B[0][tau]
        for h in range(1, t + 1):
            acc = F.add(acc, F.mul(lam[h - 1], B[h][tau]))
        if acc:
            raise RankDeficientError("(1, lambda) B != 0")
    if any(x == 0 for x in lam):
        raise RankDeficientError("some lambda_h vanishes")
    tilde = []
    for h, x in enumerate(lam, start=1):
        tilde.append(F.gamma if F.is_square(F.mul(x, F.pow(params.g, h))) else 1)
    l1 = sum(1 for x in tilde if x != 1)
    return LambdaData(B, tuple(lam), tuple(tilde), t - l1, l1)


def theorem3_frequency(k: int, u: int, l0: int, l1: int, field: FieldSpec) -> int:
    total = 0
    for k0 in range(k + 1):
        for u0 in range(u + 1):
            c = (_binom(l0 + 1, k0) * _binom(l1, k - k0)
                 * _binom(k0, u0) * _binom(k - k0, u - u0))
            if c:
                total += c * omega_closed(2 * u0 + k - k0 - u, k0 + u - 2 * u0, field)
    return total


def theorem3_distribution(params: CodeParams, lam: LambdaData | None = None) -> WeightDistribution:
    failed = theorem3_failures(params)
    if failed:
        raise PreconditionsNotMetError(failed)
    if lam is None:
        lam = build_lambda(params)
    F, q, r, t, d = params.field, params.q, params.r, params.t, params.delta
    eta0, eta1 = gaussian_period_closed_N2(F)
    rows = [(0, 1)]
    for k in range(2, t + 2):
        for u in range(k + 1):
            w = Fraction(q - 1, (t + 1) * q * d) * (k * (r - 1) - 2 * u * eta0 - 2 * (k - u) * eta1)
            rows.append((_exact(w, "weight"), theorem3_frequency(k, u, lam.l0, lam.l1, F)))
    # exactly one nonzero y is impossible under y_0 + ... = 0, so k = 0 and
    # k >= 2 must account for all r^t tuples
    mass = sum(f for _, f in rows)
    if mass != r**t:
        raise AssertionError(f"frequencies sum to {mass}, expected r^t = {r ** t}")
    return WeightDistribution(_merge(rows), "theorem3", f"l0={lam.l0}, l1={lam.l1}", params=params)


def auto_theorem(params: CodeParams) -> WeightDistribution:
    """Strongest applicable closed form, trying theorem1, theorem2, theorem3 in turn."""
    if not theorem1_failures(params):
        return theorem1_distribution(params)
    if not theorem2_failures(params):
        return theorem2_distribution(params)
    if not theorem3_failures(params):
        return theorem3_distribution(params)
    raise PreconditionsNotMetError(theorem3_failures(params))


def distribution_to_json(dist: WeightDistribution) -> dict:
    P = dist.params
    return {
        "params": P.as_dict() if P is not None else None,
        "method": dist.method,
        "method_detail": dist.label,
        "distribution": [{"weight": w, "frequency": str(f)} for w, f in dist.entries.items()],
        "min_distance": dist.min_distance(),
        "checks": dist.checks(),
    }

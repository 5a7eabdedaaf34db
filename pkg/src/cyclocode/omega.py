"""Counts of square/nonsquare tuples whose sum lands in a given class.

For a bit pattern i_1 ... i_u i_{u+1}, Omega counts tuples
(x_1, ..., x_u) with x_j in C_{i_j}^{(2,r)} and x_1 + ... + x_u in
C_{i_{u+1}}^{(2,r)}.  Four evaluations are provided: direct enumeration,
an expansion in reduced quadratic Jacobi sums, a subset-sum form and a
closed form in sqrt(r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from . import kernels
from .charsum import quadratic_character, reduced_jacobi_by_count
from .errors import (
    BudgetExceededError,
    MinusOneNotSquareError,
    NonIntegerResultError,
)
from .finite_field import FieldSpec


@dataclass(frozen=True)
class OmegaPattern:
    bits: tuple

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if len(bits) < 2:
            raise ValueError("an Omega pattern needs at least two bits")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("pattern bits must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def parse(cls, text: str) -> "OmegaPattern":
        return cls(tuple(int(ch) for ch in text.strip()))

    @classmethod
    def from_counts(cls, zeros: int, ones: int) -> "OmegaPattern":
        return cls((0,) * zeros + (1,) * ones)

    @property
    def u(self) -> int:
        return len(self.bits) - 1

    @property
    def zeros(self) -> int:
        return self.bits.count(0)

    @property
    def ones(self) -> int:
        return self.bits.count(1)

    def __str__(self):
        return "".join(map(str, self.bits))


def _require_quadratic(field: FieldSpec):
    if field.order % 2:
        raise ValueError("quadratic classes need odd characteristic")


def _require_minus_one_square(field: FieldSpec):
    if field.is_square(field.neg(1)):
        raise MinusOneNotSquareError(f"-1 is not a square in GF({field.r})")


def _class_logs(field: FieldSpec, i: int) -> range:
    return range(i, field.order, 2)


def omega_bruteforce(pattern: OmegaPattern, field: FieldSpec, budget: int | None = None,
                     threads: int = 1, backend: str | None = None) -> int:
    _require_quadratic(field)
    budget = kernels.default_budget() if budget is None else budget
    cost = (field.order // 2) ** pattern.u
    if cost > budget:
        raise BudgetExceededError(f"{cost} tuples exceed the budget {budget}")
    cands = [_class_logs(field, i) for i in pattern.bits[:-1]]
    counts = kernels.sum_class_counts(cands, field.zech_table, field.order,
                                      threads=threads, backend=backend)
    return int(counts[pattern.bits[-1]])


def omega_table_bruteforce(field: FieldSpec, u: int, budget: int | None = None,
                           threads: int = 1, backend: str | None = None) -> tuple[dict, int]:
    """All 2^(u+1) patterns of length u+1 in one sweep, plus the zero-sum count."""
    _require_quadratic(field)
    budget = kernels.default_budget() if budget is None else budget
    if field.order**u > budget:
        raise BudgetExceededError(f"{field.order ** u} tuples exceed the budget {budget}")
    table, zero_sum = {}, 0
    for prefix in product((0, 1), repeat=u):
        cands = [_class_logs(field, i) for i in prefix]
        c = kernels.sum_class_counts(cands, field.zech_table, field.order,
                                     threads=threads, backend=backend)
        table[OmegaPattern(prefix + (0,))] = int(c[0])
        table[OmegaPattern(prefix + (1,))] = int(c[1])
        zero_sum += int(c[2])
    return table, zero_sum


def omega_via_jacobi(pattern: OmegaPattern, field: FieldSpec, jacobi: str = "closed",
                     exponent_range: str = "statement") -> int:
    """Expansion over v_2..v_{u+1} in {0,1} of signed reduced Jacobi sums.

    ``exponent_range="statement"`` sums the sign exponent over j = 2..u+1;
    ``"proof"`` stops at j = u.  Only the first agrees with enumeration.
    ``jacobi`` picks closed-form or brute-force reduced Jacobi sums.
    """
    _require_quadratic(field)
    bits, u = pattern.bits, pattern.u
    top = {"statement": u + 1, "proof": u}[exponent_range]
    minus_one = field.neg(1)
    total = 0
    for v in product((0, 1), repeat=u):
        # v[idx] is v_j with j = idx + 2
        sign_exp = sum((bits[0] + bits[idx + 1]) * v[idx]
                       for idx in range(u) if idx + 2 <= top)
        rho = quadratic_character(field, field.pow(minus_one, sum(v[:u - 1])))
        jstar = reduced_jacobi_by_count(field, u, sum(v), method=jacobi)
        total += (-1) ** sign_exp * rho * jstar
    num = (field.r - 1) * total
    den = 2 ** (u + 1)
    if num % den:
        raise NonIntegerResultError(f"Omega_{pattern} = {Fraction(num, den)} is not an integer")
    return num // den


def omega_sum_form(pattern: OmegaPattern, field: FieldSpec) -> int:
    _require_quadratic(field)
    _require_minus_one_square(field)
    bits, u, r = pattern.bits, pattern.u, field.r
    inner = 0
    for ell in range(1, (u + 1) // 2 + 1):
        sub = sum((-1) ** sum(bits[j] for j in js)
                  for js in combinations(range(u + 1), 2 * ell))
        inner += r ** (ell - 1) * sub
    brace = Fraction((r - 1) ** u - (-1) ** u, r) - (-1) ** u * inner
    val = Fraction(r - 1, 2 ** (u + 1)) * brace
    if val.denominator != 1:
        raise NonIntegerResultError(f"Omega_{pattern} = {val} is not an integer")
    return int(val)


def omega_closed(zeros: int, ones: int, field: FieldSpec) -> int:
    """Closed form for ``zeros`` 0-bits and ``ones`` 1-bits, exact integers only."""
    if zeros < 0 or ones < 0 or zeros + ones < 2:
        raise ValueError("need zeros, ones >= 0 and zeros + ones >= 2")
    _require_quadratic(field)
    _require_minus_one_square(field)
    r = field.r
    root = math.isqrt(r)
    if root * root != r:
        raise NonIntegerResultError(f"sqrt({r}) is not an integer")
    k = zeros + ones
    sym = (1 + root) ** zeros * (1 - root) ** ones + (1 - root) ** zeros * (1 + root) ** ones
    num = (r - 1) * (2 * (r - 1) ** (k - 1) + (-1) ** k * sym)
    den = r * 2 ** (k + 1)
    if num % den or num < 0:
        raise NonIntegerResultError(f"Omega({zeros},{ones}) = {Fraction(num, den)}")
    return num // den

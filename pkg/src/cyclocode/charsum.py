"""Characters, cyclotomic classes, Gaussian periods and Jacobi sums.

Every character-sum value is an exact :class:`CyclotomicValue`.  Only the
trivial character and the quadratic character are summed; other
multiplicative characters are exposed as exponents of ``zeta_{r-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CyclotomicValue
from .errors import (
    FormulaNotApplicableError,
    LNotDivisorError,
    UnsupportedCharacterOrderError,
    ZeroInputError,
)
from .finite_field import FieldSpec


def _check_divisor(field: FieldSpec, L: int):
    if L < 1 or field.order % L:
        raise LNotDivisorError(f"L={L} does not divide r-1={field.order}")


def class_index(field: FieldSpec, x: int, L: int) -> int:
    """The i with x in C_i^{(L,r)}."""
    _check_divisor(field, L)
    if x == 0:
        raise ZeroInputError("0 lies in no cyclotomic class")
    return field.log(x) % L


def cyclotomic_class(field: FieldSpec, L: int, i: int) -> list[int]:
    _check_divisor(field, L)
    return [field.exp(i + L * k) for k in range(field.order // L)]


def additive_character(field: FieldSpec, x: int) -> CyclotomicValue:
    """psi(x) = zeta_p^{tr_{r/p}(x)}."""
    return CyclotomicValue.zeta_power(field.p, field.trace(x, "p"))


# -- multiplicative characters ---------------------------------------------

def trivial_index(field: FieldSpec) -> int:
    return 0


def quadratic_index(field: FieldSpec) -> int:
    if field.order % 2:
        raise UnsupportedCharacterOrderError("no quadratic character in characteristic 2")
    return field.order // 2


def character_exponent(field: FieldSpec, j: int, x: int) -> int:
    """chi^{(j)}(x) = zeta_{r-1}^k; returns k.  x must be nonzero."""
    return j * field.log(x) % field.order


def character_value(field: FieldSpec, j: int, x: int) -> int:
    """Value of a character of order 1 or 2, with the chi(0) extension."""
    j %= field.order
    if j == 0:
        return 1
    if 2 * j != field.order:
        raise UnsupportedCharacterOrderError(f"chi^({j}) has order > 2")
    if x == 0:
        return 0
    return -1 if field.log(x) & 1 else 1


def quadratic_character(field: FieldSpec, x: int) -> int:
    return character_value(field, quadratic_index(field), x)


# -- Gaussian periods --------------------------------------------------------

def gaussian_period_direct(field: FieldSpec, L: int, i: int) -> CyclotomicValue:
    _check_divisor(field, L)
    if not 0 <= i < L:
        raise ValueError(f"class index {i} out of range for L={L}")
    counts = [0] * field.p
    for x in cyclotomic_class(field, L, i):
        counts[field.trace(x, "p")] += 1
    return CyclotomicValue.from_counts(field.p, counts)


def gaussian_period_closed_N2(field: FieldSpec) -> tuple[int, int]:
    """(eta_0, eta_1) of order 2 from the classical closed form.

    Needs s*m even so that sqrt(r) is an integer.
    """
    if field.order % 2:
        raise LNotDivisorError("2 does not divide r-1")
    sm = field.degree
    if sm % 2:
        raise FormulaNotApplicableError("s*m is odd; use gaussian_period_direct")
    sqrt_r = field.p ** (sm // 2)
    sign = (-1) ** (sm - 1)
    if field.p % 4 == 1:
        num = -1 + sign * sqrt_r
    else:
        # (sqrt(-1))^{sm} = (-1)^{sm/2}
        num = -1 + sign * (-1) ** (sm // 2) * sqrt_r
    if num % 2:
        raise FormulaNotApplicableError("closed form is not integral")
    eta0 = num // 2
    return eta0, -1 - eta0


@dataclass(frozen=True)
class GaussianPeriodTable:
    """Periods of order L plus the modified value at zero."""

    L: int
    periods: tuple
    zero_value: int

    def modified(self, field: FieldSpec, v: int) -> CyclotomicValue:
        if v == 0:
            return CyclotomicValue.from_int(field.p, self.zero_value)
        return self.periods[field.log(v) % self.L]


def gaussian_period_table(field: FieldSpec, L: int) -> GaussianPeriodTable:
    _check_divisor(field, L)
    periods = tuple(gaussian_period_direct(field, L, i) for i in range(L))
    return GaussianPeriodTable(L, periods, field.order // L)


def modified_period(field: FieldSpec, v: int, N: int,
                    table: GaussianPeriodTable | None = None) -> CyclotomicValue:
    _check_divisor(field, N)
    if table is None or table.L != N:
        table = gaussian_period_table(field, N)
    return table.modified(field, v)


# -- Jacobi sums -------------------------------------------------------------

def _char_values(field: FieldSpec, j: int) -> list[int]:
    return [character_value(field, j, x) for x in range(field.r)]


def jacobi_sum(field: FieldSpec, chars, reduced: bool = False) -> CyclotomicValue:
    """Brute-force J(chi_1..chi_k), or J* when ``reduced``.

    Sums over z_1 + ... + z_k = 1; the reduced sum keeps only tuples with
    every z_i nonzero (including the last).
    """
    chars = [j % field.order for j in chars]
    k = len(chars)
    if k < 1:
        raise ValueError("need at least one character")
    tables = [_char_values(field, j) for j in chars]
    first = 1 if reduced else 0
    domain = range(first, field.r)
    one = 1
    total = 0

    def walk(level, partial, weight):
        nonlocal total
        if level == k - 1:
            last = field.sub(one, partial)
            if reduced and last == 0:
                return
            total += weight * tables[level][last]
            return
        tab = tables[level]
        for z in domain:
            w = tab[z]
            if w:
                walk(level + 1, field.add(partial, z), weight * w)

    walk(0, 0, 1)
    return CyclotomicValue.from_int(field.p, total)


def _rho_minus_one(field: FieldSpec) -> int:
    return quadratic_character(field, field.neg(1))


def jacobi_closed(field: FieldSpec, k: int, n_trivial: int) -> int:
    """Closed form of J for ``n_trivial`` copies of epsilon and the rest rho.

    All-trivial gives r^(k-1); a mixture of trivial and nontrivial is 0;
    all-quadratic follows the even/odd formula.  k = 1 gives 1.
    """
    if k == 1:
        return 1
    r = field.r
    if n_trivial == k:
        return r ** (k - 1)
    if n_trivial > 0:
        return 0
    rho_m1 = _rho_minus_one(field)
    if k % 2 == 0:
        return -(rho_m1 ** (k // 2)) * r ** ((k - 2) // 2)
    return rho_m1 ** ((k - 1) // 2) * r ** ((k - 1) // 2)


def reduced_jacobi_closed(field: FieldSpec, k: int, n_trivial: int) -> CyclotomicValue:
    """J* for ``n_trivial`` epsilons and ``k - n_trivial`` copies of rho."""
    if not 0 <= n_trivial <= k or k < 1:
        raise ValueError("need 0 <= n_trivial <= k and k >= 1")
    r = field.r
    if n_trivial == k:
        num = (r - 1) ** k - (-1) ** k
        assert num % r == 0
        val = num // r
    else:
        val = (-1) ** n_trivial * jacobi_closed(field, k - n_trivial, 0)
    return CyclotomicValue.from_int(field.p, val)


@lru_cache(maxsize=None)
def _reduced_jacobi_brute_cached(field: FieldSpec, k: int, n_rho: int) -> int:
    chars = [quadratic_index(field)] * n_rho + [0] * (k - n_rho)
    return jacobi_sum(field, chars, reduced=True).to_int()


def reduced_jacobi_by_count(field: FieldSpec, k: int, n_rho: int, method: str = "closed") -> int:
    """J*(rho^{v_1}, ..., rho^{v_k}) with ``n_rho`` of the v's equal to 1.

    J* is symmetric in its arguments, so only the count matters.
    """
    if method == "closed":
        return reduced_jacobi_closed(field, k, k - n_rho).to_int()
    if method == "brute":
        return _reduced_jacobi_brute_cached(field, k, n_rho)
    raise ValueError(f"unknown method {method!r}")

"""Table-driven arithmetic in GF(r), r = q^m = p^(s*m).

Elements are plain ints in *vector form*: the element
``c_0 + c_1 X + ... + c_{d-1} X^{d-1}`` of ``GF(p)[X]/(f)`` is stored as
``c_0 + c_1 p + ... + c_{d-1} p^{d-1}``.  So ``0`` is zero, ``1`` is one and
the prime subfield is ``range(p)``.  Discrete logs are taken base the fixed
primitive element ``gamma``; addition goes through a Zech table so every
operation is a handful of list lookups.
"""

from __future__ import annotations

import math
from functools import cached_property
from itertools import product

import numpy as np

from .errors import (
    FieldDivisionByZero,
    FieldTooLargeError,
    NotIrreducibleError,
    NotPrimeError,
    NotPrimitiveError,
    ZeroInputError,
)

DEFAULT_MAX_ORDER = 2**26


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists with the constant term first

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pmod(a, f, p):
    a = _trim(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        a = _trim(a)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, f, p):
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f, p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    f = _trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]
    if _psub(_ppowmod(x, p**d, f, p), x, p):
        return False
    for ell in prime_factors(d):
        h = _psub(_ppowmod(x, p ** (d // ell), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return True


def _coeffs_to_code(coeffs, p):
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def _code_to_coeffs(code, p, d):
    out = []
    for _ in range(d):
        code, c = divmod(code, p)
        out.append(c)
    return out


def search_modulus(p: int, d: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree d over GF(p).

    Coefficients are ordered ``(c_{d-1}, ..., c_0)``.
    """
    for head in product(range(p), repeat=d):
        f = list(reversed(head)) + [1]
        if is_irreducible(f, p):
            return f
    raise NotIrreducibleError(f"no irreducible polynomial of degree {d} over GF({p})")


def _is_primitive_poly(g, f, p, order, factors):
    if not _trim(g):
        return False
    for ell in factors:
        if _ppowmod(g, order // ell, f, p) == [1]:
            return False
    return _ppowmod(g, order, f, p) == [1]


def search_gamma(p: int, f) -> list[int]:
    d = len(f) - 1
    order = p**d - 1
    factors = prime_factors(order)
    for code in range(1, p**d):
        g = _trim(_code_to_coeffs(code, p, d))
        if _is_primitive_poly(g, f, p, order, factors):
            return g
    raise NotPrimitiveError("no primitive element found")


def parse_poly(text: str) -> list[int]:
    """``"2,4,1"`` -> ``[2, 4, 1]`` (constant term first)."""
    return [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]


def format_poly_coeffs(coeffs) -> str:
    return ",".join(str(c) for c in coeffs)


# ---------------------------------------------------------------------------

class FieldSpec:
    """The tower GF(p) < GF(q) < GF(r) with a fixed primitive element.

    Immutable after construction; all methods are pure reads.
    """

    def __init__(self, p, s, m, modulus, gamma_poly, exp_table, log_table):
        self.p = p
        self.s = s
        self.m = m
        self.q = p**s
        self.r = self.q**m
        self.degree = s * m
        self.modulus_r = tuple(modulus)
        self.gamma_poly = tuple(gamma_poly)
        self.gamma = _coeffs_to_code(gamma_poly, p)
        self.order = self.r - 1
        self._exp = exp_table
        self._log = log_table
        n = self.order
        # zech[k] = log(1 + gamma^k), or -1 when 1 + gamma^k == 0
        zech = [0] * n
        for k in range(n):
            c = exp_table[k]
            c1 = c - (p - 1) if c % p == p - 1 else c + 1
            zech[k] = log_table[c1] if c1 else -1
        self._zech = zech
        self.minus_one_log = n // 2 if p != 2 else 0
        # GF(q) inside GF(r) as the fixed field of x -> x^q
        self.sub_step = (self.r - 1) // (self.q - 1)
        self.sub_gen = exp_table[self.sub_step % n] if n else 1
        self.modulus_q = tuple(self._subfield_modulus())
        if not is_irreducible(self.modulus_q, p):
            raise NotIrreducibleError("subfield modulus is reducible")

    def __repr__(self):
        return f"FieldSpec(p={self.p}, s={self.s}, m={self.m}, modulus={list(self.modulus_r)})"

    # -- tables --------------------------------------------------------------

    @property
    def exp_table(self) -> list[int]:
        return self._exp

    @property
    def log_table(self) -> list[int]:
        """``log_table[x]`` for x != 0; entry 0 holds -1."""
        return self._log

    @property
    def zech_table(self) -> list[int]:
        return self._zech

    @cached_property
    def np_exp(self) -> np.ndarray:
        return np.asarray(self._exp, dtype=np.int64)

    @cached_property
    def np_log(self) -> np.ndarray:
        return np.asarray(self._log, dtype=np.int64)

    @cached_property
    def np_zech(self) -> np.ndarray:
        return np.asarray(self._zech, dtype=np.int64)

    def elements(self) -> range:
        return range(self.r)

    def nonzero(self) -> range:
        return range(1, self.r)

    # -- conversions ---------------------------------------------------------

    def log(self, x: int) -> int:
        if x == 0:
            raise ZeroInputError("log of zero")
        return self._log[x]

    def exp(self, k: int) -> int:
        return self._exp[k % self.order]

    def coeffs(self, x: int) -> list[int]:
        return _code_to_coeffs(x, self.p, self.degree)

    def from_coeffs(self, coeffs) -> int:
        coeffs = _trim(coeffs)
        if len(coeffs) > self.degree:
            coeffs = _pmod(coeffs, list(self.modulus_r), self.p)
        return _coeffs_to_code([c % self.p for c in coeffs], self.p)

    def format_element(self, x: int) -> str:
        return "0" if x == 0 else f"g^{self._log[x]}"

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if text == "0":
            return 0
        if text == "1":
            return 1
        if text in ("g", "γ"):
            return self.gamma
        if text.startswith(("g^", "γ^")):
            return self.exp(int(text.split("^", 1)[1]))
        raise ValueError(f"cannot parse field element {text!r}")

    # -- arithmetic ----------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if x == 0:
            return y
        if y == 0:
            return x
        lx = self._log[x]
        z = self._zech[(self._log[y] - lx) % self.order]
        if z < 0:
            return 0
        return self._exp[(lx + z) % self.order]

    def neg(self, x: int) -> int:
        if x == 0 or self.p == 2:
            return x
        return self._exp[(self._log[x] + self.minus_one_log) % self.order]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % self.order]

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldDivisionByZero("inverse of zero")
        return self._exp[-self._log[x] % self.order]

    def div(self, x: int, y: int) -> int:
        if y == 0:
            raise FieldDivisionByZero("division by zero")
        if x == 0:
            return 0
        return self._exp[(self._log[x] - self._log[y]) % self.order]

    def pow(self, x: int, k: int) -> int:
        if x == 0:
            if k < 0:
                raise FieldDivisionByZero("zero to a negative power")
            return 1 if k == 0 else 0
        return self._exp[self._log[x] * k % self.order]

    def arith(self, a: int, b: int | None, op: str) -> int:
        if op in ("neg", "inv"):
            return getattr(self, op)(a)
        return getattr(self, op)(a, b)

    def sum(self, xs) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    # -- trace, subfield, squares ------------------------------------------

    def _trace_with_step(self, x: int, step: int, terms: int) -> int:
        if x == 0:
            return 0
        lx = self._log[x]
        acc = 0
        for j in range(terms):
            acc = self.add(acc, self._exp[lx * step**j % self.order])
        return acc

    @cached_property
    def _trace_q_table(self) -> list[int]:
        return [self._trace_with_step(x, self.q, self.m) for x in range(self.r)]

    @cached_property
    def _trace_p_table(self) -> list[int]:
        return [self._trace_with_step(x, self.p, self.degree) for x in range(self.r)]

    def trace(self, x: int, target: str = "q") -> int:
        """tr_{r/q} (target ``"q"``) or tr_{r/p} (target ``"p"``).

        The absolute trace comes back as an int in ``range(p)``.
        """
        if target == "q":
            return self._trace_q_table[x]
        if target == "p":
            return self._trace_p_table[x]
        raise ValueError(f"unknown trace target {target!r}")

    @cached_property
    def np_trace_q(self) -> np.ndarray:
        return np.asarray(self._trace_q_table, dtype=np.int64)

    @cached_property
    def np_digits(self) -> np.ndarray:
        """``np_digits[x]`` = coefficient vector of x, shape (r, s*m)."""
        codes = np.arange(self.r, dtype=np.int64)
        return np.stack([(codes // self.p**i) % self.p for i in range(self.degree)], axis=1)

    def in_subfield(self, x: int) -> bool:
        return x == 0 or self._log[x] % self.sub_step == 0

    def subfield_log(self, x: int) -> int:
        """Log of a GF(q) element base ``gamma^((r-1)/(q-1))``."""
        lx = self.log(x)
        if lx % self.sub_step:
            raise ValueError(f"{self.format_element(x)} is not in GF({self.q})")
        return lx // self.sub_step

    def subfield_elements(self) -> list[int]:
        """GF(q) as ``[0, w^0, w^1, ..., w^(q-2)]``."""
        return [0] + [self._exp[k * self.sub_step % self.order] for k in range(self.q - 1)]

    def is_square(self, x: int) -> int:
        """0 when x is a square (even log), 1 otherwise."""
        if x == 0:
            raise ZeroInputError("is_square(0)")
        if self.p == 2:
            return 0
        return self._log[x] & 1

    def poly_from_roots(self, roots) -> list[int]:
        """Coefficients of prod (X - root), constant term first."""
        out = [1]
        for root in roots:
            nr = self.neg(root)
            nxt = [0] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i + 1] = self.add(nxt[i + 1], c)
                nxt[i] = self.add(nxt[i], self.mul(c, nr))
            out = nxt
        return out

    def _subfield_modulus(self) -> list[int]:
        w = self.sub_gen
        roots, x = [], w
        for _ in range(self.s):
            roots.append(x)
            x = self.pow(x, self.p)
        coeffs = self.poly_from_roots(roots)
        if any(c >= self.p for c in coeffs):
            raise NotIrreducibleError("subfield modulus has coefficients outside GF(p)")
        return coeffs


def build_field(p: int, s: int, m: int, modulus=None, gamma_poly=None,
                max_order: int | None = None) -> FieldSpec:
    """Construct GF(p^(s*m)) with verified modulus and primitive element.

    ``modulus`` and ``gamma_poly`` are coefficient lists, constant term
    first.  Missing ones are found by deterministic lexicographic search.
    """
    if not is_prime(p):
        raise NotPrimeError(f"p={p} is not prime")
    if s < 1 or m < 1:
        raise ValueError("s and m must be positive")
    d = s * m
    r = p**d
    limit = DEFAULT_MAX_ORDER if max_order is None else max_order
    if r > limit:
        raise FieldTooLargeError(f"r={r} exceeds the table limit {limit}")

    if modulus is None:
        f = search_modulus(p, d)
    else:
        f = _trim([c % p for c in modulus])
        if len(f) - 1 != d or f[-1] != 1:
            raise NotIrreducibleError(f"modulus must be monic of degree {d}")
        if not is_irreducible(f, p):
            raise NotIrreducibleError(f"modulus {format_poly_coeffs(f)} is reducible over GF({p})")

    if gamma_poly is None:
        g = search_gamma(p, f)
    else:
        g = _pmod([c % p for c in gamma_poly], f, p)
        if not _is_primitive_poly(g, f, p, r - 1, prime_factors(r - 1)):
            raise NotPrimitiveError(f"gamma={format_poly_coeffs(g)} is not primitive")

    exp_table = [0] * (r - 1)
    log_table = [-1] * r
    cur = [1]
    for k in range(r - 1):
        code = _coeffs_to_code(cur, p)
        if log_table[code] != -1:
            raise NotPrimitiveError("gamma has order smaller than r-1")
        exp_table[k] = code
        log_table[code] = k
        cur = _pmod(_pmul(cur, g, p), f, p)
    if cur != [1]:
        raise NotPrimitiveError("gamma^(r-1) != 1")
    return FieldSpec(p, s, m, f, g, exp_table, log_table)


def field_for_order(r: int, **kw) -> FieldSpec:
    """Convenience: GF(r) over its prime field with auto-search."""
    for p in range(2, r + 1):
        if r % p == 0:
            d = round(math.log(r, p))
            if p**d != r:
                raise ValueError(f"{r} is not a prime power")
            return build_field(p, 1, d, **kw)
    raise ValueError(f"{r} is not a prime power")

"""Polynomials over GF(q): cyclotomic cosets, minimal polynomials, h(x)."""

from __future__ import annotations

from dataclasses import dataclass

from .finite_field import FieldSpec


@dataclass(frozen=True)
class CyclotomicCoset:
    base: int
    members: tuple

    def __len__(self):
        return len(self.members)


def cyclotomic_coset(a: int, field: FieldSpec) -> CyclotomicCoset:
    """{a q^j mod (r-1)}."""
    n = field.order
    a %= n
    members = {a}
    x = a * field.q % n
    while x not in members:
        members.add(x)
        x = x * field.q % n
    return CyclotomicCoset(a, tuple(sorted(members)))


@dataclass(frozen=True)
class Polynomial:
    """Coefficients are GF(r) element codes lying in GF(q), constant first."""

    field: FieldSpec
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        if not self.coeffs or not other.coeffs:
            return Polynomial(F, ())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(F, out)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        F = self.field
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - d, 1)
        while len(rem) - 1 >= d and rem:
            c = F.mul(rem[-1], inv_lead)
            shift = len(rem) - 1 - d
            quot[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b))
            while rem and rem[-1] == 0:
                rem.pop()
        return Polynomial(F, quot), Polynomial(F, rem)

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    # -- text ------------------------------------------------------------

    def _coeff_str(self, c: int) -> str:
        F = self.field
        if c < F.p:
            return str(c)
        return f"w^{F.subfield_log(c)}"

    def to_coeff_text(self) -> str:
        """Comma-separated coefficients, constant term first."""
        return ",".join(self._coeff_str(c) for c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            cs = self._coeff_str(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(cs)
            elif cs == "1":
                terms.append(mono)
            elif cs.startswith("w"):
                terms.append(f"{cs} {mono}")
            else:
                terms.append(f"{cs}{mono}")
        return " + ".join(terms)


def poly_from_ints(field: FieldSpec, coeffs) -> Polynomial:
    """Prime-field coefficients given as ints, constant first."""
    return Polynomial(field, tuple(c % field.p for c in coeffs))


def minimal_polynomial(x: int, field: FieldSpec) -> Polynomial:
    """Minimal polynomial of x over GF(q), as prod_j (X - x^{q^j})."""
    if x == 0:
        return Polynomial(field, (0, 1))
    roots = [field.exp(k) for k in cyclotomic_coset(field.log(x), field).members]
    coeffs = field.poly_from_roots(roots)
    bad = [c for c in coeffs if not field.in_subfield(c)]
    if bad:
        raise AssertionError(f"minimal polynomial coefficient {field.format_element(bad[0])} not in GF(q)")
    poly = Polynomial(field, coeffs)
    if poly(x) != 0:
        raise AssertionError("minimal polynomial does not annihilate x")
    return poly


def x_power_mod(n: int, h: Polynomial) -> Polynomial:
    """X^n mod h by repeated squaring."""
    F = h.field
    result = Polynomial(F, (1,))
    base = Polynomial(F, (0, 1)).divmod(h)[1]
    while n:
        if n & 1:
            result = (result * base).divmod(h)[1]
        base = (base * base).divmod(h)[1]
        n >>= 1
    return result


def divides_x_n_minus_1(h: Polynomial, n: int) -> bool:
    return x_power_mod(n, h).coeffs == (1,)


def parity_check_polynomial(params) -> Polynomial:
    """h(x) = prod_i h_{a_i}(x), the h_{a_i} being minimal polynomials of gamma^{-a_i}."""
    F = params.field
    h = Polynomial(F, (1,))
    for a_i in params.exponents:
        h = h * minimal_polynomial(F.exp(-a_i), F)
    if not divides_x_n_minus_1(h, F.order):
        raise AssertionError("h(x) does not divide x^(r-1) - 1")
    return h

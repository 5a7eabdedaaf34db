"""Exact elements of Z[zeta_p]."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonRationalValueError


def _canonical(coeffs, p):
    coeffs = list(coeffs) + [0] * (p - len(coeffs))
    if len(coeffs) > p:
        # fold exponents mod p
        folded = [0] * p
        for j, c in enumerate(coeffs):
            folded[j % p] += c
        coeffs = folded
    top = coeffs[p - 1]
    if top:
        coeffs = [c - top for c in coeffs]
    return tuple(coeffs)


@dataclass(frozen=True)
class CyclotomicValue:
    """``sum c_j zeta_p^j`` stored canonically with ``c_{p-1} = 0``.

    The relation ``1 + zeta + ... + zeta^(p-1) = 0`` makes the canonical
    vector unique, so equality is plain tuple equality.
    """

    p: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canonical(self.coeffs, self.p))

    @classmethod
    def from_int(cls, p: int, n: int) -> "CyclotomicValue":
        return cls(p, (n,))

    @classmethod
    def zeta_power(cls, p: int, j: int) -> "CyclotomicValue":
        c = [0] * p
        c[j % p] = 1
        return cls(p, c)

    @classmethod
    def from_counts(cls, p: int, counts) -> "CyclotomicValue":
        """``counts[j]`` copies of ``zeta^j``."""
        return cls(p, tuple(counts))

    def _coerce(self, other):
        if isinstance(other, CyclotomicValue):
            if other.p != self.p:
                raise ValueError("mixing cyclotomic fields")
            return other
        if isinstance(other, int):
            return CyclotomicValue.from_int(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicValue(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicValue(self.p, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % p] += a * b
        return CyclotomicValue(p, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, CyclotomicValue):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_rational():
            raise NonRationalValueError(f"{self} is not a rational integer")
        return self.coeffs[0]

    def __int__(self):
        return self.to_int()

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mono = "z" if j == 1 else f"z^{j}"
                terms.append(mono if c == 1 else f"{c}·{mono}")
        return " + ".join(terms) + f" (z = primitive {self.p}-th root of unity)"

"""Exact arithmetic in the cyclotomic field Q(zeta_m).

A session fixes one conductor m; every rational number and every root of
unity the computation needs lives in the single field Q(zeta_m), with
elements represented in the power basis modulo the m-th cyclotomic
polynomial.  Representation modulo the cyclotomic polynomial (rather than
t^m - 1) gives unique coordinates, so zero tests and hashing are exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import kernel
from .errors import ConductorTooSmall, DivisionByZero


def euler_phi(m: int) -> int:
    n, result, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of the m-th cyclotomic polynomial, low degree first."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # t^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    # division of integer polynomials known to be exact, b monic up to sign
    out = [0] * (len(a) - len(b) + 1)
    a = list(a)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        if c:
            for j, bc in enumerate(b):
                a[i + j] -= c * bc
    if any(a[: len(b) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


class CycField:
    """The cyclotomic field of a fixed conductor.

    Holds the reduction data shared by all scalars of a session: the
    minimal polynomial of zeta_m and the expansions of the powers
    t^phi .. t^(2 phi - 2) used when folding products back into the power
    basis.
    """

    __slots__ = ("m", "phi", "minpoly", "red", "_zero", "_one")

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("conductor must be a positive integer")
        self.m = m
        minpoly = cyclotomic_polynomial(m)
        self.phi = len(minpoly) - 1
        self.minpoly = minpoly
        self.red = self._reduction_rows()
        self._zero = Scalar(self, (tuple([0] * self.phi), 1))
        self._one = Scalar(self, (tuple([1] + [0] * (self.phi - 1)), 1))

    def _reduction_rows(self) -> tuple[tuple[int, ...], ...]:
        phi = self.phi
        rows = []
        # t^phi = -(lower coefficients); later powers by shift and reduce
        cur = [-c for c in self.minpoly[:phi]]
        for _ in range(phi - 1):
            rows.append(tuple(cur))
            nxt = [0] + cur[: phi - 1]
            top = cur[phi - 1]
            if top:
                first = rows[0]
                for i in range(phi):
                    nxt[i] += top * first[i]
            cur = nxt
        return tuple(rows)

    def __repr__(self):
        return "CycField(%d)" % self.m

    def __eq__(self, other):
        return isinstance(other, CycField) and other.m == self.m

    def __hash__(self):
        return hash(("CycField", self.m))

    @property
    def zero(self) -> "Scalar":
        return self._zero

    @property
    def one(self) -> "Scalar":
        return self._one

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction or Scalar of this field into a Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise ValueError("scalar from a different field")
            return value
        if isinstance(value, int):
            return Scalar(self, (tuple([value] + [0] * (self.phi - 1)), 1))
        if isinstance(value, Fraction):
            return Scalar(
                self,
                kernel.q_normalize([value.numerator] + [0] * (self.phi - 1), value.denominator),
            )
        raise TypeError("cannot coerce %r into %r" % (value, self))

    def from_raw(self, raw) -> "Scalar":
        return Scalar(self, raw)

    def zeta(self) -> "Scalar":
        """The distinguished primitive m-th root of unity."""
        if self.m == 1:
            return self.one
        if self.m == 2:
            return self.scalar(-1)
        return Scalar(self, (tuple([0, 1] + [0] * (self.phi - 2)), 1))

    def primitive_root(self, n: int) -> "Scalar":
        """A primitive n-th root of unity, namely zeta_m^(m/n)."""
        if n < 1:
            raise ValueError("root order must be positive")
        if self.m % n != 0:
            raise ConductorTooSmall(
                "order %d root of unity needs %d to divide the conductor %d"
                % (n, n, self.m)
            )
        return self.zeta() ** (self.m // n)


@lru_cache(maxsize=None)
def cyclotomic_field(m: int) -> CycField:
    return CycField(m)


class Scalar:
    """An element of Q(zeta_m), immutable and hashable."""

    __slots__ = ("field", "raw")

    def __init__(self, field: CycField, raw):
        self.field = field
        self.raw = raw

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return kernel.q_is_zero(self.raw)

    def __bool__(self):
        return not kernel.q_is_zero(self.raw)

    def is_rational(self) -> bool:
        return not any(self.raw[0][1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar %s is not rational" % self)
        return Fraction(self.raw[0][0], self.raw[1])

    def is_one(self) -> bool:
        return self == self.field.one

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, kernel.q_add(self.raw, other.raw))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, kernel.q_sub(self.raw, other.raw))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, kernel.q_sub(other.raw, self.raw))

    def __neg__(self):
        return Scalar(self.field, kernel.q_neg(self.raw))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, kernel.q_mul(self.raw, other.raw, self.field.red))

    __rmul__ = __mul__

    def inv(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inversion of the zero scalar")
        return Scalar(self.field, kernel.q_inv(self.raw, self.field.minpoly))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- equality and rendering ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.raw == other.raw

    def __hash__(self):
        return hash((self.field.m, self.raw))

    def is_simple(self) -> bool:
        """True when the scalar is a single power-basis term, e.g. 2 or -(z3)^2."""
        return sum(1 for c in self.raw[0] if c) <= 1

    def __str__(self):
        nums, den = self.raw
        m = self.field.m
        parts = []
        for i, c in enumerate(nums):
            if not c:
                continue
            coeff = Fraction(c, den)
            if i == 0:
                parts.append(str(coeff))
                continue
            root = "(z%d)" % m if i == 1 else "(z%d)^%d" % (m, i)
            if coeff == 1:
                parts.append(root)
            elif coeff == -1:
                parts.append("-" + root)
            else:
                parts.append("%s*%s" % (coeff, root))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return "Scalar(%s)" % self

"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) with
Fraction coefficients, canonically reduced modulo the n-th cyclotomic
polynomial.  Reduction mod Phi_n (rather than mod x^n - 1) makes equality,
realness and rationality decidable by coefficient comparison alone; every
predicate in this module is exact, with no floating tolerance anywhere.

Rationals are plain ``fractions.Fraction`` (already gcd-reduced with a
positive denominator, which is exactly the invariant we need).  Floating
embeddings at a configurable bit precision are provided through mpmath.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

import mpmath
import sympy

Rational = Fraction


class OrderMismatchError(ValueError):
    """Raised when two cyclotomic values of incompatible orders are combined
    by an operation that requires equal orders."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first, as plain integers."""
    poly = sympy.Poly(sympy.cyclotomic_poly(n, sympy.Symbol("x")), sympy.Symbol("x"))
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return int(sympy.totient(n))


def _reduce_mod_phi(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in zeta_n (coefficient list, any degree) mod Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1  # = euler_phi(n), Phi_n is monic
    work = list(coeffs)
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            for k in range(len(phi) - 1):
                work[i - deg + k] -= c * phi[k]
        work.pop()
    while len(work) < deg:
        work.append(Fraction(0))
    return tuple(work)


class CyclotomicValue:
    """An exact element of Q(zeta_n).

    Instances are immutable; all operations return fresh values.  Mixed-order
    arithmetic lifts both operands into Q(zeta_lcm) first.
    """

    __slots__ = ("order", "coefficients", "_hash")

    def __init__(self, order: int, coefficients) -> None:
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        coeffs = [Fraction(c) for c in coefficients]
        deg = euler_phi(order)
        if len(coeffs) > deg:
            reduced = _reduce_mod_phi(coeffs, order)
        else:
            coeffs += [Fraction(0)] * (deg - len(coeffs))
            reduced = tuple(coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coefficients", reduced)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("CyclotomicValue is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q, order: int = 1) -> "CyclotomicValue":
        coeffs = [Fraction(q)] + [Fraction(0)] * (euler_phi(order) - 1)
        return cls(order, coeffs)

    @classmethod
    def zero(cls, order: int = 1) -> "CyclotomicValue":
        return cls.from_rational(0, order)

    @classmethod
    def one(cls, order: int = 1) -> "CyclotomicValue":
        return cls.from_rational(1, order)

    @classmethod
    def root_of_unity(cls, order: int, power: int = 1) -> "CyclotomicValue":
        """zeta_order ** power, canonically reduced."""
        power %= order
        coeffs = [Fraction(0)] * power + [Fraction(1)]
        return cls(order, coeffs)

    # -- order management ---------------------------------------------

    def lift(self, order: int) -> "CyclotomicValue":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise OrderMismatchError(
                f"cannot lift order {self.order} into non-multiple order {order}")
        step = order // self.order
        coeffs = [Fraction(0)] * ((len(self.coefficients) - 1) * step + 1)
        for i, c in enumerate(self.coefficients):
            coeffs[i * step] = c
        return CyclotomicValue(order, coeffs)

    @staticmethod
    def common_order(a: "CyclotomicValue", b: "CyclotomicValue"):
        m = lcm(a.order, b.order)
        return a.lift(m), b.lift(m)

    def _coerce(self, other):
        if isinstance(other, CyclotomicValue):
            return CyclotomicValue.common_order(self, other)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicValue.from_rational(other, self.order)
        return None

    # -- ring / field operations --------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicValue(a.order, [x + y for x, y in zip(a.coefficients, b.coefficients)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicValue(self.order, [-c for c in self.coefficients])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CyclotomicValue(a.order, [x - y for x, y in zip(a.coefficients, b.coefficients)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        prod = [Fraction(0)] * (len(a.coefficients) + len(b.coefficients) - 1)
        for i, x in enumerate(a.coefficients):
            if not x:
                continue
            for j, y in enumerate(b.coefficients):
                if y:
                    prod[i + j] += x * y
        return CyclotomicValue(a.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicValue":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic value")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        inv = _poly_invert(list(self.coefficients), phi)
        return CyclotomicValue(self.order, inv)

    def __truediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return CyclotomicValue.from_rational(other, self.order) / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicValue.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def galois(self, u: int) -> "CyclotomicValue":
        """The field map zeta -> zeta^u; u must be coprime to the order."""
        n = self.order
        if gcd(u, n) != 1:
            raise ValueError(f"{u} is not coprime to the order {n}")
        coeffs = [Fraction(0)] * n
        for i, c in enumerate(self.coefficients):
            coeffs[(i * u) % n] += c
        return CyclotomicValue(n, coeffs)

    def conjugate(self) -> "CyclotomicValue":
        """Complex conjugation, i.e. the field map zeta -> zeta^(-1)."""
        return self.galois(self.order - 1 if self.order > 1 else 1)

    def minimal_polynomial(self) -> tuple[Fraction, ...]:
        """Monic minimal polynomial over Q, constant term first.

        Computed as the product of (x - w) over the distinct Galois
        conjugates w; the result does not depend on the ambient order, which
        also makes it the canonical fingerprint behind ``__hash__``.
        """
        if self.is_rational():
            return (-self.coefficients[0], Fraction(1))
        n = self.order
        orbit = {}
        for u in range(1, n):
            if gcd(u, n) == 1:
                w = self.galois(u)
                orbit[w.coefficients] = w
        poly = [CyclotomicValue.one(n)]
        for w in orbit.values():
            # (x - w) * p = shift(p) - w * p
            new = [CyclotomicValue.zero(n) for _ in range(len(poly) + 1)]
            for i, c in enumerate(poly):
                new[i + 1] = new[i + 1] + c
                new[i] = new[i] - w * c
            poly = new
        return tuple(c.as_rational() for c in poly)

    # -- predicates (all exact) ---------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coefficients[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coefficients[0]

    def is_real(self) -> bool:
        return self == self.conjugate()

    def is_imaginary(self) -> bool:
        """Purely imaginary, tested as x + conj(x) = 0 (zero counts)."""
        return (self + self.conjugate()).is_zero()

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coefficients == b.coefficients

    def __hash__(self):
        # equality reaches across ambient orders (zeta_3 == zeta_6^2), so the
        # hash must too: the minimal polynomial is order-independent
        h = object.__getattribute__(self, "_hash")
        if h is None:
            if self.is_rational():
                h = hash(self.coefficients[0])
            else:
                h = hash(self.minimal_polynomial())
            object.__setattr__(self, "_hash", h)
        return h

    # -- numeric embedding ---------------------------------------------

    def embed(self, precision_bits: int = 64) -> mpmath.mpc:
        """Numeric value under zeta_n -> exp(2 pi i / n) at the given precision."""
        if precision_bits < 53:
            raise ValueError("precision_bits must be >= 53")
        with mpmath.workprec(precision_bits + 16):
            zeta = mpmath.e ** (2j * mpmath.pi / self.order)
            acc = mpmath.mpc(0)
            power = mpmath.mpc(1)
            for c in self.coefficients:
                if c:
                    acc += mpmath.mpf(c.numerator) / c.denominator * power
                power *= zeta
        with mpmath.workprec(precision_bits):
            return +acc

    # -- presentation ---------------------------------------------------

    def __repr__(self):
        return f"CyclotomicValue(order={self.order}, coefficients={list(self.coefficients)})"

    def __str__(self):
        if self.is_rational():
            return str(self.coefficients[0])
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = f"z{self.order}" if i == 1 else f"z{self.order}^{i}"
                terms.append(z if c == 1 else (f"-{z}" if c == -1 else f"{c}*{z}"))
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"order": self.order,
                "coefficients": [str(c) for c in self.coefficients]}

    @classmethod
    def from_json(cls, data: dict) -> "CyclotomicValue":
        return cls(int(data["order"]), [Fraction(c) for c in data["coefficients"]])


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_is_zero(p: list[Fraction]) -> bool:
    return len(p) == 1 and p[0] == 0


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return _poly_trim(out)


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    den = _poly_trim(den)
    deg_d = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < deg_d:
        return [Fraction(0)], _poly_trim(num)
    quot = [Fraction(0)] * (len(num) - deg_d)
    for i in range(len(num) - 1, deg_d - 1, -1):
        f = num[i] / lead
        quot[i - deg_d] = f
        if f:
            for k in range(deg_d + 1):
                num[i - deg_d + k] -= f * den[k]
    return _poly_trim(quot), _poly_trim(num)


def _poly_invert(a: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Inverse of a mod the (irreducible) modulus polynomial, over Q.

    Maintains r_i = s_i * a + t_i * modulus; the t's are never needed.
    """
    r0, r1 = _poly_trim(a), _poly_trim(modulus)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    while not _poly_is_zero(r1):
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # modulus irreducible and a nonzero mod it, so gcd r0 is a nonzero constant
    if len(r0) != 1 or r0[0] == 0:
        raise ZeroDivisionError("value is not invertible modulo the cyclotomic polynomial")
    c = r0[0]
    return [x / c for x in s0]


# -- convenience wrappers used across the package ----------------------

def cyclo_mul(a: CyclotomicValue, b: CyclotomicValue) -> CyclotomicValue:
    """Exact product; both operands must already share one order."""
    if a.order != b.order:
        raise OrderMismatchError(
            f"orders differ ({a.order} vs {b.order}); lift with cyclo_lift first")
    return a * b


def cyclo_conj(a: CyclotomicValue) -> CyclotomicValue:
    return a.conjugate()


def cyclo_lift(a: CyclotomicValue, order: int) -> CyclotomicValue:
    return a.lift(order)


def cyclo_embed(a: CyclotomicValue, precision_bits: int = 64) -> mpmath.mpc:
    return a.embed(precision_bits)

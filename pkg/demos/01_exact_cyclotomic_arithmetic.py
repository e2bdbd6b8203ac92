#!/usr/bin/env python3
"""Exact arithmetic in cyclotomic fields.

Everything downstream (class functions, lens tables, rationality checks)
rests on being able to decide equality, realness and rationality of values
in Q(zeta_n) *exactly*.  This walkthrough shows the core moves.
"""

from fractions import Fraction

from etarho import CyclotomicValue

zeta = CyclotomicValue.root_of_unity

print("== roots of unity and canonical reduction ==")
z3 = zeta(3)
print("zeta_3                =", z3)
print("zeta_3 * zeta_3^2     =", z3 * zeta(3, 2), "   (root-of-unity identity)")
print("(zeta_3 - zeta_3^2)^2 =", (z3 - z3 ** 2) ** 2, "  (reduced mod the cyclotomic polynomial)")

print()
print("== conjugation is the inversion zeta -> zeta^-1 ==")
v = z3 - z3 ** 2
print("v        =", v)
print("conj(v)  =", v.conjugate(), "  (purely imaginary: conj flips the sign)")
print("v purely imaginary?", v.is_imaginary(), "  [tested exactly as v + conj(v) == 0]")

print()
print("== field inverses via the extended Euclidean algorithm ==")
w = CyclotomicValue.from_rational(Fraction(2)) + zeta(7) - zeta(7, 3)
print("w * w^-1 =", w * w.inverse())

print()
print("== mixed orders lift into Q(zeta_lcm) ==")
mixed = zeta(3) + zeta(4)
print("zeta_3 + zeta_4 lives in order", mixed.order, "->", mixed)
print("equality across orders: zeta_3 == zeta_6^2 ?", zeta(3) == zeta(6, 2))

print()
print("== numeric embedding at configurable precision ==")
print("embed(v, 64 bits)  =", v.embed(64))
print("embed(1/2)         =", CyclotomicValue.from_rational(Fraction(1, 2)).embed(64))
print("(the embedding is for display and cross-checks; every decision above was exact)")

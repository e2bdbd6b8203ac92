import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from etarho.cyclotomic import (CyclotomicValue, OrderMismatchError,
                               cyclo_conj, cyclo_embed, cyclo_lift, cyclo_mul,
                               cyclotomic_polynomial, euler_phi)


def zeta(n, k=1):
    return CyclotomicValue.root_of_unity(n, k)


def rat(q):
    return CyclotomicValue.from_rational(Fraction(q))


class TestBasics:
    def test_phi3_reduction(self):
        # hand expansion over Phi_3 = x^2 + x + 1: (z - z^2)^2 = -3
        z = zeta(3)
        assert (z - z * z) ** 2 == rat(-3)

    def test_root_of_unity_identity(self):
        assert zeta(3) * zeta(3, 2) == rat(1)

    def test_absorbing_zero(self):
        assert (rat(1) + zeta(5)) * rat(0) == rat(0)

    def test_orders_one_and_two(self):
        assert euler_phi(1) == euler_phi(2) == 1
        assert zeta(2) == rat(-1)
        assert CyclotomicValue(1, [Fraction(7, 3)]).as_rational() == Fraction(7, 3)

    def test_cyclotomic_polynomials(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_canonical_equality_across_orders(self):
        assert zeta(3) == zeta(6, 2)
        assert zeta(2) == zeta(6, 3)
        assert zeta(3) != zeta(6)

    def test_mixed_order_arithmetic_lifts(self):
        v = zeta(3) + zeta(4)
        assert v.order == 12
        assert v - zeta(4) == zeta(3).lift(12)

    def test_cyclo_mul_requires_equal_orders(self):
        with pytest.raises(OrderMismatchError):
            cyclo_mul(zeta(3), zeta(4))
        assert cyclo_mul(zeta(3).lift(12), zeta(4).lift(12)) == zeta(12, 7)

    def test_lift_rejects_non_multiple(self):
        with pytest.raises(OrderMismatchError):
            cyclo_lift(zeta(4), 6)


class TestConjugation:
    def test_conj_of_zeta5(self):
        assert cyclo_conj(zeta(5)) == zeta(5, 4)

    def test_rationals_fixed(self):
        assert cyclo_conj(rat(Fraction(7, 3))) == rat(Fraction(7, 3))

    def test_purely_imaginary_flip(self):
        v = zeta(3) - zeta(3, 2)
        assert cyclo_conj(v) == -v
        assert v.is_imaginary()
        assert not v.is_real()

    def test_real_detection(self):
        v = zeta(5) + zeta(5, 4)
        assert v.is_real()
        assert not v.is_imaginary()
        assert rat(0).is_imaginary()  # zero counts as purely imaginary


class TestInversion:
    def test_inverse_roundtrip(self):
        v = rat(2) + zeta(7) - zeta(7, 3)
        assert v * v.inverse() == rat(1)

    def test_zero_not_invertible(self):
        with pytest.raises(ZeroDivisionError):
            rat(0).inverse()

    def test_division_and_pow(self):
        z = zeta(5)
        assert (rat(1) / z) == z ** -1 == z ** 4


class TestEmbedding:
    def test_i(self):
        v = cyclo_embed(zeta(4), 64)
        assert abs(v - 1j) < 1e-15

    def test_half(self):
        v = cyclo_embed(rat(Fraction(1, 2)), 64)
        assert abs(v - 0.5) < 1e-18

    def test_i_sqrt3(self):
        v = cyclo_embed(zeta(3) - zeta(3, 2), 64)
        assert abs(v.real) < 1e-18
        assert abs(v.imag - mpmath.sqrt(3)) < 1e-15

    def test_precision_floor(self):
        with pytest.raises(ValueError):
            cyclo_embed(zeta(3), 32)

    def test_embed_multiplicative_on_random_pairs(self):
        rng = random.Random(1)
        with mpmath.workprec(96):  # compare at >= embedding precision
            for _ in range(1000):
                n = rng.randint(1, 24)
                a = _random_value(rng, n)
                b = _random_value(rng, n)
                lhs = cyclo_embed(a * b, 80)
                rhs = cyclo_embed(a, 80) * cyclo_embed(b, 80)
                scale = max(1.0, abs(rhs))
                assert abs(lhs - rhs) / scale < 2.0 ** -72


def _random_value(rng, n):
    coeffs = [Fraction(rng.randint(-5, 5), rng.randint(1, 6))
              for _ in range(euler_phi(n))]
    return CyclotomicValue(n, coeffs)


def _values(max_order=12):
    def build(draw_order, coeffs):
        deg = euler_phi(draw_order)
        cs = (coeffs * deg)[:deg]
        return CyclotomicValue(draw_order, cs)
    return st.builds(
        build,
        st.integers(min_value=1, max_value=max_order),
        st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=6),
                 min_size=1, max_size=12),
    )


class TestFieldAxioms:
    @settings(max_examples=120, deadline=None)
    @given(_values(), _values(), _values())
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)

    @settings(max_examples=120, deadline=None)
    @given(_values())
    def test_inverse_when_nonzero(self, a):
        if not a.is_zero():
            assert a * a.inverse() == CyclotomicValue.one(a.order)

    @settings(max_examples=120, deadline=None)
    @given(_values(), _values())
    def test_conjugation_is_involutive_homomorphism(self, a, b):
        assert a.conjugate().conjugate() == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a + b).conjugate() == a.conjugate() + b.conjugate()


class TestGaloisAndMinimalPolynomial:
    def test_galois_action(self):
        assert zeta(5).galois(2) == zeta(5, 2)
        assert zeta(5).galois(4) == zeta(5).conjugate()
        with pytest.raises(ValueError):
            zeta(6).galois(2)

    def test_minimal_polynomials(self):
        # zeta_5: the 5th cyclotomic polynomial
        assert zeta(5).minimal_polynomial() == (1, 1, 1, 1, 1)
        # zeta_3 - zeta_3^2 = i sqrt(3): x^2 + 3
        v = zeta(3) - zeta(3, 2)
        assert v.minimal_polynomial() == (3, 0, 1)
        # rationals: x - q
        assert rat(Fraction(2, 3)).minimal_polynomial() == (Fraction(-2, 3), 1)

    def test_min_poly_independent_of_ambient_order(self):
        assert zeta(3).minimal_polynomial() == zeta(6, 2).minimal_polynomial()
        assert zeta(4).minimal_polynomial() == zeta(12, 3).minimal_polynomial()

    def test_hash_respects_cross_order_equality(self):
        assert hash(zeta(3)) == hash(zeta(6, 2))
        assert hash(zeta(4)) == hash(zeta(12, 3))
        assert len({zeta(3), zeta(6, 2)}) == 1
        assert hash(rat(Fraction(1, 2))) == hash(Fraction(1, 2))

    def test_set_membership_across_orders(self):
        values = {zeta(3) + 1, zeta(5), rat(7)}
        assert (zeta(6, 2) + 1) in values
        assert zeta(10, 2) in values
        assert rat(7) in values


class TestSerialization:
    def test_json_roundtrip(self):
        v = zeta(5) - rat(Fraction(2, 3))
        data = v.to_json()
        assert data["order"] == 5
        assert data["coefficients"][0] == "-2/3"
        assert CyclotomicValue.from_json(data) == v

    def test_str_forms(self):
        assert str(rat(Fraction(-1, 9))) == "-1/9"
        assert str(zeta(3)) == "z3"
        assert str(zeta(5, 2) * 3) == "3*z5^2"

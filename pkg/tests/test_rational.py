"""Exact rational and polynomial arithmetic."""

import random
from fractions import Fraction

import pytest

from conftest import rand_poly, rand_rat
from thetares import NonDivisibleError, Poly, Rat


class TestRat:
    def test_add(self):
        assert Rat(1, 2) + Rat(1, 3) == Rat(5, 6)

    def test_mul(self):
        assert Rat(-3, 4) * Rat(4, 3) == -1

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Rat(1) / Rat(0)
        with pytest.raises(ZeroDivisionError):
            Rat(1, 0)

    def test_always_reduced(self):
        r = Rat(6, -4)
        assert r.numerator == -3 and r.denominator == 2

    def test_string_round_trip(self):
        for text in ("-21/32768", "4", "0", "1/2"):
            assert str(Rat(text)) == text


class TestPolyBasics:
    def test_mul(self):
        assert Poly([1, 1]) * Poly([1, -1]) == Poly([1, 0, -1])

    def test_add_cancels(self):
        assert Poly([0, 0, 1]) + Poly([0, 0, -1]) == Poly()

    def test_mul_zero(self):
        assert Poly() * Poly([1, 1]) == Poly()

    def test_degree(self):
        assert Poly([1, 2, 3]).degree == 2
        assert Poly().degree == float("-inf")
        assert not Poly([0, 0])

    def test_trailing_zeros_stripped(self):
        assert Poly([1, 0, 0]) == Poly([1])
        assert Poly([1, 0, 0]).degree == 0

    def test_cleared_form_is_canonical(self):
        p = Poly(["1/2", "1/3"])
        assert p.int_coeffs == (3, 2) and p.int_den == 6
        # content is only reduced against the denominator
        q = Poly([2, 4])
        assert q.int_coeffs == (2, 4) and q.int_den == 1

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            Poly([0.5])


class TestPolyCalculus:
    def test_diff_cube(self):
        assert Poly([0, 0, 0, 1]).diff() == Poly([0, 0, 3])

    def test_diff_constant(self):
        assert Poly([7]).diff() == Poly()

    def test_diff_quadratic(self):
        assert Poly([1, -2, 1]).diff() == Poly([-2, 2])

    def test_eval_root(self):
        assert Poly([1, -2])(Rat(1, 2)) == 0
        assert Poly([1, 0, -1])(1) == 0

    def test_eval_value(self):
        assert Poly([1, 0, 1])(Rat(2, 3)) == Rat(13, 9)


class TestDivexactLinear:
    def test_one_minus_v(self):
        assert Poly([1, 0, -1]).divexact_linear(1) == Poly([1, 1])

    def test_one_minus_2v(self):
        assert Poly([1, -4, 4]).divexact_linear(2) == Poly([1, -2])

    def test_not_divisible(self):
        with pytest.raises(NonDivisibleError):
            Poly([1, 0, 1]).divexact_linear(1)


class TestPolyProperties:
    def test_ring_axioms(self):
        rng = random.Random(20260810)
        for _ in range(60):
            p, q, r = (rand_poly(rng) for _ in range(3))
            assert (p + q) * r == p * r + q * r
            assert p * q == q * p
            assert (p + q) + r == p + (q + r)

    def test_diff_is_linear_and_leibniz(self):
        rng = random.Random(4096)
        for _ in range(60):
            p, q = rand_poly(rng), rand_poly(rng)
            c = rand_rat(rng)
            assert (p + q).diff() == p.diff() + q.diff()
            assert (p * c).diff() == p.diff() * c
            assert (p * q).diff() == p.diff() * q + p * q.diff()

    def test_divexact_round_trip(self):
        rng = random.Random(1729)
        for _ in range(80):
            q = rand_poly(rng)
            j = rng.randint(1, 20)
            assert (q * Poly([1, -j])).divexact_linear(j) == q

    def test_pow_matches_iterated_mul(self):
        rng = random.Random(7)
        p = rand_poly(rng, max_deg=3)
        acc = Poly([1])
        for e in range(6):
            assert p**e == acc
            acc = acc * p

    def test_eval_matches_coeff_sum(self):
        rng = random.Random(99)
        for _ in range(40):
            p = rand_poly(rng)
            r = rand_rat(rng)
            expected = sum((c * r**i for i, c in enumerate(p.coeffs)), Fraction(0))
            assert p(r) == expected


class TestPolySerialization:
    def test_string_round_trip(self):
        p = Poly(["-21/32768", "4", "0", "1/2"])
        assert Poly.from_strings(p.to_strings()) == p

    def test_coeff_strings(self):
        assert Poly([Rat(-1, 4), 2]).to_strings() == ["-1/4", "2"]

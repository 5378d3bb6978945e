from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betapar.algebraic import (
    BetaBase,
    MinimalPolynomial,
    QuotientValue,
    base_from_spec,
    certified_floor,
    dbonacci_base,
    eval_digit_string,
    qv_add,
    qv_mul_beta_pow,
    qv_sign,
    qv_sub,
    refine_beta,
    root_moduli,
    self_reciprocal,
    values_equal,
)
from betapar.digits import DigitString, parse_digits


def qv(base, *coeffs, scale=0):
    return QuotientValue(base, coeffs, scale)


class TestQuotientArithmetic:
    def test_zero_identity(self, fib):
        z = QuotientValue.from_int(fib, 0)
        assert qv_add(z, z).is_zero()

    def test_fibonacci_beta_plus_one_is_beta_squared(self, fib):
        # by hand: X^2 = X + 1, so beta + 1 reduces to the vector (1, 1)
        s = qv_add(QuotientValue.beta_power(fib, 1), QuotientValue.from_int(fib, 1))
        assert s.coeffs == (1, 1) and s.scale == 0
        assert values_equal(s, QuotientValue.beta_power(fib, 2))

    def test_doubling_at_scale(self, fib):
        inv = QuotientValue.beta_power(fib, -1)
        s = qv_add(inv, inv)
        assert values_equal(s, qv_mul_beta_pow(QuotientValue.from_int(fib, 2), -1))

    def test_mul_beta_pow_examples(self, fib):
        one = QuotientValue.from_int(fib, 1)
        assert qv_mul_beta_pow(one, 2).coeffs == (1, 1)
        assert qv_mul_beta_pow(one, 0) is one
        down_up = qv_mul_beta_pow(qv_mul_beta_pow(one, -1), 1)
        assert values_equal(down_up, one)

    def test_mismatched_bases_rejected(self, fib, tri):
        with pytest.raises(ValueError):
            qv_add(QuotientValue.from_int(fib, 1), QuotientValue.from_int(tri, 1))


class TestValuesEqual:
    def test_worked_conversion_case(self, qp42):
        a = eval_digit_string(parse_digits("1,2,2.2"), qp42)
        b = eval_digit_string(parse_digits("0,7,0"), qp42)
        assert values_equal(a, b)

    def test_zeros_at_different_scales(self, fib):
        assert values_equal(qv(fib, 0, 0), qv(fib, 0, 0, scale=3))

    def test_fibonacci_relation(self, fib):
        a = eval_digit_string(parse_digits("1,1"), fib)
        b = eval_digit_string(parse_digits("1,0,0"), fib)
        assert values_equal(a, b)


@settings(max_examples=60, deadline=None)
@given(c0=st.integers(-50, 50), c1=st.integers(-50, 50),
       e=st.integers(0, 6), n=st.integers(-20, 20))
def test_mul_beta_pow_roundtrip(c0, c1, e, n):
    base = _FIB
    a = QuotientValue(base, (c0, c1), e)
    assert values_equal(qv_mul_beta_pow(qv_mul_beta_pow(a, n), -n), a)


@settings(max_examples=40, deadline=None)
@given(c0=st.integers(-30, 30), c1=st.integers(-30, 30),
       i=st.integers(0, 4), j=st.integers(0, 4))
def test_values_equal_is_equivalence(c0, c1, i, j):
    # reflexive on a, symmetric and transitive across scaled copies of a
    base = _FIB
    a = QuotientValue(base, (c0, c1), 0)
    b = qv_mul_beta_pow(qv_mul_beta_pow(a, i), -i)
    c = qv_mul_beta_pow(qv_mul_beta_pow(a, -j), j)
    assert values_equal(a, a)
    assert values_equal(a, b) and values_equal(b, a)
    assert values_equal(a, b) and values_equal(b, c) and values_equal(a, c)


_FIB = dbonacci_base(2)


class TestEvalDigitString:
    def test_empty(self, fib):
        assert eval_digit_string(DigitString(), fib).is_zero()

    def test_linearity_against_digitwise_sum(self, fib):
        import random

        rng = random.Random(12)
        for _ in range(50):
            n = rng.randint(0, 8)
            s = DigitString(tuple(rng.randint(-3, 3) for _ in range(n)),
                            rng.randint(-2, 4))
            m = rng.randint(0, 8)
            t = DigitString(tuple(rng.randint(-3, 3) for _ in range(m)),
                            rng.randint(-2, 4))
            lhs = qv_add(eval_digit_string(s, fib), eval_digit_string(t, fib))
            assert values_equal(lhs, eval_digit_string(s + t, fib))

    def test_unit(self, fib):
        v = eval_digit_string(parse_digits("1"), fib)
        assert values_equal(v, QuotientValue.from_int(fib, 1))

    def test_two_as_beta_plus_beta_minus2(self, fib):
        v = eval_digit_string(parse_digits("1,0.0,1"), fib)
        assert values_equal(v, QuotientValue.from_int(fib, 2))

    def test_scale_tracks_fraction(self, fib):
        v = eval_digit_string(parse_digits("0.0,1"), fib)
        assert values_equal(v, QuotientValue.beta_power(fib, -2))


class TestRefineAndFloor:
    def test_refine_fibonacci(self, fib):
        iv = refine_beta(fib, Fraction(1, 1000))
        assert iv.width <= Fraction(1, 1000)
        assert iv.lo <= Fraction(16181, 10000) <= iv.hi or iv.lo <= Fraction(1618, 1000) <= iv.hi

    def test_refine_tribonacci(self, tri):
        iv = refine_beta(tri, Fraction(1, 1000))
        assert iv.lo < Fraction(18393, 10000) < iv.hi

    def test_refine_no_op_width(self, fib):
        iv = refine_beta(fib, fib.interval.width)
        assert iv.lo == fib.interval.lo and iv.hi == fib.interval.hi

    def test_floor_exact_integer(self, fib):
        assert certified_floor(QuotientValue.from_int(fib, 2)) == 2

    def test_floor_beta_powers(self, fib):
        assert certified_floor(QuotientValue.beta_power(fib, 1)) == 1
        assert certified_floor(QuotientValue.beta_power(fib, 2)) == 2

    def test_floor_bracket_property(self, fib):
        for coeffs, scale in [((3, -1), 0), ((-5, 4), 1), ((7, 2), 3), ((0, 1), 2)]:
            v = QuotientValue(fib, coeffs, scale)
            n = certified_floor(v)
            assert qv_sign(qv_sub(v, QuotientValue.from_int(fib, n))) >= 0
            assert qv_sign(qv_sub(v, QuotientValue.from_int(fib, n + 1))) < 0


class TestPolynomialValidation:
    def test_monic_required(self):
        with pytest.raises(ValueError):
            MinimalPolynomial([2, -1, -1])

    def test_degree_at_least_two(self):
        with pytest.raises(ValueError):
            MinimalPolynomial([1, -2])

    def test_rational_root_rejected(self):
        with pytest.raises(ValueError):
            MinimalPolynomial([1, -3, 2])  # (X-1)(X-2)
        with pytest.raises(ValueError):
            MinimalPolynomial([1, -4, 4])  # (X-2)^2

    def test_interval_validation(self):
        with pytest.raises(ValueError):
            BetaBase([1, -1, -1], (Fraction(1, 2), 2))  # lo <= 1
        with pytest.raises(ValueError):
            BetaBase([1, -1, -1], (3, 4))  # no sign change

    def test_conjugate_roots_are_distinct_bases(self):
        # X^2 - 6X + 7 has two real roots above 1 (3 +- sqrt(2)); bases
        # bracketing different roots must not be interchangeable
        big = BetaBase([1, -6, 7], (3, 5))
        small = BetaBase([1, -6, 7], (Fraction(3, 2), 2))
        assert big != small
        assert big == BetaBase([1, -6, 7], (4, Fraction(9, 2)))
        with pytest.raises(ValueError):
            qv_add(QuotientValue.from_int(big, 1), QuotientValue.from_int(small, 1))
        assert certified_floor(QuotientValue.beta_power(big, 1)) == 4
        assert certified_floor(QuotientValue.beta_power(small, 1)) == 1


class TestSelfReciprocal:
    @pytest.mark.parametrize("coeffs,expected", [
        ([1, -1, -1], False),
        ([1, -1, -1, -1, 1], True),
        ([1, -4, -2], False),
        ([1, -2, 3, -2, 1], True),
    ])
    def test_examples(self, coeffs, expected):
        assert self_reciprocal(coeffs) is expected


def _within(enc, lo, hi):
    return Fraction(lo) <= enc[0] and enc[1] <= Fraction(hi)


class TestRootModuli:
    def test_fibonacci(self):
        enc = root_moduli([1, -1, -1])
        assert len(enc) == 2
        assert _within(enc[0], "0.6180", "0.6181")
        assert _within(enc[1], "1.6180", "1.6181")

    def test_tribonacci_conjugate_pair(self):
        enc = root_moduli([1, -1, -1, -1])
        assert len(enc) == 3
        assert _within(enc[0], "0.7373", "0.7374")
        assert _within(enc[1], "0.7373", "0.7374")
        assert _within(enc[2], "1.8392", "1.8393")

    def test_quadratic_wide(self):
        enc = root_moduli([1, -4, -2])
        assert _within(enc[0], "0.4494", "0.4495")
        assert _within(enc[1], "4.4494", "4.4495")

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_dbonacci_modulus_product_admits_one(self, d):
        # the product of all root moduli equals |constant term| = 1
        enc = root_moduli([1] + [-1] * d)
        lo = hi = Fraction(1)
        for l, h in enc:
            lo *= l
            hi *= h
        assert lo <= 1 <= hi


def test_base_from_spec_forms():
    assert base_from_spec("fibonacci").poly.coefficients == (1, -1, -1)
    assert base_from_spec("dbonacci:4").poly.degree == 4
    assert base_from_spec("quadratic-plus:4,2").poly.coefficients == (1, -4, -2)
    assert base_from_spec("quadratic-minus:4,1").poly.coefficients == (1, -4, 1)
    raw = base_from_spec("1,-1,-1,-1")
    assert raw.poly.coefficients == (1, -1, -1, -1)
    with pytest.raises(ValueError):
        base_from_spec("nonsense")

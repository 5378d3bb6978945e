import pytest

from betapar.bounds import (
    IMPOSSIBLE_EVIDENCE,
    NO_EVIDENCE,
    block_impossible_unit_conjugate,
    block_lower_bound_nonsimple,
    block_lower_bound_simple,
    lower_bound_1block,
    upper_bound_corollaries,
)
from betapar.numeration import parse_eventually_periodic as eps


class TestOneBlock:
    def test_fibonacci(self):
        assert lower_bound_1block([1, -1, -1]) == 3

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
    def test_dbonacci(self, d):
        assert lower_bound_1block([1] + [-1] * d) == d + 1

    def test_quadratic(self):
        # |f(1)| = |1-4-2| = 5, +2 for a real base; attained by a+b+1 = 7
        assert lower_bound_1block([1, -4, -2]) == 7

    def test_without_real_bonus(self):
        assert lower_bound_1block([1, -1, -1], is_real_gt1=False) == 1


class TestSimpleBound:
    def test_42(self):
        assert block_lower_bound_simple(eps("42")) == 7

    def test_tribonacci(self):
        assert block_lower_bound_simple(eps("111")) == 3

    def test_hypothesis_violation(self):
        assert block_lower_bound_simple(eps("12")) is None

    def test_single_digit_not_applicable(self):
        assert block_lower_bound_simple(eps("3")) is None

    def test_infinite_not_applicable(self):
        assert block_lower_bound_simple(eps("3(1)")) is None

    def test_interior_dip_not_applicable(self):
        # t_m must be <= every t_i, so an interior 0 breaks the hypothesis
        assert block_lower_bound_simple(eps("101")) is None


class TestNonSimpleBound:
    def test_minus_42(self):
        assert block_lower_bound_nonsimple(eps("3(1)")) == 5

    def test_minus_31(self):
        assert block_lower_bound_nonsimple(eps("2(1)")) == 3

    def test_case3_violation(self):
        assert block_lower_bound_nonsimple(eps("11(2)")) is None

    def test_finite_not_applicable(self):
        assert block_lower_bound_nonsimple(eps("42")) is None

    def test_case2(self):
        # m=1, p=2: t1 > t2 > t3
        assert block_lower_bound_nonsimple(eps("5(31)")) == 2 * 5 - 3

    def test_case3_longer_preperiod(self):
        assert block_lower_bound_nonsimple(eps("532(1)")) == 2 * 5 - 3


class TestUpperBounds:
    def test_42(self):
        assert upper_bound_corollaries(eps("42")) == (6, 8)

    def test_tribonacci_pins_m(self):
        assert upper_bound_corollaries(eps("111")) == (2, 2)

    def test_minus(self):
        assert upper_bound_corollaries(eps("3(1)")) == (4, 6)

    def test_not_applicable(self):
        assert upper_bound_corollaries(eps("12")) is None
        assert upper_bound_corollaries(eps("1(12)")) is None

    def test_lower_never_exceeds_upper(self):
        for text in ["42", "111", "53", "3(1)", "2(1)", "521(1)"]:
            iv = upper_bound_corollaries(eps(text))
            if iv is not None:
                assert iv[0] <= iv[1]


class TestUnitCircleReporter:
    def test_salem_like_quartic(self):
        assert block_impossible_unit_conjugate([1, -1, -1, -1, 1]) == IMPOSSIBLE_EVIDENCE

    def test_fibonacci(self):
        assert block_impossible_unit_conjugate([1, -1, -1]) == NO_EVIDENCE

    def test_tribonacci(self):
        assert block_impossible_unit_conjugate([1, -1, -1, -1]) == NO_EVIDENCE

    def test_palindrome_without_unit_root(self):
        # palindromic, but all four roots are real and far from modulus 1,
        # so the palindrome test alone must not produce evidence
        assert block_impossible_unit_conjugate([1, -7, 13, -7, 1]) == NO_EVIDENCE

import random

import pytest
import sympy as sp

from tests.utils import f_s, lp
from vlink.poly import ExponentSum, LaurentPolynomial


def random_lp(rng: random.Random) -> LaurentPolynomial:
    return LaurentPolynomial((rng.randint(-4, 4), rng.randint(-3, 3)) for _ in range(rng.randint(0, 5)))


class TestLaurentPolynomial:
    def test_cancellation(self):
        assert (lp((1, 1), (0, -1)) + lp((0, 1), (1, -1))).is_zero()

    def test_shift(self):
        assert lp((1, 1)).shift(-2) == lp((-1, 1))

    def test_f_plus_negation(self):
        assert (f_s() + (-f_s())).is_zero()

    def test_invert_variable(self):
        assert lp((2, 1), (1, -1)).invert_variable() == lp((-2, 1), (-1, -1))
        assert f_s().invert_variable() == lp((1, 1), (-1, 1), (0, -1), (-2, -1))
        assert f_s().invert_variable().invert_variable() == f_s()

    def test_no_zero_coefficients_stored(self):
        p = LaurentPolynomial({3: 0, 1: 2, -1: 0})
        assert p.terms == ((1, 2),)
        assert all(c != 0 for _, c in (p - p + lp((0, 5))).terms)

    def test_integer_coercion(self):
        assert lp((0, 2)) == 2
        assert (lp((1, 1)) - 1).terms == ((0, -1), (1, 1))
        assert 3 * lp((1, 1)) == lp((1, 3))

    def test_ring_axioms_on_random_inputs(self):
        rng = random.Random(7)
        one = LaurentPolynomial.constant(1)
        for _ in range(200):
            a, b, c = random_lp(rng), random_lp(rng), random_lp(rng)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a * one == a
            assert a + b == b + a
            assert (a + b).invert_variable() == a.invert_variable() + b.invert_variable()

    def test_evaluate_at_one(self):
        assert f_s().evaluate(1) == 0
        assert lp((2, 3), (-1, 1)).evaluate(1) == 4

    def test_coeff_abs_sum(self):
        assert lp((2, 1), (1, -1)).coeff_abs_sum() == 2
        assert LaurentPolynomial.zero().coeff_abs_sum() == 0
        assert lp((0, -2), (1, 1)).coeff_abs_sum(exclude_zero_exponent=True) == 1

    def test_json_form(self):
        p = lp((2, 1), (-1, -3))
        assert p.to_json() == [[-1, -3], [2, 1]]
        assert LaurentPolynomial.from_json(p.to_json()) == p

    def test_matches_sympy_expansion(self):
        x = sp.Symbol("x")
        rng = random.Random(17)
        for _ in range(100):
            a, b = random_lp(rng), random_lp(rng)
            expected = sp.expand(a.as_expr(x) * b.as_expr(x) - b.as_expr(x).subs(x, 1 / x))
            assert (a * b - b.invert_variable()).as_expr(x) == expected
            assert LaurentPolynomial.from_expr(expected, x) == a * b - b.invert_variable()

    def test_from_expr(self):
        s = sp.Symbol("s")
        assert LaurentPolynomial.from_expr((s - 1) ** 2 / s, s) == lp((1, 1), (0, -2), (-1, 1))
        assert LaurentPolynomial.from_expr(sp.Integer(0), s).is_zero()

    @pytest.mark.parametrize("bad", ["s/2", "s**(1/2)", "s*t"])
    def test_from_expr_rejects_non_laurent(self, bad):
        with pytest.raises(ValueError):
            LaurentPolynomial.from_expr(sp.sympify(bad), sp.Symbol("s"))

    @pytest.mark.parametrize("terms, text", [
        ((), "0"),
        (((2, 1), (1, -1)), "-t + t^2"),
        (((-1, 1), (0, -2), (1, 1)), "t^-1 - 2 + t"),
        (((0, 1),), "1"),
    ])
    def test_format(self, terms, text):
        assert LaurentPolynomial(terms).format("t") == text


class TestExponentSum:
    def test_term_cancellation(self):
        g = f_s()
        assert (ExponentSum.term(1, g) - ExponentSum.term(1, g)).is_zero()
        assert (ExponentSum.unit(1) - ExponentSum.unit(1)).is_zero()

    def test_terms_merge(self):
        g = f_s()
        assert ExponentSum.term(2, g) + ExponentSum.term(3, g) == ExponentSum.term(5, g)

    def test_kishino_shape_has_two_terms(self):
        e = ExponentSum.term(2, f_s()) - ExponentSum.term(2, f_s().invert_variable())
        assert len(e) == 2
        assert e.coeff_abs_sum() == 4

    def test_invert_t(self):
        g = f_s()
        assert ExponentSum.term(1, g).invert_t() == ExponentSum.term(1, -g)
        assert ExponentSum.unit(3).invert_t() == ExponentSum.unit(3)

    def test_invert_s(self):
        symmetric = lp((1, 1), (-1, 1))
        assert ExponentSum.zero().invert_s().is_zero()
        assert ExponentSum.term(2, symmetric).invert_s() == ExponentSum.term(2, symmetric)
        e = ExponentSum.term(2, f_s()) - ExponentSum.term(1, lp((3, 1)))
        assert e.invert_s().invert_s() == e

    def test_group_laws_on_random_inputs(self):
        rng = random.Random(13)
        for _ in range(100):
            parts = [ExponentSum.term(rng.randint(-3, 3), LaurentPolynomial({rng.randint(-2, 2): rng.randint(-2, 2)}))
                     for _ in range(6)]
            a, b, c = parts[0] + parts[1], parts[2] + parts[3], parts[4] + parts[5]
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert a + ExponentSum.zero() == a
            assert (a + b).invert_t() == a.invert_t() + b.invert_t()
            assert a.invert_t().invert_t() == a
            assert all(coeff != 0 for _, coeff in (a - b).terms)

    def test_coeff_abs_sum_excluding_unit(self):
        e = ExponentSum.term(2, f_s()) + ExponentSum.unit(-2)
        assert e.coeff_abs_sum() == 4
        assert e.coeff_abs_sum(exclude_zero_exponent=True) == 2
        assert e.coeff_abs_sum_excluding(f_s()) == 2

    def test_json_form(self):
        e = ExponentSum.term(-2, lp((1, 1))) + ExponentSum.unit(1)
        assert e.to_json() == [{"coeff": 1, "exp": []}, {"coeff": -2, "exp": [[1, 1]]}]
        assert ExponentSum.from_json(e.to_json()) == e

    def test_sum_builtin(self):
        total = sum([ExponentSum.unit(1), ExponentSum.unit(2)])
        assert total == ExponentSum.unit(3)

    def test_sympy_form(self):
        t, s = sp.symbols("t s")
        f = 1 / s + s - 1 - s ** 2
        e = ExponentSum.term(2, f_s()) - ExponentSum.unit(2)
        assert e.as_expr(t, s) == 2 * t ** f - 2
        assert ExponentSum.from_expr(2 * t ** f - 2, t, s) == e
        assert ExponentSum.from_expr(t * t ** s, t, s) == ExponentSum.term(1, lp((1, 1), (0, 1)))
        assert ExponentSum.from_expr(sp.Integer(0), t, s).is_zero()

    def test_from_expr_rejects_other_bases(self):
        t, s = sp.symbols("t s")
        with pytest.raises(ValueError):
            ExponentSum.from_expr(s ** 2 + t, t, s)

"""
Tests the PolyCore.py classes and methods
"""
from fractions import Fraction
import unittest

from powerresidues.PolyCore import (NotLocalError, PoleError, PolyExact, PolyQ2, F_s_poly, F_s_poly_bruteforce,
                                    compute_Sq, compute_Tq, eval_fq, eval_polylog_neg, f_q_exact, f_q_mod,
                                    is_palindromic_numerator, jl_sum_check, lerch_check,
                                    li_at_minus_x_over_one_minus_x, li_valuation, polylog_neg, polylog_neg_mod,
                                    residue_of_ratio, verify_binomial_congruence, verify_FLi_identity,
                                    verify_fq_integral_identity, verify_fq_li_congruence, verify_fq_mod_q,
                                    verify_fq_symmetry, verify_li_reciprocal, verify_li_reciprocal_membership,
                                    verify_sq_symmetry, verify_sq_tq_special_members, verify_tq_pole_exclusion)
from powerresidues.QArith import INFINITY, NotCoprimeError, NotPrimeError, q_valuation


class Test_PolyCore(unittest.TestCase):
    """test module implementing polylogarithms, f_q, S_q and T_q"""

    def test_polylog_neg(self):
        """numerators are x times the Eulerian polynomials"""
        li = polylog_neg(0)
        self.assertEqual(li.numerator.coeffs, (0, 1))
        self.assertEqual(li.d, 1)
        self.assertEqual(polylog_neg(2).numerator.coeffs, (0, 1, 1))
        self.assertEqual(polylog_neg(2).d, 3)
        self.assertEqual(str(polylog_neg(2)), '(x^2 + x)/(1-x)^3')
        self.assertEqual(str(polylog_neg(4)), '(x^4 + 11x^3 + 11x^2 + x)/(1-x)^5')
        self.assertEqual(polylog_neg(6).numerator.coeffs, (0, 1, 57, 302, 302, 57, 1))
        self.assertRaises(ValueError, polylog_neg, -1)

    def test_polylog_neg_mod(self):
        """numerators reduced modulo q^2"""
        self.assertEqual(str(polylog_neg_mod(2, 3)), 'x^2 + x')
        self.assertEqual(str(polylog_neg_mod(4, 5)), 'x^4 + 11x^3 + 11x^2 + x')
        self.assertEqual(str(polylog_neg_mod(6, 7)), 'x^6 + 8x^5 + 8x^4 + 8x^3 + 8x^2 + x')

    def test_eval_polylog_neg(self):
        """exact values, with the pole at 1 rejected"""
        self.assertEqual(eval_polylog_neg(2, 0), 0)
        self.assertEqual(eval_polylog_neg(2, -1), 0)
        self.assertEqual(eval_polylog_neg(2, 2), -6)
        self.assertEqual(eval_polylog_neg(2, Fraction(1, 2)), 6)
        self.assertEqual(eval_polylog_neg(1, Fraction(1, 2)), 2)
        self.assertRaises(PoleError, eval_polylog_neg, 2, 1)

    def test_is_palindromic_numerator(self):
        """Eulerian symmetry"""
        for s in range(1, 12):
            self.assertTrue(is_palindromic_numerator(s))

    def test_f_q_exact(self):
        """f_q has coefficients in Z_(q)"""
        self.assertEqual(f_q_exact(3).coeffs, (0, -5, -3, -1))
        self.assertEqual(f_q_exact(5).degree(), 5)
        for q in (3, 5, 7, 11, 13):
            self.assertTrue(f_q_exact(q).is_local(q))
        self.assertRaises(NotPrimeError, f_q_exact, 9)
        self.assertRaises(NotPrimeError, f_q_exact, 2)

    def test_f_q_mod(self):
        """f_q modulo q^2"""
        self.assertEqual(str(f_q_mod(3)), '8x^3 + 6x^2 + 4x')
        self.assertEqual(str(f_q_mod(5)), '4x^5 + 15x^4 + 10x^2 + 21x')
        self.assertEqual(str(f_q_mod(7)), '20x^7 + 28x^6 + 28x^5 + 7x^4 + 14x^3 + 35x^2 + 15x')
        self.assertEqual(f_q_mod(3)(1), 0)
        self.assertEqual(f_q_mod(3)(4), (8 * 64 + 6 * 16 + 16) % 9)

    def test_eval_fq(self):
        """f_q at elements of Z_(q)"""
        self.assertEqual(eval_fq(3, 0), 0)
        self.assertEqual(eval_fq(3, -4), 36)
        self.assertGreaterEqual(q_valuation(eval_fq(3, -4), 3), 2)
        self.assertGreaterEqual(q_valuation(eval_fq(5, 2), 5), 2)
        self.assertEqual(q_valuation(eval_fq(3, -1), 3), 1)
        self.assertRaises(NotLocalError, eval_fq, 3, Fraction(1, 3))

    def test_compute_Sq(self):
        """S_q for small q"""
        self.assertEqual(compute_Sq(3).sorted(), [0, 1, 5])
        self.assertEqual(compute_Sq(5).sorted(), [0, 1, 2, 13, 24])
        self.assertEqual(str(compute_Sq(7)), '0 1 6 17 25 33 44')
        for q in (3, 5, 7, 11, 13):
            sq = compute_Sq(q)
            self.assertEqual(len(sq), q)
            self.assertEqual(len({b % q for b in sq.members}), q)

    def test_compute_Tq(self):
        """T_q for small q"""
        self.assertEqual(str(compute_Tq(3)), '0 8 inf')
        self.assertEqual(str(compute_Tq(5)), '0 2 13 24 inf')
        self.assertEqual(str(compute_Tq(7)), '0 9 11 24 47 48 inf')
        self.assertIn(INFINITY, compute_Tq(11))
        self.assertEqual(len(compute_Tq(11)), 11)

    def test_residue_of_ratio(self):
        """n/m mod q^2 with infinity"""
        self.assertEqual(residue_of_ratio(1, 2, 3), 5)
        self.assertEqual(residue_of_ratio(3, 1, 3), 3)
        self.assertEqual(residue_of_ratio(1, 0, 3), INFINITY)
        self.assertEqual(residue_of_ratio(1, 9, 3), INFINITY)
        self.assertIsNone(residue_of_ratio(1, 3, 3))

    def test_F_s_poly(self):
        """surjection counts against the compositions"""
        self.assertEqual(F_s_poly(0).coeffs, (1, ))
        self.assertEqual(F_s_poly(1).coeffs, (0, 1))
        self.assertEqual(F_s_poly(2).coeffs, (0, 1, 2))
        self.assertEqual(F_s_poly(3).coeffs, (0, 1, 6, 6))
        for s in range(9):
            self.assertEqual(F_s_poly(s), F_s_poly_bruteforce(s))

    def test_verify_FLi_identity(self):
        """(x + 1) F_s(x) = Li_{-s}(x / (1 + x))"""
        for s in range(1, 11):
            self.assertTrue(verify_FLi_identity(s))
        self.assertRaises(ValueError, verify_FLi_identity, 0)

    def test_verify_fq_li_congruence(self):
        """f_q = c_q Li_{1-q}(-x/(1-x)) mod q^2"""
        self.assertEqual(li_at_minus_x_over_one_minus_x(3).coeffs, (0, -1, 3, -2))
        for q in (3, 5, 7, 11):
            self.assertTrue(verify_fq_li_congruence(q))

    def test_polynomial_identities(self):
        """symmetries and congruences of f_q and Li_{1-q}"""
        for q in (3, 5, 7, 11, 13):
            self.assertTrue(verify_fq_mod_q(q))
            self.assertTrue(verify_fq_symmetry(q))
            self.assertTrue(verify_li_reciprocal(q))
            self.assertTrue(verify_fq_integral_identity(q))
            self.assertTrue(verify_sq_symmetry(q))
            self.assertTrue(verify_sq_tq_special_members(q))
            self.assertTrue(verify_tq_pole_exclusion(q))

    def test_li_reciprocal_membership(self):
        """v_q(Li(b)) >= 2 iff v_q(Li(1/b)) >= 2"""
        self.assertEqual(li_valuation(3, 2), 1)
        for q in (3, 5, 7):
            for value in (2, -3, Fraction(1, 2), Fraction(q + 1, q), Fraction(4, 9)):
                self.assertTrue(verify_li_reciprocal_membership(q, value))

    def test_verify_binomial_congruence(self):
        """the binomial sum vanishes modulo q"""
        for q in (3, 5, 7):
            for value in list(range(-3, q)) + [Fraction(1, 2)]:
                self.assertTrue(verify_binomial_congruence(q, value))
        self.assertRaises(NotLocalError, verify_binomial_congruence, 3, Fraction(1, 3))

    def test_lerch_check(self):
        """Lerch's congruence for the Fermat quotient"""
        self.assertTrue(lerch_check(5, 1))
        self.assertTrue(lerch_check(5, 2))
        self.assertTrue(lerch_check(7, 3))
        for q in (3, 5, 7, 11, 13):
            for k in range(1, q):
                self.assertTrue(lerch_check(q, k))
        self.assertRaises(NotCoprimeError, lerch_check, 5, 10)

    def test_jl_sum_check(self):
        """sum of jl over jl = k mod q"""
        self.assertTrue(jl_sum_check(3, 0))
        self.assertTrue(jl_sum_check(3, 1))
        self.assertTrue(jl_sum_check(5, 2))
        for q in (3, 5, 7, 11, 13):
            for k in range(q):
                self.assertTrue(jl_sum_check(q, k))

    def test_poly_values(self):
        """exact and reduced polynomial evaluation"""
        polynomial = PolyExact.from_coefficients([1, 0, Fraction(1, 2)])
        self.assertEqual(polynomial(2), 3)
        self.assertEqual(polynomial(Fraction(1, 2)), Fraction(9, 8))
        integral = PolyExact.from_coefficients([1, -1, 2, 0, 0])
        self.assertEqual(integral.degree(), 2)
        self.assertEqual(integral(Fraction(1, 3)), Fraction(8, 9))
        self.assertEqual(PolyExact.from_coefficients([])(5), 0)
        self.assertEqual(PolyExact.from_sympy(integral.to_sympy()), integral)
        self.assertEqual(PolyQ2.from_coefficients(3, [Fraction(1, 2), 9, 0]).coeffs, (5, ))
        self.assertTrue(PolyQ2.from_coefficients(3, [9, 18]).is_zero())

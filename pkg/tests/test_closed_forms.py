"""
Unit tests for the explicit coefficient formulas in app/services/closed_forms.py.
"""

import math
import unittest

from app.services import closed_forms as cf
from app.services.closed_forms import BoundaryKind, FormulaId
from app.services.recursion import poly_A_recursive, poly_B_recursive
from tests.reference_tables import A3, B3


class TestHelpers(unittest.TestCase):

    def test_falling_factorial(self):
        self.assertEqual(cf.falling_factorial(5, 0), 1)
        self.assertEqual(cf.falling_factorial(5, 2), 20)
        self.assertEqual(cf.falling_factorial(3, 5), 0)
        with self.assertRaises(ValueError):
            cf.falling_factorial(3, -1)

    def test_binom(self):
        self.assertEqual(cf.binom(5, 2), 10)
        self.assertEqual(cf.binom(4, 7), 0)
        self.assertEqual(cf.binom(4, -1), 0)
        self.assertEqual(cf.binom(-1, 3), -1)
        self.assertEqual(cf.binom(-2, 2), 3)

    def test_split_length(self):
        self.assertEqual(cf.split_length(3, 8), (2, 2))
        for k in (0, -2):
            with self.assertRaises(ValueError):
                cf.split_length(k, 5)
        with self.assertRaises(ValueError):
            cf.closed_A_coefficients(0, 5)

    def test_split_must_be_in_range(self):
        with self.assertRaises(ValueError):
            cf.coeff_A_incl_excl(3, 2, 3, 0)
        with self.assertRaises(ValueError):
            cf.coeff_B_total_dual(3, -1, 0, 0)


class TestAForms(unittest.TestCase):

    def test_boundary_low(self):
        self.assertEqual(cf.coeff_A_boundary_low(3, 2, 0), 72)
        self.assertEqual(cf.coeff_A_boundary_low(3, 0, 1), 1)
        self.assertEqual(cf.coeff_A_boundary_low(3, 3, 0), 10800)

    def test_boundary_high(self):
        self.assertEqual(cf.coeff_A_boundary_high(3, 2, 0), 192)
        self.assertEqual(cf.coeff_A_boundary_high(3, 5, 0), 13934592000)
        self.assertEqual(cf.coeff_A_boundary_high(3, 4, 2), 1393459200)

    def test_incl_excl(self):
        self.assertEqual(cf.coeff_A_incl_excl(3, 2, 0, 1), 456)
        self.assertEqual(cf.coeff_A_incl_excl(2, 1, 0, 1), 1)
        self.assertEqual(cf.coeff_A_incl_excl(3, 5, 0, 4), 191981664000)
        self.assertEqual(cf.coeff_A_incl_excl(3, 2, 0, 3), 0)
        self.assertEqual(cf.coeff_A_incl_excl(3, 2, 0, -1), 0)

    def test_dual(self):
        # native index s counts down from x^n
        self.assertEqual(cf.coeff_A_dual(3, 2, 0, 0), 192)
        self.assertEqual(cf.coeff_A_dual(3, 3, 0, 2), 133920)
        for k in (2, 3, 4):
            for j in range(k):
                self.assertEqual(cf.coeff_A_dual(k, 0, j, 0), math.factorial(j))

    def test_incl_excl_equals_dual(self):
        for k in range(1, 6):
            for n in range(0, 13):
                for j in range(k):
                    for s in range(n + 1):
                        self.assertEqual(cf.coeff_A_incl_excl(k, n, j, s), cf.coeff_A_dual(k, n, j, n - s),
                                         msg=f"k={k} n={n} j={j} s={s}")

    def test_published_table(self):
        for length, coeffs in A3.items():
            self.assertEqual(cf.closed_A_coefficients(3, length), coeffs + [0] * (length // 3 + 1 - len(coeffs)))


class TestOmega(unittest.TestCase):

    def test_examples(self):
        for k in (2, 3, 5):
            for r in range(5):
                self.assertEqual(cf.omega(k, 1, r), 1)
        self.assertEqual(cf.omega(3, 2, 1), 5)
        self.assertEqual(cf.omega(2, 2, 0), 2)

    def test_forms_agree(self):
        for k in range(1, 7):
            for n in range(1, 21):
                for r in range(0, 21):
                    self.assertEqual(cf.omega_sum(k, n, r), cf.omega_product(k, n, r))

    def test_needs_positive_n(self):
        with self.assertRaises(ValueError):
            cf.omega(3, 0, 1)


class TestBForms(unittest.TestCase):

    def test_boundary(self):
        self.assertEqual(cf.coeff_B_boundary(3, 2, 0, BoundaryKind.TOTAL_0), 360)
        self.assertEqual(cf.coeff_B_boundary(3, 2, 0, BoundaryKind.SPLIT_00), 192)
        self.assertEqual(cf.coeff_B_boundary(3, 2, 0, BoundaryKind.SPLIT_10), 168)
        self.assertEqual(cf.coeff_B_boundary(3, 2, 0, "B1-(n-1)"), 72)
        self.assertEqual(cf.coeff_B_boundary(3, 2, 0, BoundaryKind.TOTAL_N), 0)
        self.assertEqual(cf.coeff_B_boundary(3, 3, 1, BoundaryKind.SPLIT_0N), 75600)

    def test_unknown_boundary_kind(self):
        with self.assertRaises(ValueError):
            cf.coeff_B_boundary(3, 2, 0, "middle")

    def test_total_dual(self):
        self.assertEqual(cf.coeff_B_total_dual(3, 2, 0, 1), 360)
        self.assertEqual(cf.coeff_B_total_dual(3, 2, 0, 0), 0)
        # B^(2)_5 = 36 + 72x + 12x^2 in total
        self.assertEqual(cf.coeff_B_total_dual(2, 2, 1, 1), 72)

    def test_total_incl_excl(self):
        self.assertEqual(cf.coeff_B_total_incl_excl(3, 2, 0, 0), 360)
        self.assertEqual(cf.coeff_B_total_incl_excl(3, 0, 2, 1), 0)
        self.assertEqual(cf.coeff_B_total_incl_excl(3, 4, 0, 2), 150958080 + 50440320)

    def test_total_forms_agree(self):
        for k in range(2, 6):
            for n in range(0, 13):
                for j in range(k):
                    for s in range(n + 1):
                        self.assertEqual(cf.coeff_B_total_incl_excl(k, n, j, s), cf.coeff_B_total_dual(k, n, j, n - s),
                                         msg=f"k={k} n={n} j={j} s={s}")

    def test_B1(self):
        self.assertEqual(cf.coeff_B1(3, 2, 0, 0), 72)
        self.assertEqual(cf.coeff_B1(3, 2, 0, 1), 168)
        self.assertEqual(cf.coeff_B1(3, 0, 1, 0), 0)
        self.assertEqual(cf.coefficient(FormulaId.B1_FORM, 3, 2, 0, 2), 0)

    def test_B0(self):
        self.assertEqual(cf.coefficient(FormulaId.B0_FORM, 3, 2, 0, 1), 288)
        self.assertEqual(cf.coefficient(FormulaId.B0_FORM, 3, 2, 0, 2), 0)
        self.assertEqual(cf.coefficient(FormulaId.B0_FORM, 3, 1, 1, 1), 6)
        self.assertEqual(cf.coeff_B0(3, 1, 1, -1), 6)

    def test_total_is_B0_plus_B1(self):
        for k in range(2, 6):
            for n in range(0, 10):
                for j in range(k):
                    for d in range(n + 1):
                        total = cf.coefficient(FormulaId.B_TOTAL_INCL_EXCL, k, n, j, d)
                        split = (cf.coefficient(FormulaId.B0_FORM, k, n, j, d)
                                 + cf.coefficient(FormulaId.B1_FORM, k, n, j, d))
                        self.assertEqual(total, split, msg=f"k={k} n={n} j={j} degree={d}")

    def test_published_table(self):
        for length, (z0, z1) in B3.items():
            got0, got1 = cf.closed_B_split_coefficients(3, length)
            width = length // 3 + 1
            self.assertEqual(got0, z0 + [0] * (width - len(z0)), msg=f"z0 at {length}")
            self.assertEqual(got1, z1 + [0] * (width - len(z1)), msg=f"z1 at {length}")

    def test_k2_split(self):
        self.assertEqual(cf.closed_B_split_coefficients(2, 4), ([4, 8, 0], [8, 4, 0]))


class TestCoefficientAccessor(unittest.TestCase):

    def test_out_of_support_is_zero(self):
        for formula in (FormulaId.A_INCL_EXCL, FormulaId.A_DUAL, FormulaId.B_TOTAL_DUAL, FormulaId.B0_FORM):
            self.assertEqual(cf.coefficient(formula, 3, 2, 0, 3), 0)
            self.assertEqual(cf.coefficient(formula, 3, 2, 0, -1), 0)

    def test_boundaries_by_degree(self):
        self.assertEqual(cf.coefficient(FormulaId.A_BOUNDARY_LOW, 3, 2, 0, 0), 72)
        self.assertEqual(cf.coefficient("A-boundary-high", 3, 2, 0, 2), 192)
        self.assertEqual(cf.coefficient(FormulaId.B_BOUNDARY, 3, 2, 0, 0), 360)
        self.assertEqual(cf.coefficient(FormulaId.B_BOUNDARY, 3, 2, 0, 0, z=1), 168)
        self.assertEqual(cf.coefficient(FormulaId.B_BOUNDARY, 3, 2, 0, 1, z=1), 72)
        self.assertEqual(cf.coefficient(FormulaId.B_BOUNDARY, 3, 2, 0, 2, z=1), 0)

    def test_boundary_forms_reject_inner_degrees(self):
        with self.assertRaises(ValueError):
            cf.coefficient(FormulaId.A_BOUNDARY_LOW, 3, 2, 0, 1)
        with self.assertRaises(ValueError):
            cf.coefficient(FormulaId.B_BOUNDARY, 3, 3, 0, 1)
        with self.assertRaises(ValueError):
            cf.coefficient(FormulaId.OMEGA, 3, 2, 0, 1)

    def test_unknown_formula(self):
        with self.assertRaises(ValueError):
            cf.coefficient("C-form", 3, 2, 0, 1)

    def test_matches_recursion(self):
        for k in range(2, 6):
            for length in range(0, 25):
                n, j = cf.split_length(k, length)
                a = poly_A_recursive(k, length)
                b = poly_B_recursive(k, length)
                for d in range(n + 1):
                    self.assertEqual(cf.coefficient(FormulaId.A_DUAL, k, n, j, d), a.coeff(d))
                    self.assertEqual(cf.coefficient(FormulaId.B_TOTAL_DUAL, k, n, j, d), b.at_z1().coeff(d))
                    self.assertEqual(cf.coefficient(FormulaId.B0_FORM, k, n, j, d), b.coeff(0, d))
                    self.assertEqual(cf.coefficient(FormulaId.B1_FORM, k, n, j, d), b.coeff(1, d))

    def test_divisible_by_prefactor(self):
        for k in range(2, 5):
            for n in range(0, 8):
                for j in range(k):
                    prefactor = math.factorial((k - 1) * n + j)
                    for s in range(n + 1):
                        self.assertEqual(cf.coeff_A_incl_excl(k, n, j, s) % prefactor, 0)


if __name__ == '__main__':
    unittest.main()

from fractions import Fraction
from unittest import TestCase

import numpy as np

from schmidt_subspaces.utils.exceptions import DimensionError, DomainError, FieldMismatchError
from ..field import COMPLEX, GFP, RATIONAL
from ..matrix import StateMatrix, linear_combination, matrix_of_state, state_of_matrix


class TestMatrixOfState(TestCase):
    def test_product_state(self):
        m = matrix_of_state([1, 0, 0, 0], 2, 2)
        self.assertEqual(m.as_rows(), [[1, 0], [0, 0]])
        self.assertEqual(m.field, RATIONAL)

    def test_bell_state(self):
        m = matrix_of_state([1, 0, 0, 1], 2, 2)
        self.assertEqual(m.as_rows(), [[1, 0], [0, 1]])

    def test_row_major_index(self):
        # amplitude of |1>|2> in 3x4 sits at 1 * 4 + 2
        amplitudes = [0] * 12
        amplitudes[6] = 5
        m = matrix_of_state(amplitudes, 3, 4)
        self.assertEqual(m.entry(1, 2), 5)

    def test_round_trip(self):
        rng = np.random.default_rng(3)
        v = [complex(x) for x in rng.standard_normal(12) + 1j * rng.standard_normal(12)]
        self.assertEqual(state_of_matrix(matrix_of_state(v, 3, 4)), v)

        exact = [Fraction(int(x), 7) for x in rng.integers(-20, 20, size=12)]
        m = matrix_of_state(exact, 4, 3)
        self.assertEqual(state_of_matrix(m), exact)
        self.assertEqual(matrix_of_state(state_of_matrix(m), 4, 3), m)

    def test_length_mismatch(self):
        with self.assertRaises(DimensionError):
            matrix_of_state([1, 2, 3], 2, 2)

    def test_float_amplitudes_are_complex(self):
        self.assertEqual(matrix_of_state([0.5, 0, 0, 0.5], 2, 2).field, COMPLEX)


class TestStateMatrix(TestCase):
    def test_rationals_are_normalized(self):
        m = StateMatrix(1, 2, (Fraction(2, 4), "-3/6"))
        self.assertEqual(m.entries, (Fraction(1, 2), Fraction(-1, 2)))
        self.assertEqual(m.entries[1].denominator, 2)

    def test_gfp_entries_reduced(self):
        m = StateMatrix(1, 3, (5, -1, Fraction(1, 2)), GFP, 3)
        # 1/2 = 2 mod 3
        self.assertEqual(m.entries, (2, 2, 2))

    def test_gfp_needs_prime(self):
        with self.assertRaises(DomainError):
            StateMatrix(1, 1, (1,), GFP, 4)

    def test_p_on_rational_rejected(self):
        with self.assertRaises(FieldMismatchError):
            StateMatrix(1, 1, (1,), RATIONAL, 5)

    def test_transpose_and_submatrix(self):
        m = StateMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        self.assertEqual(m.transpose().as_rows(), [[1, 4], [2, 5], [3, 6]])
        self.assertEqual(m.submatrix([1], [0, 2]).as_rows(), [[4, 6]])

    def test_reduce_mod_p(self):
        m = StateMatrix.from_rows([[3, 4], [-1, 7]])
        self.assertEqual(m.reduce_mod_p(3).as_rows(), [[0, 1], [2, 1]])
        self.assertTrue(m.is_integral())
        self.assertFalse(StateMatrix.from_rows([["1/2", 1]]).is_integral())

    def test_gfp_has_no_complex_embedding(self):
        with self.assertRaises(FieldMismatchError):
            StateMatrix(1, 1, (1,), GFP, 5).to_numpy()


class TestLinearCombination(TestCase):
    def test_combination(self):
        a = StateMatrix.elementary(2, 2, 0, 0)
        b = StateMatrix.elementary(2, 2, 1, 1)
        self.assertEqual(linear_combination([a, b], [2, -3]).as_rows(), [[2, 0], [0, -3]])

    def test_combination_mod_p(self):
        a = StateMatrix(1, 2, (1, 2), GFP, 5)
        b = StateMatrix(1, 2, (4, 4), GFP, 5)
        self.assertEqual(linear_combination([a, b], [1, 1]).entries, (0, 1))

    def test_mixed_fields_rejected(self):
        a = StateMatrix(1, 1, (1,))
        b = StateMatrix(1, 1, (1,), COMPLEX)
        with self.assertRaises(FieldMismatchError):
            linear_combination([a, b], [1, 1])

    def test_coefficient_count(self):
        with self.assertRaises(DimensionError):
            linear_combination([StateMatrix.zeros(2, 2)], [1, 2])

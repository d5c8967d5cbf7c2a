from fractions import Fraction
from unittest import TestCase

import numpy as np
import sympy

from schmidt_subspaces.utils.exceptions import DimensionError, FieldMismatchError, NumericError
from schmidt_subspaces.utils.seeds import substream
from ..field import COMPLEX, GFP
from ..matrix import StateMatrix
from ..rank import (
    det_exact, order_r_minors, rank_exact, rank_gfp, schmidt_decomposition,
    schmidt_rank_numeric, stack_rank
)


def random_rank_k(rng, rows, cols, k, box=3):
    """
    Integer rows x cols matrix of rank at most k (product of two integer factors)
    """
    left = rng.integers(-box, box + 1, size=(rows, k))
    right = rng.integers(-box, box + 1, size=(k, cols))
    return [[int(x) for x in row] for row in left @ right]


def matmul(a, b):
    return [
        [sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def random_invertible(rng, n):
    """
    Unit lower triangular times unit upper triangular: determinant 1
    """
    lower = [[1 if i == j else (Fraction(int(rng.integers(-3, 4)), 2) if i > j else 0)
              for j in range(n)] for i in range(n)]
    upper = [[1 if i == j else (int(rng.integers(-3, 4)) if i < j else 0)
              for j in range(n)] for i in range(n)]
    return matmul(lower, upper)


class TestSchmidtRankNumeric(TestCase):
    def test_identity(self):
        info = schmidt_rank_numeric(StateMatrix.from_rows([[1, 0], [0, 1]], COMPLEX), 1e-9)
        self.assertEqual(info.rank, 2)
        self.assertEqual(info.singular_values, (1.0, 1.0))

    def test_outer_product(self):
        u = np.array([1, 2j, -1])
        v = np.array([3, 1, 0.5, 2])
        m = StateMatrix(3, 4, tuple(np.outer(u, v).ravel()), COMPLEX)
        self.assertEqual(schmidt_rank_numeric(m, 1e-9).rank, 1)

    def test_tiny_singular_value(self):
        m = StateMatrix.from_rows([[1.0, 0], [0, 1e-14]])
        info = schmidt_rank_numeric(m, 1e-9)
        self.assertEqual(info.rank, 1)
        self.assertAlmostEqual(info.tolerance_used, 1e-9)

    def test_zero_matrix(self):
        info = schmidt_rank_numeric(StateMatrix.zeros(2, 3, COMPLEX))
        self.assertEqual(info.rank, 0)

    def test_non_finite(self):
        m = StateMatrix(1, 2, (float("nan"), 1.0), COMPLEX)
        with self.assertRaises(NumericError):
            schmidt_rank_numeric(m)

    def test_agrees_with_exact_rank(self):
        rng = np.random.default_rng(11)
        for _ in range(500):
            rows, cols = (int(x) for x in rng.integers(1, 7, size=2))
            k = int(rng.integers(1, min(rows, cols) + 1))
            m = StateMatrix.from_rows(random_rank_k(rng, rows, cols, k))
            self.assertEqual(
                schmidt_rank_numeric(m.as_complex(), 1e-9).rank, rank_exact(m), m.as_rows())

    def test_decomposition_reconstructs(self):
        rng = np.random.default_rng(5)
        a = rng.standard_normal((3, 4)) + 1j * rng.standard_normal((3, 4))
        u, s, vh = schmidt_decomposition(StateMatrix(3, 4, tuple(a.ravel()), COMPLEX))
        np.testing.assert_allclose(u @ np.diag(s) @ vh, a, atol=1e-12)
        self.assertTrue(all(x >= y for x, y in zip(s, s[1:])))


class TestRankExact(TestCase):
    def test_proportional_rows(self):
        self.assertEqual(rank_exact(StateMatrix.from_rows([[1, 2], [2, 4]])), 1)

    def test_zero(self):
        self.assertEqual(rank_exact(StateMatrix.zeros(3, 4)), 0)

    def test_vandermonde(self):
        m = StateMatrix.from_rows([[1, 1, 1], [1, 2, 4], [1, 3, 9]])
        self.assertEqual(rank_exact(m), 3)
        self.assertEqual(det_exact(m), 2)

    def test_fractions(self):
        m = StateMatrix.from_rows([["1/2", "1/3"], ["1/4", "1/6"]])
        self.assertEqual(rank_exact(m), 1)
        self.assertEqual(det_exact(StateMatrix.from_rows([["1/2", 0], [0, "2/3"]])), Fraction(1, 3))

    def test_against_sympy(self):
        rng = np.random.default_rng(2)
        for _ in range(100):
            rows, cols = (int(x) for x in rng.integers(1, 7, size=2))
            k = int(rng.integers(0, min(rows, cols) + 1))
            data = random_rank_k(rng, rows, cols, k) if k else [[0] * cols for _ in range(rows)]
            m = StateMatrix.from_rows(data)
            self.assertEqual(rank_exact(m), sympy.Matrix(data).rank())
            if rows == cols:
                self.assertEqual(det_exact(m), int(sympy.Matrix(data).det()))

    def test_gfp(self):
        # [[1, 2], [2, 1]] has determinant -3, singular mod 3 only
        rows = [[1, 2], [2, 1]]
        self.assertEqual(rank_gfp(rows, 3), 1)
        self.assertEqual(rank_gfp(rows, 5), 2)
        self.assertEqual(rank_exact(StateMatrix.from_rows(rows).reduce_mod_p(3)), 1)
        self.assertEqual(det_exact(StateMatrix(2, 2, (1, 2, 2, 1), GFP, 5)), 2)

    def test_reduction_mod_p_never_raises_rank(self):
        for idx in range(500):
            rng = substream(5, "mod-p", idx)
            rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
            m = StateMatrix.from_rows(rng.integers(-9, 10, size=(rows, cols)).tolist())
            rank = rank_exact(m)
            for p in (2, 3, 5):
                self.assertLessEqual(rank_exact(m.reduce_mod_p(p)), rank, (idx, p))

    def test_complex_rejected(self):
        with self.assertRaises(FieldMismatchError):
            rank_exact(StateMatrix.zeros(2, 2, COMPLEX))

    def test_invariant_under_invertible_factors(self):
        rng = np.random.default_rng(8)
        for _ in range(40):
            rows, cols = (int(x) for x in rng.integers(2, 6, size=2))
            k = int(rng.integers(1, min(rows, cols) + 1))
            data = random_rank_k(rng, rows, cols, k)
            product = matmul(matmul(random_invertible(rng, rows), data), random_invertible(rng, cols))
            self.assertEqual(
                rank_exact(StateMatrix.from_rows(product)), rank_exact(StateMatrix.from_rows(data)))


class TestOrderRMinors(TestCase):
    def test_identity(self):
        minors = list(order_r_minors(StateMatrix.from_rows([[1, 0], [0, 1]]), 2))
        self.assertEqual(minors, [((0, 1), (0, 1), 1)])

    def test_ones(self):
        minors = list(order_r_minors(StateMatrix.from_rows([[1, 1], [1, 1]]), 2))
        self.assertEqual(minors[0][2], 0)

    def test_vandermonde_order_two(self):
        m = StateMatrix.from_rows([[1, 1, 1], [1, 2, 4], [1, 3, 9]])
        values = [v for _, _, v in order_r_minors(m, 2)]
        self.assertEqual(len(values), 9)
        self.assertTrue(all(v != 0 for v in values))

    def test_lazy(self):
        m = StateMatrix.from_rows([[1] * 6] * 6)
        it = order_r_minors(m, 3)
        self.assertEqual(next(it), ((0, 1, 2), (0, 1, 2), 0))

    def test_out_of_range(self):
        with self.assertRaises(DimensionError):
            list(order_r_minors(StateMatrix.zeros(2, 3), 3))

    def test_minor_criterion(self):
        """
        rank < r exactly when every order r minor vanishes, all shapes up to 4x4
        """
        rng = np.random.default_rng(17)
        for rows in range(1, 5):
            for cols in range(1, 5):
                for k in range(0, min(rows, cols) + 1):
                    data = random_rank_k(rng, rows, cols, k) if k else [[0] * cols] * rows
                    m = StateMatrix.from_rows(data)
                    rank = rank_exact(m)
                    for r in range(1, min(rows, cols) + 1):
                        all_vanish = all(v == 0 for _, _, v in order_r_minors(m, r))
                        self.assertEqual(rank < r, all_vanish, (data, r))


class TestStackRank(TestCase):
    def test_dependent_stack(self):
        a = StateMatrix.elementary(2, 2, 0, 0)
        b = StateMatrix.elementary(2, 2, 1, 1)
        c = StateMatrix.from_rows([[1, 0], [0, 1]])
        self.assertEqual(stack_rank([a, b]), 2)
        self.assertEqual(stack_rank([a, b, c]), 2)
        self.assertEqual(stack_rank([]), 0)

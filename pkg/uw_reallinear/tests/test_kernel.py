# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

from itertools import permutations
from unittest import TestCase
import numpy as np
from uw_reallinear.exceptions import (
    DimensionMismatch, NonFiniteEntry, NotSelfAdjoint, SingularMatrix)
from uw_reallinear.kernel import (
    adjoint, as_matrix, det, hermitian_eig, inverse, matmul,
    operator_norm, realify_columns, right_divide, singular_values, solve)
from uw_reallinear.util import (
    random_complex_matrix, random_hermitian, random_invertible, seeded)


def leibniz(a):
    n = a.shape[0]
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term = term * a[i, perm[i]]
        total += term
    return total


class TestProducts(TestCase):

    def test_matmul(self):
        rng = seeded(1)
        x = random_complex_matrix(rng, 2)
        self.assertTrue(np.allclose(matmul(np.eye(2), x), x))
        self.assertEqual(matmul([[1j]], [[1j]])[0, 0], -1)
        a = random_complex_matrix(rng, 3)
        b = random_complex_matrix(rng, 3)
        c = matmul(a, b)
        for i in range(3):
            for j in range(3):
                expected = sum(a[i, k] * b[k, j] for k in range(3))
                self.assertAlmostEqual(c[i, j], expected, places=12)
        self.assertRaises(DimensionMismatch, matmul, np.eye(2), np.eye(3))

    def test_adjoint(self):
        self.assertEqual(adjoint([[1j]])[0, 0], -1j)
        x = np.array([[1.0, 2.0], [2.0, 5.0]])
        self.assertTrue(np.array_equal(adjoint(x), x))
        rng = seeded(2)
        a = random_complex_matrix(rng, 4)
        b = random_complex_matrix(rng, 4)
        self.assertTrue(np.array_equal(adjoint(adjoint(a)), a))
        self.assertTrue(np.allclose(adjoint(a @ b),
                                    adjoint(b) @ adjoint(a)))

    def test_as_matrix(self):
        self.assertEqual(as_matrix([1, 2]).shape, (1, 2))
        self.assertRaises(NonFiniteEntry, as_matrix, [[np.nan]])
        self.assertRaises(NonFiniteEntry, as_matrix, [[1, np.inf]])
        self.assertRaises(DimensionMismatch, as_matrix, np.zeros((2, 2, 2)))

    def test_realify_columns(self):
        r = realify_columns([[1 + 2j, 3j]])
        self.assertTrue(np.array_equal(r, [[1, 0], [2, 3]]))


class TestSolve(TestCase):

    def test_examples(self):
        v = np.array([1 + 1j, 2, -3j])
        self.assertTrue(np.array_equal(solve(np.eye(3), v), v))
        self.assertEqual(solve([[2]], [[4]])[0, 0], 2)
        self.assertRaises(SingularMatrix, solve, [[1, 2], [2, 4]], [1, 1])
        self.assertRaises(DimensionMismatch, solve, np.eye(2), [1, 2, 3])

    def test_residual(self):
        rng = seeded(5)
        for _ in range(20):
            a = random_complex_matrix(rng, 5)
            b = random_complex_matrix(rng, 5, 2)
            x = solve(a, b)
            residual = np.linalg.norm(a @ x - b)
            self.assertTrue(residual <= 1e-9 * np.linalg.norm(a) *
                            np.linalg.norm(x) + 1e-12)

    def test_inverse(self):
        rng = seeded(6)
        a = random_invertible(rng, 4)
        self.assertTrue(np.allclose(inverse(a) @ a, np.eye(4)))
        b = random_complex_matrix(rng, 4)
        self.assertTrue(np.allclose(right_divide(b, a) @ a, b))


class TestDet(TestCase):

    def test_examples(self):
        self.assertEqual(det(np.eye(3)), 1)
        self.assertAlmostEqual(det(np.diag([2, 3j])), 6j)
        self.assertEqual(det([[1, 2], [2, 4]]), 0)

    def test_leibniz(self):
        rng = seeded(7)
        for _ in range(10):
            a = random_complex_matrix(rng, 3)
            self.assertAlmostEqual(det(a), leibniz(a), places=10)

    def test_multiplicative(self):
        rng = seeded(8)
        for _ in range(20):
            a = random_complex_matrix(rng, 4)
            b = random_complex_matrix(rng, 4)
            ab = det(a @ b)
            self.assertTrue(abs(ab - det(a) * det(b)) <= 1e-9 * abs(ab))


class TestHermitianEig(TestCase):

    def test_examples(self):
        values, vectors = hermitian_eig(np.diag([1.0, 4.0]))
        self.assertTrue(np.allclose(values, [1, 4]))
        self.assertTrue(np.allclose(np.abs(vectors), np.eye(2)))
        values, _ = hermitian_eig([[2, 1], [1, 2]])
        self.assertTrue(np.allclose(values, [1, 3]))
        self.assertRaises(NotSelfAdjoint, hermitian_eig, [[1, 2], [0, 1]])

    def test_reconstruction(self):
        rng = seeded(9)
        for n in range(1, 9):
            p = random_hermitian(rng, n)
            values, v = hermitian_eig(p)
            self.assertTrue(np.all(np.diff(values) >= 0))
            self.assertTrue(np.linalg.norm(p @ v - v * values) <=
                            1e-10 * np.linalg.norm(p))
            self.assertTrue(np.linalg.norm(v.conj().T @ v - np.eye(n)) <=
                            1e-10)
            self.assertTrue(np.allclose(values, np.linalg.eigvalsh(p)))


class TestSingularValues(TestCase):

    def test_examples(self):
        self.assertTrue(np.allclose(singular_values(np.eye(3)), [1, 1, 1]))
        self.assertTrue(np.allclose(singular_values([[0, 2], [0, 0]]),
                                    [2, 0]))
        self.assertEqual(operator_norm([[0, 2], [0, 0]]), 2)

    def test_lower_bound(self):
        rng = seeded(10)
        a = random_complex_matrix(rng, 3)
        sigma = singular_values(a)[0]
        z = random_complex_matrix(rng, 3, 1000)
        z /= np.linalg.norm(z, axis=0)
        self.assertTrue(np.max(np.linalg.norm(a @ z, axis=0)) <=
                        sigma * (1 + 1e-12))

    def test_adjoint_and_svd(self):
        rng = seeded(11)
        for n in (1, 2, 4, 7):
            a = random_complex_matrix(rng, n, n + 1)
            sv = singular_values(a)
            self.assertEqual(sv.shape, (n,))
            self.assertTrue(np.allclose(sv, singular_values(a.conj().T),
                                        atol=1e-10))
            self.assertTrue(np.allclose(sv, np.linalg.svd(
                a, compute_uv=False), atol=1e-10))

    def test_small_values(self):
        a = np.diag([1.0, 1e-12])
        self.assertTrue(abs(singular_values(a)[-1] - 1e-12) < 1e-20)

# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

from unittest import TestCase, mock
import numpy as np
from numpy.testing import assert_allclose
from uw_reallinear import reallinear
from uw_reallinear.config import Tolerance
from uw_reallinear.exceptions import (
    DimensionMismatch, InternalConsistencyError, NotInSplitClass, SingularM)
from uw_reallinear.kernel import hermitian_eig
from uw_reallinear.models import (
    BlockForm, ConjugatePairForm, NormalizedForm, RealLinearMap, SplitForm)
from uw_reallinear.util import (
    random_complex_matrix, random_invertible, random_real_matrix,
    random_unitary, seeded)

DIMS = (1, 2, 3, 4, 8)


def _pair(rng, n):
    return ConjugatePairForm(random_invertible(rng, n),
                             0.3 * random_complex_matrix(rng, n))


def _basis(n):
    eye = np.eye(n, dtype=complex)
    return list(eye) + list(1j * eye)


class TestRepresentations(TestCase):

    def test_split_to_pair(self):
        T = RealLinearMap(SplitForm([[0]], [[1]]))
        pair = reallinear.convert(T, 'conjugate_pair')
        self.assertEqual(pair.kind, 'conjugate_pair')
        assert_allclose(pair.form.M, [[1]])
        assert_allclose(pair.form.N, [[0]])

    def test_conjugation(self):
        conj = BlockForm([[1]], [[0]], [[0]], [[-1]])
        pair = reallinear.to_conjugate_pair(conj)
        assert_allclose(pair.M, [[0]])
        assert_allclose(pair.N, [[1]])
        self.assertEqual(reallinear.apply(pair, [2 + 3j])[0], 2 - 3j)
        self.assertTrue(reallinear.is_invertible(conj))
        self.assertFalse(reallinear.majorizes(conj))
        self.assertIsNone(reallinear.majorization_margin(conj))
        self.assertRaises(SingularM, reallinear.convert, conj, 'normalized')

    def test_apply_forms_agree(self):
        rng = seeded(1)
        for n in DIMS:
            pair = _pair(rng, n)
            z = random_complex_matrix(rng, n, 1).ravel()
            expected = reallinear.apply(pair, z)
            for target in ('block', 'normalized'):
                form = reallinear.convert(pair, target).form
                assert_allclose(reallinear.apply(form, z), expected,
                                atol=1e-10)
            r = reallinear.realify(pair)
            w = r @ np.concatenate([z.real, z.imag])
            assert_allclose(w[:n] + 1j * w[n:], expected, atol=1e-10)

    def test_round_trips(self):
        rng = seeded(2)
        for n in DIMS:
            pair = _pair(rng, n)
            block = reallinear.convert(pair, 'block')
            back = reallinear.convert(block, 'conjugate_pair').form
            assert_allclose(back.M, pair.M, atol=1e-12)
            assert_allclose(back.N, pair.N, atol=1e-12)

            normalized = reallinear.convert(pair, 'normalized').form
            self.assertFalse(normalized.is_pure())
            again = reallinear.to_conjugate_pair(normalized)
            assert_allclose(again.M, pair.M, atol=1e-10)
            assert_allclose(again.N, pair.N, atol=1e-10)

            split = SplitForm(random_real_matrix(rng, n),
                              random_real_matrix(rng, n))
            through = reallinear.convert(
                reallinear.convert(split, 'conjugate_pair'), 'split').form
            assert_allclose(through.A, split.A, atol=1e-10)
            assert_allclose(through.B, split.B, atol=1e-10)

    def test_convert_errors(self):
        rng = seeded(3)
        pair = _pair(rng, 2)
        self.assertRaises(NotInSplitClass, reallinear.convert, pair,
                          'split')
        self.assertRaises(DimensionMismatch, reallinear.convert, pair,
                          'polar')
        same = reallinear.convert(pair, 'conjugate_pair')
        self.assertIs(same.form, pair)

    def test_compose(self):
        rng = seeded(4)
        for n in DIMS:
            t1 = _pair(rng, n)
            t2 = reallinear.convert(_pair(rng, n), 'block')
            both = reallinear.compose(t2, t1)
            for z in _basis(n):
                assert_allclose(reallinear.apply(both, z),
                                reallinear.apply(t2, reallinear.apply(t1, z)),
                                atol=1e-10)
        self.assertRaises(DimensionMismatch, reallinear.compose,
                          _pair(rng, 2), _pair(rng, 3))

    def test_lattice_closed(self):
        # a real-linear map sends real combinations to real combinations
        rng = seeded(5)
        pair = _pair(rng, 2)
        basis = _basis(2)
        lam = rng.integers(-10, 11, size=(20, 4))
        for row in lam:
            z = sum(c * v for c, v in zip(row, basis))
            image = sum(c * reallinear.apply(pair, v)
                        for c, v in zip(row, basis))
            assert_allclose(reallinear.apply(pair, z), image, atol=1e-9)


class TestInvertibility(TestCase):

    def test_strict_status(self):
        tol = Tolerance(rel=1e-6, abs=0)
        self.assertEqual(reallinear.strict_status(0.5, 1.0, tol), 'strict')
        self.assertEqual(reallinear.strict_status(1.0, 1.0, tol),
                         'boundary')
        self.assertEqual(reallinear.strict_status(1.0 - 1e-7, 1.0, tol),
                         'boundary')
        self.assertEqual(reallinear.strict_status(1.1, 1.0, tol),
                         'violated')

    def test_split_criterion(self):
        self.assertTrue(reallinear.is_invertible(
            SplitForm([[1, 2], [3, 4]], np.eye(2))))
        self.assertFalse(reallinear.is_invertible(
            SplitForm(np.zeros((2, 2)), np.diag([1, 1e-14]))))
        self.assertFalse(reallinear.is_invertible(
            SplitForm([[0]], [[0]])))
        rng = seeded(6)
        for n in DIMS:
            split = SplitForm(random_real_matrix(rng, n),
                              np.eye(n) + 0.1 * random_real_matrix(rng, n))
            self.assertTrue(reallinear.is_invertible(split))

    def test_split_large_A(self):
        for scale in (1e4, 1e5, 1e8):
            a = scale * np.array([[1, 2], [3, 4]])
            for s in (1.0, 1e-2, 1e-3, 1e-6):
                self.assertTrue(reallinear.is_invertible(
                    SplitForm(a, np.diag([1, s]))), (scale, s))
            self.assertFalse(reallinear.is_invertible(
                SplitForm(a, np.diag([1, 1e-12]))))
            self.assertFalse(reallinear.is_invertible(
                SplitForm(a, np.zeros((2, 2)))))

    def test_split_random_conditioning(self):
        rng = seeded(61)
        for k in range(1000):
            n = 1 + k % 4
            small = (1.0, 1e-6, 1e-12)[k % 3]
            s = np.sort(rng.uniform(1, 2, n))[::-1]
            s[-1] *= small
            q1, _ = np.linalg.qr(random_real_matrix(rng, n))
            q2, _ = np.linalg.qr(random_real_matrix(rng, n))
            b = q1 @ np.diag(s) @ q2.T
            a = 10.0 ** int(rng.integers(0, 6)) * random_real_matrix(rng, n)
            expected = n == 1 or small != 1e-12
            self.assertEqual(reallinear.is_invertible(SplitForm(a, b)),
                             expected, (k, n, small))

    def test_split_disagreement(self):
        split = SplitForm([[1]], [[1]])
        with mock.patch('uw_reallinear.reallinear.det',
                        side_effect=[complex(2), complex(1)]):
            self.assertRaises(InternalConsistencyError,
                              reallinear.is_invertible, split)

    def test_majorization_implies_invertible(self):
        rng = seeded(7)
        for n in DIMS:
            for c in (0.1, 0.5, 0.94):
                M = random_invertible(rng, n)
                N = c * random_unitary(rng, n) @ M
                T = ConjugatePairForm(M, N)
                assert_allclose(reallinear.majorization_margin(T), c,
                                rtol=1e-9)
                self.assertTrue(reallinear.majorizes(T))
                self.assertTrue(reallinear.is_invertible(T))

    def test_majorization_boundary(self):
        rng = seeded(8)
        M = random_invertible(rng, 2)
        T = ConjugatePairForm(M, random_unitary(rng, 2) @ M)
        self.assertFalse(reallinear.majorizes(T))
        self.assertFalse(reallinear.majorizes(
            ConjugatePairForm(np.eye(2), 2 * np.eye(2))))

    def test_contraction_implies_invertible(self):
        rng = seeded(9)
        for n in DIMS:
            E = 0.6 * random_unitary(rng, n)
            T = NormalizedForm(E, random_invertible(rng, n))
            self.assertTrue(reallinear.contraction_check(T))
            self.assertTrue(reallinear.contraction_check(E))
            self.assertTrue(reallinear.is_invertible(T))
            self.assertTrue(reallinear.is_invertible(NormalizedForm(E)))

    def test_contraction_limits(self):
        self.assertFalse(reallinear.contraction_check(np.diag([1, 0.5])))
        self.assertFalse(reallinear.contraction_check(2 * np.eye(2)))
        self.assertTrue(reallinear.contraction_check(np.zeros((3, 3))))
        # z + conj(z) kills the imaginary axis
        self.assertFalse(reallinear.is_invertible(NormalizedForm([[1]])))

    def test_normalize(self):
        rng = seeded(10)
        for n in DIMS:
            pair = _pair(rng, n)
            G, E = reallinear.normalize_post_composition(pair)
            self.assertTrue(E.is_pure())
            assert_allclose(G, pair.M)
            for z in _basis(n):
                assert_allclose(G @ reallinear.apply(E, z),
                                reallinear.apply(pair, z), atol=1e-10)
        self.assertRaises(SingularM, reallinear.normalize_post_composition,
                          ConjugatePairForm([[0]], [[1]]))


class TestExamples(TestCase):

    def test_apply(self):
        v = np.array([1 - 2j, 3j])
        assert_allclose(reallinear.apply(NormalizedForm(np.zeros((2, 2))), v),
                        v)
        self.assertEqual(
            reallinear.apply(ConjugatePairForm([[1]], [[1]]), [1j])[0], 0)

    def test_realify(self):
        assert_allclose(reallinear.realify(NormalizedForm(np.zeros((2, 2)))),
                        np.eye(4))
        assert_allclose(
            reallinear.realify(ConjugatePairForm([[0]], [[1]])),
            [[1, 0], [0, -1]])
        A = np.array([[1, 2], [3, 4]])
        B = np.array([[5, 6], [7, 8]])
        assert_allclose(reallinear.realify(SplitForm(A, B)),
                        np.block([[np.eye(2), A], [np.zeros((2, 2)), B]]))

    def test_majorizes(self):
        self.assertTrue(reallinear.majorizes(
            ConjugatePairForm(np.eye(2), np.zeros((2, 2)))))
        self.assertFalse(reallinear.majorizes(
            ConjugatePairForm(np.eye(2), np.eye(2))))
        self.assertTrue(reallinear.majorizes(
            ConjugatePairForm([[1]], [[0.5]])))

    def test_normalize(self):
        G, E = reallinear.normalize_post_composition(
            ConjugatePairForm(2 * np.eye(2), np.zeros((2, 2))))
        assert_allclose(G, 2 * np.eye(2))
        assert_allclose(E.E, np.zeros((2, 2)))
        G, E = reallinear.normalize_post_composition(
            ConjugatePairForm([[1]], [[0.5]]))
        assert_allclose(G, [[1]])
        assert_allclose(E.E, [[0.5]])

    def test_contraction(self):
        self.assertTrue(reallinear.contraction_check(
            NormalizedForm(np.zeros((2, 2)))))
        self.assertFalse(reallinear.contraction_check(
            NormalizedForm(np.eye(2))))
        E = 0.9 * random_unitary(seeded(11), 3)
        self.assertTrue(reallinear.contraction_check(NormalizedForm(E)))
        values, _ = hermitian_eig(np.eye(3) - E.conj().T @ E)
        self.assertAlmostEqual(values[0], 0.19)


def _gaussian_points(n, radius):
    """
    Columns (x; y) of every nonzero x + iy in Z[i]^n with norm <= radius.
    """
    r = int(radius)
    axes = np.indices((2 * r + 1,) * (2 * n)).reshape(2 * n, -1) - r
    squared = np.sum(axes ** 2, axis=0)
    return axes[:, (squared > 0) & (squared <= radius ** 2)].astype(float)


class TestRandomMaps(TestCase):

    def test_round_trips(self):
        rng = seeded(41)
        for n in DIMS:
            for _ in range(1000):
                pair = _pair(rng, n)
                block = reallinear.to_block(pair)
                back = reallinear.to_conjugate_pair(block)
                assert_allclose(back.M, pair.M, atol=1e-10)
                assert_allclose(back.N, pair.N, atol=1e-10)
                again = reallinear.to_conjugate_pair(
                    reallinear.convert(pair, 'normalized').form)
                assert_allclose(again.M, pair.M, atol=1e-10)
                assert_allclose(again.N, pair.N, atol=1e-10)
                split = SplitForm(random_real_matrix(rng, n),
                                  random_real_matrix(rng, n))
                through = reallinear.convert(
                    reallinear.to_conjugate_pair(split), 'split').form
                assert_allclose(through.A, split.A, atol=1e-10)
                assert_allclose(through.B, split.B, atol=1e-10)

    def test_majorization(self):
        rng = seeded(42)
        for n in (1, 2, 3, 4):
            for _ in range(1000):
                c = rng.uniform(0.01, 2.0)
                M = random_invertible(rng, n)
                T = ConjugatePairForm(M, c * random_unitary(rng, n) @ M)
                assert_allclose(reallinear.majorization_margin(T), c,
                                rtol=1e-8)
                self.assertEqual(reallinear.majorizes(T), c < 1)
                if c < 1:
                    self.assertTrue(reallinear.is_invertible(T))

    def test_normalize_identity(self):
        rng = seeded(43)
        for k in range(20):
            n = 1 + k % 4
            pair = _pair(rng, n)
            G, E = reallinear.normalize_post_composition(pair)
            for _ in range(1000):
                z = random_complex_matrix(rng, n, 1).ravel()
                expected = reallinear.apply(pair, z)
                scale = 1e-10 * (1 + np.abs(expected).max())
                assert_allclose(G @ reallinear.apply(E, z), expected,
                                atol=scale)

    def test_lattice_points_stay_close(self):
        rng = seeded(44)
        for n in (1, 2):
            points = _gaussian_points(n, 10)
            lengths = np.linalg.norm(points, axis=0)
            for _ in range(100):
                x = random_complex_matrix(rng, n)
                norm = rng.uniform(0, 0.99)
                E = norm * x / np.linalg.norm(x, 2)
                moved = reallinear.realify(NormalizedForm(E)) @ points
                gap = np.linalg.norm(moved - points, axis=0)
                self.assertTrue(np.all(gap <= (norm + 1e-12) * lengths))
                self.assertTrue(np.all(
                    np.linalg.norm(moved, axis=0) >=
                    (1 - norm - 1e-12) * lengths))

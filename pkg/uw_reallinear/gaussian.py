# Copyright 2025 UW-IT, University of Washington
# SPDX-License-Identifier: Apache-2.0

"""
Exact arithmetic over the Gaussian integers Z[i] and over Z:
ring elements, fraction-free determinants and adjugates.
"""

import numbers


class GaussianInteger:
    __slots__ = ('_re', '_im')

    def __init__(self, re=0, im=0):
        if not (isinstance(re, numbers.Integral) and
                isinstance(im, numbers.Integral)):
            raise TypeError(
                "GaussianInteger({!r}, {!r}) needs integers".format(re, im))
        self._re = int(re)
        self._im = int(im)

    @property
    def re(self):
        return self._re

    @property
    def im(self):
        return self._im

    @classmethod
    def nearest(cls, z):
        """
        :return: (nearest Gaussian integer, distance to it)
        """
        z = complex(z)
        g = cls(int(round(z.real)), int(round(z.imag)))
        return g, abs(z - complex(g))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, GaussianInteger):
            return value
        if isinstance(value, numbers.Integral):
            return cls(value, 0)
        raise TypeError("cannot coerce {!r}".format(value))

    def conjugate(self):
        return GaussianInteger(self._re, -self._im)

    def norm(self):
        return self._re * self._re + self._im * self._im

    def is_unit(self):
        return self.norm() == 1

    def exact_div(self, other):
        """
        raise ArithmeticError unless other divides self in Z[i]
        """
        other = GaussianInteger.coerce(other)
        d = other.norm()
        if d == 0:
            raise ZeroDivisionError("division by 0 in Z[i]")
        num = self * other.conjugate()
        if num.re % d or num.im % d:
            raise ArithmeticError("{} does not divide {}".format(other, self))
        return GaussianInteger(num.re // d, num.im // d)

    def __eq__(self, other):
        if isinstance(other, numbers.Integral):
            return self._im == 0 and self._re == other
        if isinstance(other, GaussianInteger):
            return self._re == other.re and self._im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self._re, self._im))

    def __add__(self, other):
        try:
            other = GaussianInteger.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInteger(self._re + other.re, self._im + other.im)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return GaussianInteger(-self._re, -self._im)

    def __sub__(self, other):
        try:
            other = GaussianInteger.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInteger(self._re - other.re, self._im - other.im)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        try:
            other = GaussianInteger.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInteger(self._re * other.re - self._im * other.im,
                               self._re * other.im + self._im * other.re)

    def __rmul__(self, other):
        return self * other

    def __complex__(self):
        return complex(self._re, self._im)

    def __repr__(self):
        return "GaussianInteger({}, {})".format(self._re, self._im)

    def __str__(self):
        return "{}{:+}i".format(self._re, self._im)

    def to_json(self):
        return [self._re, self._im]


ZERO = GaussianInteger(0, 0)
ONE = GaussianInteger(1, 0)
I = GaussianInteger(0, 1)
UNITS = (ONE, I, -ONE, -I)


def _exact_div(a, b):
    if isinstance(a, GaussianInteger) or isinstance(b, GaussianInteger):
        return GaussianInteger.coerce(a).exact_div(b)
    if a % b:
        raise ArithmeticError("{} does not divide {}".format(b, a))
    return a // b


def _is_zero(x):
    return x == 0


def determinant(rows, one=1):
    """
    Fraction-free (Bareiss) elimination; exact over Z and Z[i].
    :param rows: square list of lists of int or GaussianInteger
    :param one: the ring's unit element
    """
    m = [list(row) for row in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            swap = next((i for i in range(k + 1, n)
                         if not _is_zero(m[i][k])), None)
            if swap is None:
                return one * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = _exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j],
                                     prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def gaussian_determinant(rows):
    return GaussianInteger.coerce(
        determinant([[GaussianInteger.coerce(x) for x in row]
                     for row in rows], ONE))


def integer_determinant(rows):
    return determinant([[int(x) for x in row] for row in rows], 1)


def _minor(rows, i, j):
    return [row[:j] + row[j + 1:] for k, row in enumerate(rows) if k != i]


def adjugate(rows, one=1):
    """
    Transposed cofactor matrix; equals det * inverse.
    """
    m = [list(row) for row in rows]
    n = len(m)
    if n == 1:
        return [[one]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            cofactor = determinant(_minor(m, i, j), one)
            adj[j][i] = cofactor if (i + j) % 2 == 0 else -cofactor
    return adj


def exact_matmul(a, b, zero=0):
    inner = len(b)
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), zero)
             for j in range(len(b[0]))] for i in range(len(a))]


def identity(n, one=1, zero=0):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]

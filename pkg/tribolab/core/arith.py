# Copyright 2026 tribolab contributors
#
# All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

"""
Exact dense matrices, lower-Hessenberg generators and their determinants
"""

from fractions import Fraction
import logging
import threading

from tribolab.common.exceptions import DimensionError

logger = logging.getLogger('tribolab')


class DenseMatrix(object):
    """Immutable row-major matrix over the rationals"""

    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, rows, cols, entries):
        entries = tuple(Fraction(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionError('{}x{} matrix needs {} entries, got {}'.format(
                rows, cols, rows * cols, len(entries)))
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(row) for row in rows]
        cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise DimensionError('ragged rows')
        return cls(len(rows), cols, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return 'DenseMatrix({})'.format([[str(e) for e in row] for row in self.rows_list()])

    def rows_list(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def is_integral(self):
        return all(e.denominator == 1 for e in self.entries)

    def replace_column(self, j, column):
        column = list(column)
        if len(column) != self.rows:
            raise DimensionError('column of length {} for {} rows'.format(len(column), self.rows))
        rows = self.rows_list()
        for i, row in enumerate(rows):
            row[j] = column[i]
        return DenseMatrix.from_rows(rows)

    def move_column_first(self, j):
        rows = self.rows_list()
        return DenseMatrix.from_rows([[row[j]] + row[:j] + row[j + 1:] for row in rows])


class HessenbergColumns(object):
    """
    Generator form of an n x n lower-Hessenberg matrix.

    Indices are 1-based as in the displayed determinants: ``lower(i, j)`` gives
    h_{i,j} for j <= i and ``superdiag[j - 1]`` gives h_{j,j+1}. Entries above the
    superdiagonal are zero and never stored.
    """

    def __init__(self, n, superdiag, lower):
        superdiag = tuple(Fraction(s) for s in superdiag)
        if n < 0 or len(superdiag) != max(n - 1, 0):
            raise DimensionError('dimension {} needs {} superdiagonal entries, got {}'.format(
                n, max(n - 1, 0), len(superdiag)))
        self.n = n
        self.superdiag = superdiag
        self._lower = lower

    @classmethod
    def toeplitz(cls, column, superdiag, n=None):
        """
        Toeplitz-Hessenberg matrix: h_{i,j} = column[i - j] for j <= i.

        :param column: first-column entries, column[0] is the diagonal
        :param superdiag: either a constant or a sequence of n - 1 entries
        """
        column = tuple(Fraction(c) for c in column)
        if n is None:
            n = len(column)
        if len(column) < n:
            raise DimensionError('need {} column entries, got {}'.format(n, len(column)))
        if isinstance(superdiag, (int, Fraction)):
            superdiag = [superdiag] * max(n - 1, 0)
        return cls(n, superdiag, lambda i, j: column[i - j])

    def lower(self, i, j):
        return Fraction(self._lower(i, j))

    def materialize(self):
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i in range(1, n + 1):
            for j in range(1, i + 1):
                rows[i - 1][j - 1] = self.lower(i, j)
            if i < n:
                rows[i - 1][i] = self.superdiag[i - 1]
        return DenseMatrix.from_rows(rows)


def mat_mul(a, b):
    if a.cols != b.rows:
        raise DimensionError('cannot multiply {}x{} by {}x{}'.format(a.rows, a.cols, b.rows, b.cols))
    entries = []
    for i in range(a.rows):
        for j in range(b.cols):
            entries.append(sum((a[i, k] * b[k, j] for k in range(a.cols)), Fraction(0)))
    return DenseMatrix(a.rows, b.cols, entries)


def det_dense(m):
    """
    Exact determinant of a square DenseMatrix.

    All-integer input goes through Bareiss fraction-free elimination, anything
    else through rational Gaussian elimination. Both pivot on the first nonzero
    entry of the column.
    """
    if m.rows != m.cols:
        raise DimensionError('determinant of a non-square {}x{} matrix'.format(m.rows, m.cols))
    if m.is_integral():
        return Fraction(det_bareiss([[int(e) for e in row] for row in m.rows_list()]))
    return det_gauss(m.rows_list())


def det_bareiss(rows):
    n = len(rows)
    if n == 0:
        return 1
    a = [list(row) for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: prev divides the 2x2 minor
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_gauss(rows):
    n = len(rows)
    a = [[Fraction(e) for e in row] for row in rows]
    det = Fraction(1)
    for k in range(n):
        for i in range(k, n):
            if a[i][k] != 0:
                break
        else:
            return Fraction(0)
        if i != k:
            a[k], a[i] = a[i], a[k]
            det = -det
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = a[i][k] / pivot
            if factor:
                for j in range(k + 1, n):
                    a[i][j] -= factor * a[k][j]
    return det


def det_hessenberg(h):
    """
    Determinant of a lower-Hessenberg matrix without materialising it.

    d_k = sum_{r=1..k} (-1)^(k-r) h_{k,r} (prod_{j=r..k-1} h_{j,j+1}) d_{r-1}, d_0 = 1
    """
    d = [Fraction(1)]
    for k in range(1, h.n + 1):
        total = Fraction(0)
        prod = Fraction(1)
        for r in range(k, 0, -1):
            if r < k:
                prod *= h.superdiag[r - 1]
                if not prod:
                    break
            term = h.lower(k, r) * prod * d[r - 1]
            total += term if (k - r) % 2 == 0 else -term
        d.append(total)
    logger.debug('hessenberg determinant of order {}'.format(h.n))
    return d[h.n]


def exact(value):
    """Integral rationals as int, so sums over them stay in integer arithmetic"""
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


class ToeplitzHessenbergMinors(object):
    """
    Leading principal minors d_0 = 1, d_1, d_2, ... of an unbounded
    Toeplitz-Hessenberg matrix, extended on demand.

    d_n equals det_hessenberg(HessenbergColumns.toeplitz(column[:n], superdiag, n)),
    but every order shares the work of the smaller ones.

    :param column: callable, column(m) is the entry on the m-th subdiagonal
    :param superdiag: constant superdiagonal entry
    """

    def __init__(self, column, superdiag=1):
        self._column = column
        self._superdiag = exact(superdiag)
        self._c = []
        self._d = [1]
        self._lock = threading.Lock()

    def minor(self, n):
        if n < 0:
            raise DimensionError('negative matrix order {}'.format(n))
        if n >= len(self._d):
            with self._lock:
                c, d = self._c, self._d
                while len(d) <= n:
                    k = len(d)
                    c.append(exact(self._column(k - 1)))
                    total = 0
                    prod = 1
                    for r in range(k, 0, -1):
                        if r < k:
                            prod *= self._superdiag
                            if not prod:
                                break
                        term = c[k - r] * prod * d[r - 1]
                        total += term if (k - r) % 2 == 0 else -term
                    d.append(total)
                logger.debug('toeplitz-hessenberg minors up to order {}'.format(n))
        return Fraction(self._d[n])

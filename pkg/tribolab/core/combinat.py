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
Binomials, the parameterised row-reversed Pascal matrix, binomial inversion
and complete Bell polynomials
"""

from collections import namedtuple
from fractions import Fraction
from math import comb, factorial

from tribolab.common.exceptions import ArityError, DomainError
from tribolab.core.arith import DenseMatrix, HessenbergColumns, det_hessenberg

PascalParam = namedtuple('PascalParam', 'k alpha')

# xs[0] is x_1; Y_0 = 1 by convention
BellInput = namedtuple('BellInput', 'xs')


def alt_sign(n):
    return -1 if n % 2 else 1


def binom(n, k):
    """C(n, k), zero outside 0 <= k <= n"""
    if n < 0:
        raise DomainError('binomial coefficient with negative n = {}'.format(n))
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def pascal_rowrev(p):
    k, alpha = p.k, Fraction(p.alpha)
    return DenseMatrix(k + 1, k + 1, [binom(k - r, j) * alpha ** j
                                      for r in range(k + 1) for j in range(k + 1)])


def pascal_rowrev_inv(p):
    k, alpha = p.k, Fraction(p.alpha)
    if alpha == 0:
        raise DomainError('row-reversed Pascal matrix is singular for alpha = 0')
    return DenseMatrix(k + 1, k + 1, [alt_sign(i + j - k) * binom(i, k - j) / alpha ** i
                                      for i in range(k + 1) for j in range(k + 1)])


def det_pascal_rowrev(k):
    if k < 0:
        raise DomainError('matrix size parameter must be non-negative, got {}'.format(k))
    return alt_sign(k * (k + 1) // 2)


def binomial_inversion(b):
    """a_j = sum_u (-1)^(j-u) C(j,u) b_u"""
    b = [Fraction(x) for x in b]
    return [sum((alt_sign(j - u) * binom(j, u) * b[u] for u in range(j + 1)), Fraction(0))
            for j in range(len(b))]


def binomial_transform(a):
    """b_j = sum_u C(j,u) a_u, the inverse of binomial_inversion"""
    a = [Fraction(x) for x in a]
    return [sum((binom(j, u) * a[u] for u in range(j + 1)), Fraction(0)) for j in range(len(a))]


def _xs(x):
    return [Fraction(v) for v in (x.xs if isinstance(x, BellInput) else x)]


def bell_complete(x, n):
    """
    Complete Bell polynomial Y_n at the point x_1..x_n.

    Y_{m+1} = sum_{k=0..m} C(m,k) Y_{m-k} x_{k+1}, Y_0 = 1.
    """
    xs = _xs(x)
    if n < 0 or n > len(xs):
        raise ArityError('Y_{} needs {} arguments, got {}'.format(n, n, len(xs)))
    y = [Fraction(1)]
    for m in range(n):
        y.append(sum((binom(m, k) * y[m - k] * xs[k] for k in range(m + 1)), Fraction(0)))
    return y[n]


def bell_partition_sum(x, n):
    """
    Y_n as the explicit sum over partitions of n.

    Exponential in n; it only serves as an independent oracle.
    """
    xs = _xs(x)
    if n < 0 or n > len(xs):
        raise ArityError('Y_{} needs {} arguments, got {}'.format(n, n, len(xs)))
    total = Fraction(0)
    for mult in _partitions(n, n):
        term = Fraction(factorial(n))
        for part, count in mult.items():
            term *= (xs[part - 1] / factorial(part)) ** count / factorial(count)
        total += term
    return total


def _partitions(n, largest):
    # multiplicity maps {part: count} of the partitions of n with parts <= largest
    if n == 0:
        yield {}
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            mult = dict(rest)
            mult[part] = mult.get(part, 0) + 1
            yield mult


def bell_via_det(a, m):
    """
    b_m = (1/m!) det of the Toeplitz-Hessenberg matrix with first column
    a_1..a_m and superdiagonal -1, -2, ..., -(m-1).
    """
    a = [Fraction(v) for v in a]
    if m < 0 or m > len(a):
        raise ArityError('order {} determinant needs {} entries, got {}'.format(m, m, len(a)))
    h = HessenbergColumns.toeplitz(a[:m], [-j for j in range(1, m)], n=m)
    return det_hessenberg(h) / factorial(m)


def bell_inverse_det(b, n):
    """
    a_n = (-1)^(n-1) det with first column b_1, 2 b_2, ..., n b_n, the other
    columns Toeplitz in b, superdiagonal 1.
    """
    b = [Fraction(v) for v in b]
    if n < 1 or n > len(b):
        raise ArityError('order {} inverse needs {} entries, got {}'.format(n, n, len(b)))

    def lower(i, j):
        if j == 1:
            return i * b[i - 1]
        return b[i - j]

    h = HessenbergColumns(n, [1] * (n - 1), lower)
    return alt_sign(n - 1) * det_hessenberg(h)

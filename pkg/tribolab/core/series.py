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
Truncated formal power series over the rationals
"""

from fractions import Fraction

from tribolab.common.exceptions import DomainError, ValidationError
from tribolab.common.utils import rational_to_str


class SeriesTrunc(object):
    """
    c_0 + c_1 t + ... + c_{N-1} t^{N-1}, known only up to t^N.

    Shorter coefficient lists are padded with zeros up to ``order``, longer
    ones are cut.
    """

    __slots__ = ('coeffs', 'order')

    def __init__(self, coeffs, order=None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise ValidationError('negative truncation order {}'.format(order))
        coeffs = coeffs[:order] + [Fraction(0)] * (order - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def one(cls, order):
        return cls([1], order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SeriesTrunc):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return 'SeriesTrunc([{}], order={})'.format(
            ', '.join(str(c) for c in self.coeffs), self.order)

    def truncate(self, order):
        return SeriesTrunc(self.coeffs, min(order, self.order))

    def to_json(self):
        return [rational_to_str(c) for c in self.coeffs]


def as_series(f, order=None):
    if isinstance(f, SeriesTrunc):
        return f if order is None else f.truncate(order)
    return SeriesTrunc(f, order)


def series_add(f, g):
    n = min(f.order, g.order)
    return SeriesTrunc([f[k] + g[k] for k in range(n)])


def series_sub(f, g):
    n = min(f.order, g.order)
    return SeriesTrunc([f[k] - g[k] for k in range(n)])


def series_scale(f, c):
    c = Fraction(c)
    return SeriesTrunc([c * x for x in f])


def series_mul(f, g):
    """Cauchy product truncated to the smaller order"""
    n = min(f.order, g.order)
    return SeriesTrunc([sum((f[k] * g[m - k] for k in range(m + 1)), Fraction(0))
                        for m in range(n)])


def series_recip(f):
    """
    g with f g = 1 + O(t^N).

    :raises DomainError: when c_0 = 0
    """
    if not f.order:
        return SeriesTrunc([])
    if f[0] == 0:
        raise DomainError('non-unit constant term: cannot invert a series with c_0 = 0')
    inv0 = 1 / f[0]
    g = [inv0]
    for m in range(1, f.order):
        g.append(-inv0 * sum((f[k] * g[m - k] for k in range(1, m + 1)), Fraction(0)))
    return SeriesTrunc(g)


def series_derivative(f):
    return SeriesTrunc([k * f[k] for k in range(1, f.order)])


def series_integral(f):
    return SeriesTrunc([0] + [f[k] / (k + 1) for k in range(f.order)])


def series_exp(f):
    """exp(f) from g' = f' g, needs c_0 = 0"""
    if not f.order:
        return SeriesTrunc([])
    if f[0] != 0:
        raise DomainError('exp needs a zero constant term, got {}'.format(f[0]))
    g = [Fraction(1)]
    for n in range(1, f.order):
        g.append(sum((k * f[k] * g[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
    return SeriesTrunc(g)


def series_log(f):
    """log(f) from f h' = f', needs c_0 = 1"""
    if not f.order:
        return SeriesTrunc([])
    if f[0] != 1:
        raise DomainError('log needs constant term 1, got {}'.format(f[0]))
    h = [Fraction(0)]
    for n in range(1, f.order):
        acc = n * f[n] - sum((k * h[k] * f[n - k] for k in range(1, n)), Fraction(0))
        h.append(acc / n)
    return SeriesTrunc(h)


def rational_expand(numerator, denominator, order):
    """
    Coefficients of numerator/denominator up to t^order, by running the
    denominator as a recurrence on the coefficients.
    """
    num = [Fraction(c) for c in numerator]
    den = [Fraction(c) for c in denominator]
    if not den or den[0] == 0:
        raise DomainError('non-unit constant term in the denominator')
    g = []
    for n in range(order):
        acc = num[n] if n < len(num) else Fraction(0)
        acc -= sum((den[k] * g[n - k] for k in range(1, min(n, len(den) - 1) + 1)), Fraction(0))
        g.append(acc / den[0])
    return SeriesTrunc(g, order)


def gf_numerator(spec):
    """p_j = a_j - sum_{i=1..j} c_i a_{j-i} for j < l"""
    a, c = spec.initials, spec.coeffs
    return [a[j] - sum((c[i - 1] * a[j - i] for i in range(1, j + 1)), Fraction(0))
            for j in range(spec.order)]


def gf_denominator(spec):
    return [Fraction(1)] + [-c for c in spec.coeffs]


def gf_recurrence(spec, order):
    """Generating function of any RecurrenceSpec, expanded to ``order`` terms"""
    return rational_expand(gf_numerator(spec), gf_denominator(spec), order)


def gf_generalized(spec, order):
    if spec.order != 3:
        raise ValidationError('generalized Tribonacci generating function needs an order-3 '
                              'recurrence, got order {}'.format(spec.order))
    return gf_recurrence(spec, order)


def gf_odd(u, v, w, order):
    """
    Odd-indexed terms T_1, T_3, T_5, ... of the (0, 1, 1) sequence with
    coefficients (u, v, w), as a series in t.
    """
    u, v, w = Fraction(u), Fraction(v), Fraction(w)
    numerator = [1, -(u * u - u + v), -w * (u - 1)]
    denominator = [1, -(u * u + 2 * v), v * v - 2 * u * w, -w * w]
    return rational_expand(numerator, denominator, order)


def gf_lstep(spec, order):
    if any(c != 1 for c in spec.coeffs):
        raise DomainError('l-step generating function needs all coefficients equal to 1, '
                          'got {}'.format(spec))
    return gf_recurrence(spec, order)


def cameron_forward(x):
    """
    z with 1 + sum z_n t^n = (1 - sum x_n t^n)^(-1).

    The constant coefficient of ``x`` is ignored and that of the result is 0.
    """
    x = as_series(x)
    if not x.order:
        return x
    g = series_recip(SeriesTrunc([1] + [-c for c in x.coeffs[1:]]))
    return SeriesTrunc((0,) + g.coeffs[1:])


def cameron_inverse(z):
    """x with 1 - sum x_n t^n = (1 + sum z_n t^n)^(-1)"""
    z = as_series(z)
    if not z.order:
        return z
    g = series_recip(SeriesTrunc((1,) + z.coeffs[1:]))
    return SeriesTrunc([0] + [-c for c in g.coeffs[1:]])

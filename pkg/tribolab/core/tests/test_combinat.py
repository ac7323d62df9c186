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

import random
import unittest
from fractions import Fraction
from math import factorial

import sympy

from tribolab.common.exceptions import ArityError, DomainError
from tribolab.core import arith
from tribolab.core import combinat
from tribolab.core.arith import DenseMatrix
from tribolab.core.combinat import BellInput, PascalParam


def to_fraction(value):
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def sympy_complete_bell(xs, n):
    if n == 0:
        return Fraction(1)
    args = [sympy.Rational(x.numerator, x.denominator) for x in xs]
    return to_fraction(sum(sympy.bell(n, k, args[:n - k + 1]) for k in range(1, n + 1)))


class TestBinom(unittest.TestCase):

    def test_values(self):
        assert combinat.binom(5, 2) == 10
        assert combinat.binom(4, 0) == 1

    def test_out_of_range(self):
        assert combinat.binom(3, 5) == 0
        assert combinat.binom(3, -1) == 0

    def test_negative_n(self):
        self.assertRaises(DomainError, combinat.binom, -1, 0)


class TestPascal(unittest.TestCase):

    def test_rowrev(self):
        assert combinat.pascal_rowrev(PascalParam(1, 2)).rows_list() == [[1, 2], [1, 0]]
        assert combinat.pascal_rowrev(PascalParam(0, 5)).rows_list() == [[1]]
        assert combinat.pascal_rowrev(PascalParam(2, 1)).rows_list() == \
            [[1, 2, 1], [1, 1, 0], [1, 0, 0]]

    def test_rowrev_inv(self):
        inv = combinat.pascal_rowrev_inv(PascalParam(1, 2))
        assert inv.rows_list() == [[0, 1], [Fraction(1, 2), Fraction(-1, 2)]]
        assert combinat.pascal_rowrev_inv(PascalParam(0, 3)).rows_list() == [[1]]

    def test_rowrev_inv_zero_alpha(self):
        self.assertRaises(DomainError, combinat.pascal_rowrev_inv, PascalParam(2, 0))

    def test_inverse_pair(self):
        for alpha in (1, -1, 2, Fraction(1, 2), Fraction(3, 7)):
            for k in range(31):
                p = PascalParam(k, alpha)
                product = arith.mat_mul(combinat.pascal_rowrev(p), combinat.pascal_rowrev_inv(p))
                assert product == DenseMatrix.identity(k + 1), (k, alpha)

    def test_det(self):
        assert [combinat.det_pascal_rowrev(k) for k in range(4)] == [1, -1, -1, 1]
        for k in range(13):
            m = combinat.pascal_rowrev(PascalParam(k, 1))
            assert arith.det_dense(m) == combinat.det_pascal_rowrev(k)


class TestBinomialInversion(unittest.TestCase):

    def test_constant(self):
        assert combinat.binomial_inversion([1, 1, 1]) == [1, 0, 0]

    def test_powers_of_two(self):
        assert combinat.binomial_inversion([1, 2, 4]) == [1, 1, 1]

    def test_round_trip(self):
        rng = random.Random(1)
        for length in range(17):
            b = [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(length)]
            assert combinat.binomial_transform(combinat.binomial_inversion(b)) == b
            assert combinat.binomial_inversion(combinat.binomial_transform(b)) == b


class TestBell(unittest.TestCase):

    def test_first_values(self):
        assert combinat.bell_complete([5], 1) == 5
        assert combinat.bell_complete([1, 3], 2) == 4
        assert combinat.bell_complete(BellInput([1, 3, 8]), 3) == 18
        assert combinat.bell_complete([], 0) == 1

    def test_arity(self):
        self.assertRaises(ArityError, combinat.bell_complete, [1, 2], 3)
        self.assertRaises(ArityError, combinat.bell_partition_sum, [1, 2], 3)
        self.assertRaises(ArityError, combinat.bell_via_det, [1], 2)
        self.assertRaises(ArityError, combinat.bell_inverse_det, [1], 2)

    def test_three_routes(self):
        rng = random.Random(2)
        for n in range(11):
            xs = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
            value = combinat.bell_complete(xs, n)
            assert value == combinat.bell_partition_sum(xs, n)
            assert value == sympy_complete_bell(xs, n)
            # the determinant route takes a_m = x_m / (m-1)!
            a = [x / factorial(m - 1) for m, x in enumerate(xs, 1)]
            if n:
                assert combinat.bell_via_det(a, n) * factorial(n) == value

    def test_via_det_values(self):
        assert combinat.bell_via_det([1], 1) == 1
        assert combinat.bell_via_det([1, 3], 2) == 2

    def test_inverse_values(self):
        assert combinat.bell_inverse_det([7], 1) == 7
        # b_m = T_{m+1} recovers the Tribonacci-Lucas term a_2 = 3
        assert combinat.bell_inverse_det([1, 2], 2) == 3

    def test_inverse_round_trip(self):
        rng = random.Random(4)
        for n in range(1, 11):
            a = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
            b = [combinat.bell_via_det(a, m) for m in range(1, n + 1)]
            assert combinat.bell_inverse_det(b, n) == a[n - 1]

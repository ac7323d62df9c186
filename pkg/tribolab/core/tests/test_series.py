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

from tribolab.common.exceptions import DomainError, ValidationError
from tribolab.core import series
from tribolab.core import sequences
from tribolab.core.arith import HessenbergColumns, det_hessenberg
from tribolab.core.combinat import alt_sign
from tribolab.core.series import SeriesTrunc


def ints(f):
    return [int(c) for c in f]


def random_unit_series(rng, order):
    return SeriesTrunc([1] + [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(order - 1)])


class TestSeriesTrunc(unittest.TestCase):

    def test_padding(self):
        f = SeriesTrunc([1, 2], 4)
        assert f.coeffs == (1, 2, 0, 0)
        assert f.order == 4

    def test_cut(self):
        assert SeriesTrunc([1, 2, 3], 2).coeffs == (1, 2)

    def test_negative_order(self):
        self.assertRaises(ValidationError, SeriesTrunc, [1], -1)

    def test_to_json(self):
        assert SeriesTrunc([Fraction(1, 2), -3]).to_json() == ['1/2', '-3']


class TestArithmetic(unittest.TestCase):

    def test_mul_one(self):
        f = SeriesTrunc([1, 2, 3])
        assert series.series_mul(f, SeriesTrunc.one(3)) == f

    def test_mul_difference_of_squares(self):
        f = series.series_mul(SeriesTrunc([1, 1], 3), SeriesTrunc([1, -1], 3))
        assert ints(f) == [1, 0, -1]

    def test_mul_min_order(self):
        assert series.series_mul(SeriesTrunc([1, 1, 1]), SeriesTrunc([1, 1])).order == 2

    def test_mul_telescopes_tribonacci(self):
        t = sequences.handle_for(sequences.classical_tribonacci())
        g = SeriesTrunc(t.terms(1, 10))
        f = series.series_mul(SeriesTrunc([1, -1, -1, -1], 10), g)
        assert ints(f) == [1] + [0] * 9

    def test_add_sub_scale(self):
        f, g = SeriesTrunc([1, 2]), SeriesTrunc([3, 4])
        assert ints(series.series_add(f, g)) == [4, 6]
        assert ints(series.series_sub(f, g)) == [-2, -2]
        assert ints(series.series_scale(f, 3)) == [3, 6]

    def test_derivative_integral(self):
        f = SeriesTrunc([5, 1, 3])
        assert ints(series.series_derivative(f)) == [1, 6]
        assert series.series_derivative(series.series_integral(f)) == f


class TestReciprocal(unittest.TestCase):

    def test_one(self):
        assert ints(series.series_recip(SeriesTrunc.one(5))) == [1, 0, 0, 0, 0]

    def test_odd_tribonacci(self):
        assert ints(series.series_recip(SeriesTrunc([1, 2, 7, 24]))) == [1, -2, -3, -4]

    def test_non_unit(self):
        self.assertRaises(DomainError, series.series_recip, SeriesTrunc([0, 1]))

    def test_product_is_one(self):
        rng = random.Random(8)
        for order in (1, 5, 24):
            f = random_unit_series(rng, order)
            f = series.series_scale(f, Fraction(3, 2))
            assert series.series_mul(f, series.series_recip(f)) == SeriesTrunc.one(order)


class TestExpLog(unittest.TestCase):

    def test_trivial(self):
        assert series.series_exp(SeriesTrunc([0, 0, 0])) == SeriesTrunc.one(3)
        assert series.series_log(SeriesTrunc.one(3)) == SeriesTrunc([0, 0, 0])

    def test_tribonacci_chain(self):
        f = series.series_scale(series.series_log(SeriesTrunc([1, -1, -1, -1], 5)), -1)
        assert ints(series.series_exp(f)) == [1, 1, 2, 4, 7]

    def test_exp_log_inverse(self):
        rng = random.Random(9)
        f = random_unit_series(rng, 16)
        assert series.series_exp(series.series_log(f)) == f

    def test_log_exp_inverse(self):
        rng = random.Random(10)
        f = SeriesTrunc([0] + [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(23)])
        assert series.series_log(series.series_exp(f)) == f

    def test_preconditions(self):
        self.assertRaises(DomainError, series.series_exp, SeriesTrunc([1, 1]))
        self.assertRaises(DomainError, series.series_log, SeriesTrunc([2, 1]))


class TestGeneratingFunctions(unittest.TestCase):

    def test_classical(self):
        f = series.gf_generalized(sequences.classical_tribonacci(), 6)
        assert ints(f) == [0, 1, 1, 2, 4, 7]

    def test_geometric(self):
        f = series.gf_generalized(sequences.make_tribonacci(0, 0, 1, 1, 0, 0), 7)
        assert ints(f) == [1, 0, 0, 1, 0, 0, 1]

    def test_generalized_needs_order_three(self):
        self.assertRaises(ValidationError, series.gf_generalized, sequences.make_lstep(2), 4)

    def test_generalized_matches_terms(self):
        rng = random.Random(12)
        for _ in range(20):
            coeffs = [rng.randint(-3, 3) for _ in range(3)]
            initials = [rng.randint(-3, 3) for _ in range(3)]
            if not any(coeffs) or not any(initials):
                continue
            spec = sequences.make_tribonacci(*(coeffs + initials))
            f = series.gf_generalized(spec, 64)
            assert list(f) == sequences.handle_for(spec).terms(0, 63)

    def test_odd(self):
        assert ints(series.gf_odd(1, 1, 1, 4)) == [1, 2, 7, 24]
        assert ints(series.gf_odd(2, 1, 1, 4)) == [1, 3, 20, 130]

    def test_odd_matches_terms(self):
        for uvw in ((1, 1, 1), (2, -1, 3), (-2, 0, 1), (0, 1, 0), (1, 0, -2)):
            t = sequences.handle_for(sequences.make_tribonacci(*(uvw + (0, 1, 1))))
            f = series.gf_odd(*uvw, 32)
            assert list(f) == [t.term(2 * n + 1) for n in range(32)]

    def test_lstep_fibonacci(self):
        assert ints(series.gf_lstep(sequences.make_lstep(2), 7)) == [0, 1, 1, 2, 3, 5, 8]

    def test_lstep_numerator(self):
        spec = sequences.make_lstep_companion(3)
        assert series.gf_numerator(spec) == [3, -2, -1]
        assert ints(series.gf_lstep(spec, 5)) == [3, 1, 3, 7, 11]

    def test_lstep_companion_four(self):
        spec = sequences.make_lstep_companion(4)
        assert list(series.gf_lstep(spec, 20)) == sequences.handle_for(spec).terms(0, 19)

    def test_lstep_needs_unit_coefficients(self):
        self.assertRaises(DomainError, series.gf_lstep,
                          sequences.RecurrenceSpec([1, 2], [0, 1]), 4)

    def test_rational_expand_bad_denominator(self):
        self.assertRaises(DomainError, series.rational_expand, [1], [0, 1], 3)


class TestCameron(unittest.TestCase):

    def test_forward(self):
        z = series.cameron_forward(SeriesTrunc([0, 1, 1, 1], 6))
        assert ints(z) == [0, 1, 2, 4, 7, 13]

    def test_zero(self):
        assert ints(series.cameron_forward(SeriesTrunc([0] * 5))) == [0] * 5
        assert ints(series.cameron_inverse(SeriesTrunc([0] * 5))) == [0] * 5

    def test_inverse(self):
        x = series.cameron_inverse(SeriesTrunc([0, 1, 2, 4, 7, 13]))
        assert ints(x) == [0, 1, 1, 1, 0, 0]

    def test_round_trip(self):
        rng = random.Random(13)
        x = SeriesTrunc([0] + [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(19)])
        assert series.cameron_inverse(series.cameron_forward(x)) == x
        assert series.cameron_forward(series.cameron_inverse(x)) == x

    def test_determinant_form(self):
        rng = random.Random(14)
        x = [rng.randint(-3, 3) for _ in range(20)]
        z = series.cameron_forward(SeriesTrunc([0] + x))
        for n in range(1, 21):
            h = HessenbergColumns.toeplitz([alt_sign(d) * x[d] for d in range(n)], 1, n)
            assert det_hessenberg(h) == z[n]

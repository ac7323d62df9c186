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

import unittest
from fractions import Fraction
from mock import Mock
from tribolab.api import client
from tribolab.api import determinant
from tribolab.api import sequence
from tribolab.api import series
from tribolab.api import verifier
from tribolab.common.exceptions import ConfigError, DomainError, ValidationError
from tribolab.core import sequences


class TestClient(unittest.TestCase):
    def test_defaults(self):
        c = client.Client(format='csv', threads=None)
        assert c.get_default('format') == 'csv'
        assert c.get_default('threads', 1) == 1
        assert c.get_version() == '1.0.0'

    def test_sub_objects(self):
        c = client.Client()
        assert isinstance(c.sequence, sequence.Sequence)
        assert isinstance(c.verifier, verifier.Verifier)


class TestSequence(unittest.TestCase):
    def test_preset(self):
        seq = sequence.Sequence(client=Mock())
        spec = seq.get_spec(preset='tribonacci')
        assert [v for _, v in seq.terms(spec, 0, 7)] == [0, 1, 1, 2, 4, 7, 13, 24]

    def test_explicit(self):
        seq = sequence.Sequence(client=Mock())
        spec = seq.get_spec(coeffs='1,1', init='2,1')
        assert seq.list(spec, 3, 4) == [{'n': 3, 'value': '4'}, {'n': 4, 'value': '7'}]

    def test_rational_terms(self):
        seq = sequence.Sequence(client=Mock())
        spec = seq.get_spec(coeffs='1/2,0,1', init='1,0,0')
        assert seq.terms(spec, 3, 4) == [(3, 1), (4, Fraction(1, 2))]

    def test_preset_and_coeffs(self):
        seq = sequence.Sequence(client=Mock())
        self.assertRaises(ValidationError, seq.get_spec, coeffs='1,1,1', preset='tribonacci')
        self.assertRaises(ValidationError, seq.get_spec, coeffs='1,1,1')


class TestDeterminant(unittest.TestCase):
    def setUp(self):
        self.det = determinant.Determinant(client=Mock())

    def test_t2n1(self):
        assert self.det.evaluate('t2n1', 3, uvw='1,1,1') == {
            'n': 3, 'det': '24', 'expected': '24', 'match': True}
        assert self.det.evaluate('t2n1', 2, uvw='2,1,1')['det'] == '20'

    def test_cor_t2n1(self):
        result = self.det.evaluate('cor-t2n1', 2, uvw='1,1,1')
        assert result['det'] == '-3'
        assert result['match']

    def test_bell(self):
        assert self.det.evaluate('bell-lstep', 3, l=2)['expected'] == '3'
        assert self.det.evaluate('bell-lstep', 3, l=2)['match']
        assert self.det.evaluate('bell-tribo-inv', 3, uvw='1,1,1')['det'] == '7'
        assert self.det.evaluate('bell-tribo', 4, uvw='2,-1,1/2')['match']
        assert self.det.evaluate('bell-lstep-inv', 6, l=4)['match']

    def test_missing_parameters(self):
        self.assertRaises(ValidationError, self.det.evaluate, 't2n1', 3)
        self.assertRaises(ValidationError, self.det.evaluate, 'bell-lstep', 3)
        self.assertRaises(ValidationError, self.det.evaluate, 't2n1', 0, uvw='1,1,1')
        self.assertRaises(ValidationError, self.det.evaluate, 't2n1', 3, uvw='1,1')
        self.assertRaises(ValidationError, self.det.evaluate, 'hankel', 3, uvw='1,1,1')


class TestSeries(unittest.TestCase):
    def setUp(self):
        self.client = Mock()
        self.series = series.Series(client=self.client)

    def test_gf_uses_sequence_spec(self):
        self.client.sequence.get_spec.return_value = sequences.classical_tribonacci()
        f = self.series.compute('gf', preset='tribonacci', order=6)
        self.client.sequence.get_spec.assert_called_once_with(coeffs=None, init=None,
                                                              preset='tribonacci')
        assert list(f) == [0, 1, 1, 2, 4, 7]

    def test_gf_default_order(self):
        self.client.sequence.get_spec.return_value = sequences.classical_tribonacci()
        assert self.series.compute('gf', preset='tribonacci').order == series.DEFAULT_GF_ORDER

    def test_gf_odd(self):
        f = self.series.compute('gf-odd', uvw='1,1,1', order=4)
        assert list(f) == [1, 2, 7, 24]

    def test_recip(self):
        f = self.series.compute('recip', coeffs='1,-1')
        assert list(f) == [1, 1]
        f = self.series.compute('recip', coeffs='1,-1', order=4)
        assert list(f) == [1, 1, 1, 1]

    def test_recip_domain(self):
        self.assertRaises(DomainError, self.series.compute, 'recip', coeffs='0,1')

    def test_cameron(self):
        f = self.series.compute('cameron', coeffs='0,1,1,1', order=5)
        assert list(f) == [0, 1, 2, 4, 7]
        assert list(self.series.compute('cameron-inv', coeffs=','.join(str(c) for c in f))) == \
            [0, 1, 1, 1, 0]

    def test_bad_operands(self):
        self.assertRaises(ValidationError, self.series.compute, 'sqrt', coeffs='1')
        self.assertRaises(ValidationError, self.series.compute, 'exp')
        self.assertRaises(ValidationError, self.series.compute, 'gf-odd')
        self.assertRaises(ValidationError, self.series.compute, 'exp', coeffs='0,1', order=0)


class TestVerifier(unittest.TestCase):
    def test_config_overrides(self):
        v = verifier.Verifier(client=Mock())
        config = v.config(suites='q_det_3x3', grid={'n': '2..4'}, format=None)
        assert config.suites == ['q_det_3x3']
        assert config.format == 'json'

    def test_config_unknown_suite(self):
        v = verifier.Verifier(client=Mock())
        self.assertRaises(ConfigError, v.config, suites='theorem9')

    def test_run(self):
        v = verifier.Verifier(client=Mock())
        doc = v.run(v.config(suites='q_det_3x3', grid={'n': '2..4'}))
        assert doc.version == '1.0.0'
        assert doc.exit_code() == 0
        assert len(doc.reports) == 3

    def test_catalog(self):
        catalog = verifier.Verifier(client=Mock()).catalog()
        assert len(catalog) == 17
        entry = [e for e in catalog if e['id'] == 'theorem1'][0]
        assert entry['symbols'] == ['uvw', 'k', 'n']
        assert entry['variants'] == ['derivation_consistent', 'as_stated']

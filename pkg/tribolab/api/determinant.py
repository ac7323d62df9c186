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
Determinant representations API handling
"""

from tribolab.common import utils
from tribolab.common.exceptions import ValidationError
from tribolab.core import combinat
from tribolab.core import identities
from tribolab.core import sequences
import logging

REPRESENTATIONS = ('t2n1', 'cor-t2n1', 'bell-tribo', 'bell-lstep', 'bell-tribo-inv',
                   'bell-lstep-inv')


class Determinant(object):
    def __init__(self, client=None):
        self._client = client
        self._logger = logging.getLogger('tribolab')

    def evaluate(self, rep, n, uvw=None, l=None):
        """
        Evaluates one determinant representation against the value it claims.

        :param rep: one of REPRESENTATIONS
        :param uvw: (u, v, w) for the Tribonacci representations
        :param l: step count for the l-step representations
        :return: dict with n, det, expected and match
        :raises ValidationError: on unknown rep or missing parameters
        """
        self._logger.debug("")
        if rep not in REPRESENTATIONS:
            raise ValidationError('unknown representation {!r}; expected one of {}'.format(
                rep, ', '.join(REPRESENTATIONS)))
        if n is None or n < 1:
            raise ValidationError('--n must be at least 1')
        if rep.startswith('bell-lstep'):
            if l is None:
                raise ValidationError('{} needs --l'.format(rep))
            a, b = identities.bell_lstep_sequences(l)
        else:
            if uvw is None:
                raise ValidationError('{} needs --uvw'.format(rep))
            u, v, w = self._triple(uvw)
            if rep.startswith('bell-tribo'):
                a, b = identities.bell_tribo_sequences(u, v, w)

        if rep == 't2n1':
            det = identities.t2n1_determinant(u, v, w, n)
            spec = sequences.make_tribonacci(u, v, w, 0, 1, 1)
            expected = sequences.handle_for(spec).term(2 * n + 1)
        elif rep == 'cor-t2n1':
            det = identities.odd_terms_determinant(u, v, w, n)
            expected = combinat.alt_sign(n) * identities.r_sequence(u, v, w, n)
        elif rep.endswith('-inv'):
            det = combinat.bell_inverse_det(b.terms(2, n + 1), n)
            expected = a.term(n)
        else:
            det = combinat.bell_via_det(a.terms(1, n), n)
            expected = b.term(n + 1)
        self._logger.verbose('{} n={}: det={} expected={}'.format(rep, n, det, expected))
        return {
            'n': n,
            'det': utils.rational_to_str(det),
            'expected': utils.rational_to_str(expected),
            'match': det == expected,
        }

    def _triple(self, uvw):
        values = utils.parse_rational_list(uvw)
        if len(values) != 3:
            raise ValidationError('--uvw needs three values, got {!r}'.format(uvw))
        return values

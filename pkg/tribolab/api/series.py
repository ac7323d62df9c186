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
Power series API handling
"""

from tribolab.common import utils
from tribolab.common.exceptions import ValidationError
from tribolab.core import series
import logging

GF_OPS = ('gf', 'gf-odd', 'gf-lstep')
OPS = GF_OPS + ('recip', 'exp', 'log', 'cameron', 'cameron-inv')
DEFAULT_GF_ORDER = 10


class Series(object):
    def __init__(self, client=None):
        self._client = client
        self._logger = logging.getLogger('tribolab')

    def compute(self, op, coeffs=None, init=None, preset=None, uvw=None, order=None):
        """
        Runs one series operation.

        For the generating-function ops ``coeffs``/``init`` (or ``preset``)
        describe a recurrence; for the others ``coeffs`` are the input
        series c_0, c_1, ... and the order defaults to their count.

        :return: SeriesTrunc
        :raises ValidationError: on unknown op or missing operands
        :raises DomainError: on constant-term preconditions
        """
        self._logger.debug("")
        if op not in OPS:
            raise ValidationError('unknown op {!r}; expected one of {}'.format(op, ', '.join(OPS)))
        if order is not None and order < 1:
            raise ValidationError('--order must be at least 1, got {}'.format(order))

        if op == 'gf-odd':
            if uvw is None:
                raise ValidationError('gf-odd needs --uvw')
            values = utils.parse_rational_list(uvw)
            if len(values) != 3:
                raise ValidationError('--uvw needs three values, got {!r}'.format(uvw))
            return series.gf_odd(*values, order or DEFAULT_GF_ORDER)
        if op in GF_OPS:
            spec = self._client.sequence.get_spec(coeffs=coeffs, init=init, preset=preset)
            if op == 'gf':
                return series.gf_recurrence(spec, order or DEFAULT_GF_ORDER)
            return series.gf_lstep(spec, order or DEFAULT_GF_ORDER)

        if coeffs is None:
            raise ValidationError('{} needs --coeffs'.format(op))
        f = series.SeriesTrunc(utils.parse_rational_list(coeffs), order)
        self._logger.verbose('{} of a series of order {}'.format(op, f.order))
        if op == 'recip':
            return series.series_recip(f)
        if op == 'exp':
            return series.series_exp(f)
        if op == 'log':
            return series.series_log(f)
        if op == 'cameron':
            return series.cameron_forward(f)
        return series.cameron_inverse(f)

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
Sequence API handling
"""

from tribolab.common import utils
from tribolab.common.exceptions import ValidationError
from tribolab.core import sequences
import logging


class Sequence(object):
    def __init__(self, client=None):
        self._client = client
        self._logger = logging.getLogger('tribolab')

    def get_spec(self, coeffs=None, init=None, preset=None):
        """
        Returns the RecurrenceSpec named by a preset or given by coefficient
        and initial-value lists, never both.
        """
        self._logger.debug("")
        if preset is not None:
            if coeffs is not None or init is not None:
                raise ValidationError('use either a preset or --coeffs/--init, not both')
            return sequences.preset(preset)
        if coeffs is None or init is None:
            raise ValidationError('a recurrence needs both coefficients and initial values')
        return sequences.RecurrenceSpec(utils.parse_rational_list(coeffs),
                                        utils.parse_rational_list(init))

    def terms(self, spec, lo, hi):
        """Returns [(n, a_n)] for lo <= n <= hi"""
        self._logger.debug("")
        handle = sequences.handle_for(spec)
        values = sequences.terms(handle, lo, hi)
        self._logger.verbose('{} terms of {}'.format(len(values), spec))
        return list(zip(range(lo, hi + 1), values))

    def list(self, spec, lo, hi):
        return [{'n': n, 'value': utils.rational_to_str(value)}
                for n, value in self.terms(spec, lo, hi)]

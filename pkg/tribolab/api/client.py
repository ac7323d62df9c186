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
tribolab client API
"""

from tribolab.api import determinant
from tribolab.api import sequence
from tribolab.api import series
from tribolab.api import verifier
from tribolab import __version__
import logging


class Client(object):

    def __init__(self, **kwargs):
        self._logger = logging.getLogger('tribolab')
        self._defaults = {}
        self.sequence = sequence.Sequence(client=self)
        self.determinant = determinant.Determinant(client=self)
        self.series = series.Series(client=self)
        self.verifier = verifier.Verifier(client=self)
        self.set_default_params(**kwargs)

    def get_version(self):
        return __version__

    def set_default_params(self, **kwargs):
        """Global command-line options; None values are ignored"""
        self._defaults.update({k: v for k, v in kwargs.items() if v is not None})

    def get_default(self, key, default=None):
        return self._defaults.get(key, default)

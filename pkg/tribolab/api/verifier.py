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
Verification harness API handling
"""

from tribolab import __version__
from tribolab.core import grid
from tribolab.core import identities
import logging


class Verifier(object):
    def __init__(self, client=None):
        self._client = client
        self._logger = logging.getLogger('tribolab')

    def config(self, path=None, **overrides):
        """
        Loads a GridConfig from a JSON or YAML file, if given, with the
        non-None overrides applied on top.
        """
        self._logger.debug("")
        if path is not None:
            return grid.GridConfig.from_file(path, **overrides)
        return grid.GridConfig.from_dict({}, **overrides)

    def run(self, config):
        self._logger.debug("")
        return grid.verify(config, __version__)

    def catalog(self):
        return [{'id': ident, 'symbols': list(identities.symbols_for(ident)),
                 'variants': list(identities.variants_for(ident, identities.POLICY_BOTH))}
                for ident in identities.IDENTITY_IDS]

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
Verification run configuration and the report document it produces
"""

import csv
from fractions import Fraction
from io import StringIO
from itertools import product
import json
import logging

from prettytable import PrettyTable
import yaml

from tribolab.common.exceptions import ConfigError, TriboException
from tribolab.common.utils import format_params, parse_range, parse_rational_list, rational_to_str
from tribolab.core import identities

logger = logging.getLogger('tribolab')

FORMATS = ('json', 'csv', 'human')
RANGE_SYMBOLS = ('n', 'k', 'i', 'm', 'j', 'l')
DEFAULT_AXIS = tuple(Fraction(c) for c in range(-2, 4))


def _triple(item):
    values = parse_rational_list(item)
    if len(values) != 3:
        raise ConfigError('(u, v, w) triple needs three values, got {!r}'.format(item))
    if not any(values):
        raise ConfigError('(u, v, w) must not be (0, 0, 0)')
    return tuple(values)


def parse_grid(data):
    """
    Normalises a grid mapping.

    'uvw' takes a list of triples; 'u', 'v', 'w' take value lists whose
    Cartesian product (without the zero triple) replaces 'uvw'. Missing axes
    among u, v, w default to -2..3.
    """
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError('grid must be a mapping, got {!r}'.format(data))
    unknown = set(data) - set(RANGE_SYMBOLS) - {'uvw', 'u', 'v', 'w'}
    if unknown:
        raise ConfigError('unknown grid symbols: {}'.format(', '.join(sorted(unknown))))
    grid = {}
    try:
        if data.get('uvw') is not None:
            triples = data['uvw']
            if isinstance(triples, str):
                triples = [triples]
            grid['uvw'] = tuple(_triple(item) for item in triples)
        elif any(data.get(symbol) is not None for symbol in 'uvw'):
            axes = [tuple(parse_rational_list(data[symbol])) if data.get(symbol) is not None
                    else DEFAULT_AXIS for symbol in 'uvw']
            grid['uvw'] = tuple(t for t in product(*axes) if any(t))
        for symbol in RANGE_SYMBOLS:
            if data.get(symbol) is not None:
                grid[symbol] = parse_range(data[symbol])
    except ConfigError:
        raise
    except TriboException as exc:
        raise ConfigError('invalid grid: {}'.format(exc))
    return grid


class GridConfig(object):
    """What to verify, over which points, and how to report it"""

    def __init__(self, suites='all', variant=identities.POLICY_DEFAULT, grid=None,
                 extend_backward=False, format='json', output=None, threads=1,
                 strict_as_stated=False):
        if suites is None or suites == 'all' or suites == ['all']:
            suites = list(identities.IDENTITY_IDS)
        elif isinstance(suites, str):
            suites = [s.strip() for s in suites.split(',') if s.strip()]
        if 'all' in suites:
            suites = list(identities.IDENTITY_IDS)
        for ident in suites:
            identities.entry_for(ident)
        if variant not in identities.VARIANT_POLICIES:
            raise ConfigError('unknown variant policy {!r}; expected one of {}'.format(
                variant, ', '.join(identities.VARIANT_POLICIES)))
        if format not in FORMATS:
            raise ConfigError('unknown format {!r}; expected one of {}'.format(
                format, ', '.join(FORMATS)))
        try:
            threads = int(threads)
        except (TypeError, ValueError):
            raise ConfigError('threads must be an integer, got {!r}'.format(threads))
        if threads < 1:
            raise ConfigError('threads must be at least 1, got {}'.format(threads))
        # catalog order, no duplicates
        self.suites = [ident for ident in identities.IDENTITY_IDS if ident in suites]
        self.variant = variant
        self.grid = grid if grid is not None else {}
        self.extend_backward = bool(extend_backward)
        self.format = format
        self.output = output
        self.threads = threads
        self.strict_as_stated = bool(strict_as_stated)

    FIELDS = ('suites', 'variant', 'grid', 'extend_backward', 'format', 'output', 'threads',
              'strict_as_stated')

    @classmethod
    def from_dict(cls, data, **overrides):
        """
        Builds a config from a parsed document; non-None overrides win.

        :raises ConfigError: on unknown fields or malformed values
        """
        data = dict(data or {})
        unknown = set(data) - set(cls.FIELDS)
        if unknown:
            raise ConfigError('unknown config fields: {}'.format(', '.join(sorted(unknown))))
        grid = parse_grid(data.pop('grid', None))
        grid.update(parse_grid(overrides.pop('grid', None)))
        for key, value in overrides.items():
            if value is not None:
                data[key] = value
        return cls(grid=grid, **data)

    @classmethod
    def from_file(cls, path, **overrides):
        try:
            with open(path) as f:
                data = yaml.safe_load(f)
        except (OSError, yaml.YAMLError) as exc:
            raise ConfigError('cannot read config {}: {}'.format(path, exc))
        if data is not None and not isinstance(data, dict):
            raise ConfigError('config {} must hold a mapping'.format(path))
        return cls.from_dict(data, **overrides)

    def to_dict(self):
        """Echo of everything that shapes the reports"""
        grid = {}
        if 'uvw' in self.grid:
            grid['uvw'] = [[rational_to_str(c) for c in t] for t in self.grid['uvw']]
        for symbol in RANGE_SYMBOLS:
            if symbol in self.grid:
                r = self.grid[symbol]
                grid[symbol] = '{}..{}'.format(r.start, r.stop - 1)
        return {
            'suites': list(self.suites),
            'variant': self.variant,
            'grid': grid,
            'extend_backward': self.extend_backward,
            'strict_as_stated': self.strict_as_stated,
        }


def tally(reports):
    """{id: {status: count}} in report order"""
    counts = {}
    for report in reports:
        per_id = counts.setdefault(report.id, {status: 0 for status in identities.STATUSES})
        per_id[report.status] += 1
    return counts


class ReportDocument(object):
    """
    Reports split into the primary section and the informational one, which
    holds as_stated outcomes of disputed identities.
    """

    def __init__(self, config, reports, version):
        self.config = config
        self.version = version
        self.reports = [r for r in reports if not identities.is_informational(r.id, r.variant)]
        self.informational = [r for r in reports if identities.is_informational(r.id, r.variant)]

    def summary(self):
        return {'reports': tally(self.reports), 'informational': tally(self.informational)}

    def counterexamples(self, informational=False):
        section = self.informational if informational else self.reports
        return [r for r in section if r.status == identities.COUNTEREXAMPLE]

    def exit_code(self):
        """1 on any primary counterexample, or informational ones under strict_as_stated"""
        if self.counterexamples():
            return 1
        if self.config.strict_as_stated and self.counterexamples(informational=True):
            return 1
        return 0

    def to_dict(self):
        return {
            'version': self.version,
            'config': self.config.to_dict(),
            'reports': [r.to_dict() for r in self.reports],
            'informational': [r.to_dict() for r in self.informational],
            'summary': self.summary(),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2) + '\n'

    def to_csv(self):
        buf = StringIO()
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(['section', 'id', 'variant', 'params', 'status', 'lhs', 'rhs', 'note'])
        for section, reports in (('reports', self.reports), ('informational', self.informational)):
            for r in reports:
                writer.writerow([section, r.id, r.variant, format_params(r.params), r.status,
                                 rational_to_str(r.lhs) or '', rational_to_str(r.rhs) or '',
                                 r.note])
        return buf.getvalue()

    def to_human(self):
        table = PrettyTable(['section', 'id', 'variant', 'params', 'status', 'lhs', 'rhs'])
        for section, reports in (('reports', self.reports), ('informational', self.informational)):
            for r in reports:
                table.add_row([section, r.id, r.variant, format_params(r.params), r.status,
                               rational_to_str(r.lhs) or '', rational_to_str(r.rhs) or ''])
        table.align = 'l'
        return '{}\n{}\n'.format(table, self.summary_line())

    def summary_line(self):
        parts = []
        for name, reports in (('reports', self.reports), ('informational', self.informational)):
            counts = {status: 0 for status in identities.STATUSES}
            for r in reports:
                counts[r.status] += 1
            parts.append('{}: {}'.format(name, ', '.join(
                '{} {}'.format(counts[s], s) for s in identities.STATUSES)))
        return '; '.join(parts)

    def render(self, fmt=None):
        fmt = fmt or self.config.format
        if fmt == 'json':
            return self.to_json()
        if fmt == 'csv':
            return self.to_csv()
        if fmt == 'human':
            return self.to_human()
        raise ConfigError('unknown format {!r}'.format(fmt))


def verify(config, version):
    reports = identities.run_grid(config)
    doc = ReportDocument(config, reports, version)
    logger.info(doc.summary_line())
    return doc

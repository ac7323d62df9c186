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
Parsing and formatting helpers shared by the library and the console script
"""

from fractions import Fraction
import re

from tribolab.common.exceptions import ValidationError

_RANGE_RE = re.compile(r'^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$')


def rational_to_str(value):
    """Serialises a rational as "p/q", or "p" when q == 1"""
    if value is None:
        return None
    return str(Fraction(value))


def parse_rational(text):
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, float):
        # floats are refused: interchange formats carry exact "p/q" strings
        raise ValidationError('inexact number {!r}, use a "p/q" string'.format(text))
    try:
        return Fraction(str(text).strip().replace('−', '-'))
    except (ValueError, ZeroDivisionError):
        raise ValidationError('not a rational number: {!r}'.format(text))


def parse_rational_list(text):
    if isinstance(text, (list, tuple)):
        return [parse_rational(item) for item in text]
    items = [item for item in str(text).split(',') if item.strip()]
    if not items:
        raise ValidationError('empty list of rationals: {!r}'.format(text))
    return [parse_rational(item) for item in items]


def parse_range(text):
    """
    Parses an inclusive integer range.

    Accepts "lo..hi", a single integer, or a two-element [lo, hi] list.

    :return: range object covering lo..hi
    :raises ValidationError: on malformed or empty ranges
    """
    if isinstance(text, (list, tuple)):
        if len(text) != 2:
            raise ValidationError('range must be [lo, hi]: {!r}'.format(text))
        lo, hi = (_parse_int(item) for item in text)
    elif isinstance(text, int) and not isinstance(text, bool):
        lo = hi = text
    else:
        match = _RANGE_RE.match(str(text))
        if match:
            lo, hi = int(match.group(1)), int(match.group(2))
        else:
            lo = hi = _parse_int(text)
    if lo > hi:
        raise ValidationError('empty range {}..{}'.format(lo, hi))
    return range(lo, hi + 1)


def _parse_int(text):
    try:
        return int(str(text).strip())
    except ValueError:
        raise ValidationError('not an integer: {!r}'.format(text))


def format_params(params):
    return ';'.join('{}={}'.format(k, rational_to_str(v)) for k, v in params.items())

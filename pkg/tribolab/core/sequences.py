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
Memoizing engine for fixed-coefficient linear recurrences
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
import logging
import threading

from tribolab.common.exceptions import BackwardExtensionError, ValidationError

logger = logging.getLogger('tribolab')

_RecurrenceSpec = namedtuple('RecurrenceSpec', 'order coeffs initials')


class RecurrenceSpec(_RecurrenceSpec):
    """
    a_n = c_1 a_{n-1} + ... + c_l a_{n-l} with initials a_0..a_{l-1}.

    Hashable, so handles can be shared per spec.
    """

    __slots__ = ()

    def __new__(cls, coeffs, initials):
        coeffs = tuple(Fraction(c) for c in coeffs)
        initials = tuple(Fraction(a) for a in initials)
        if not coeffs:
            raise ValidationError('recurrence order must be at least 1')
        if len(coeffs) != len(initials):
            raise ValidationError('{} coefficients but {} initial values'.format(
                len(coeffs), len(initials)))
        if not any(coeffs):
            raise ValidationError('coefficients must not all be zero')
        if not any(initials):
            raise ValidationError('initial values must not all be zero')
        return _RecurrenceSpec.__new__(cls, len(coeffs), coeffs, initials)

    def __getnewargs__(self):
        return (self.coeffs, self.initials)

    def __repr__(self):
        return 'RecurrenceSpec(coeffs=[{}], initials=[{}])'.format(
            ', '.join(str(c) for c in self.coeffs), ', '.join(str(a) for a in self.initials))


class SequenceHandle(object):
    """
    Term cache for one RecurrenceSpec.

    term() may be called concurrently: the memo is extended under a lock, so
    every caller sees the same exact values.
    """

    def __init__(self, spec):
        self.spec = spec
        self._forward = list(spec.initials)
        # _backward[m] holds a_{-(m+1)}
        self._backward = []
        self._lock = threading.Lock()

    def term(self, n):
        if 0 <= n < len(self._forward):
            return self._forward[n]
        if n < 0 and -n <= len(self._backward):
            return self._backward[-n - 1]
        with self._lock:
            if n >= 0:
                self._extend_forward(n)
                return self._forward[n]
            self._extend_backward(n)
            return self._backward[-n - 1]

    def terms(self, lo, hi):
        if lo > hi:
            raise ValidationError('empty term range {}..{}'.format(lo, hi))
        return [self.term(n) for n in range(lo, hi + 1)]

    def _extend_forward(self, n):
        coeffs = self.spec.coeffs
        memo = self._forward
        while len(memo) <= n:
            m = len(memo)
            memo.append(sum((c * memo[m - k] for k, c in enumerate(coeffs, 1)), Fraction(0)))

    def _extend_backward(self, n):
        coeffs = self.spec.coeffs
        last = coeffs[-1]
        if last == 0:
            raise BackwardExtensionError(
                'backward extension undefined: trailing coefficient is zero in {}'.format(self.spec))
        order = self.spec.order
        while len(self._backward) < -n:
            # solve a_m = c_1 a_{m-1} + ... + c_l a_{m-l} for a_{m-l}
            target = -len(self._backward) - 1
            m = target + order
            known = self._value(m) - sum(
                (coeffs[k - 1] * self._value(m - k) for k in range(1, order)), Fraction(0))
            self._backward.append(known / last)
        logger.debug('extended {} back to index {}'.format(self.spec, n))

    def _value(self, n):
        if n >= 0:
            self._extend_forward(n)
            return self._forward[n]
        return self._backward[-n - 1]


@lru_cache(maxsize=None)
def handle_for(spec):
    """Shared handle per spec, so grid runs reuse cached terms"""
    return SequenceHandle(spec)


def term(h, n):
    return h.term(n)


def terms(h, lo, hi):
    return h.terms(lo, hi)


def make_tribonacci(u, v, w, a, b, c):
    return RecurrenceSpec((u, v, w), (a, b, c))


def make_lstep(l):
    """
    l-step Fibonacci numbers with F_n = 0 (n <= 0) and F_1 = F_2 = 1.

    The initials a_2..a_{l-1} are derived from that convention.
    """
    l = _check_order(l)
    values = [0, 1]
    for j in range(2, l):
        values.append(sum(values[max(j - l, 0):j]))
    return RecurrenceSpec([1] * l, values[:l])


def make_lstep_companion(l):
    l = _check_order(l)
    return RecurrenceSpec([1] * l, [l] + [2 ** j - 1 for j in range(1, l)])


def _check_order(l):
    try:
        l = int(l)
    except (TypeError, ValueError):
        raise ValidationError('step count must be an integer, got {!r}'.format(l))
    if l < 2:
        raise ValidationError('step count must be at least 2, got {}'.format(l))
    return l


def classical_tribonacci():
    return make_tribonacci(1, 1, 1, 0, 1, 1)


PRESET_NAMES = ('tribonacci', 'tribonacci-lucas', 'padovan', 'fibonacci', 'lucas',
                'lstep:<l>', 'lstep-companion:<l>')


def preset(name):
    """
    Named sequence instances.

    :raises ValidationError: for unknown names
    """
    name = name.strip().lower()
    if name == 'tribonacci':
        return classical_tribonacci()
    if name == 'tribonacci-lucas':
        return make_tribonacci(1, 1, 1, 3, 1, 3)
    if name == 'padovan':
        return make_tribonacci(1, 0, 1, 0, 1, 1)
    if name == 'fibonacci':
        return make_lstep(2)
    if name == 'lucas':
        return make_lstep_companion(2)
    kind, _, l = name.partition(':')
    if kind == 'lstep' and l:
        return make_lstep(l)
    if kind == 'lstep-companion' and l:
        return make_lstep_companion(l)
    raise ValidationError('unknown preset {!r}; known presets: {}'.format(name, ', '.join(PRESET_NAMES)))

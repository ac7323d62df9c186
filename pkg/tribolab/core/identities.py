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
Exactly checkable identities for generalized Tribonacci and l-step sequences,
and the grid runner that sweeps them over parameter points.

Every checker returns a VerifyReport. A failing identity is a counterexample
report, never an exception; exceptions are reserved for malformed input.
"""

from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
import logging
import threading

from tribolab.common.exceptions import ArityError, ConfigError, ValidationError
from tribolab.common.utils import format_params, rational_to_str
from tribolab.core.arith import (DenseMatrix, HessenbergColumns, ToeplitzHessenbergMinors, det_dense,
                                  det_hessenberg, exact)
from tribolab.core.combinat import (PascalParam, alt_sign, bell_complete, bell_inverse_det,
                                    bell_via_det, binom, det_pascal_rowrev, pascal_rowrev,
                                    pascal_rowrev_inv)
from tribolab.core.sequences import (classical_tribonacci, handle_for, make_lstep,
                                     make_lstep_companion, make_tribonacci)
from tribolab.core.series import (SeriesTrunc, cameron_forward, cameron_inverse, gf_odd,
                                  series_exp, series_recip)

logger = logging.getLogger('tribolab')

IDENTITY_IDS = (
    'q_det_3x3',
    'addition_formula',
    'theorem1',
    'theorem2',
    'cor3_binom_inv',
    'cor4_cramer',
    'thm_det_t2n1',
    'cor_det_t2n1',
    'lemma_rel_2step',
    'lemma_gf_odd',
    'lemma_gf_recip',
    'r_recurrence',
    'lemma_cameron',
    'thm_bell_tribo',
    'cor_bell_tribo_inv',
    'thm_bell_lstep',
    'cor_bell_lstep_inv',
)

AS_STATED = 'as_stated'
DERIVATION_CONSISTENT = 'derivation_consistent'
VARIANTS = (AS_STATED, DERIVATION_CONSISTENT)

# identities whose printed statement disagrees with its own derivation
TYPO_IDS = ('theorem1', 'theorem2', 'cor3_binom_inv')

POLICY_DEFAULT = 'default'
POLICY_AS_STATED_ONLY = 'as_stated_only'
POLICY_BOTH = 'both'
VARIANT_POLICIES = (POLICY_DEFAULT, POLICY_AS_STATED_ONLY, POLICY_BOTH)

VERIFIED = 'verified'
COUNTEREXAMPLE = 'counterexample'
SKIPPED = 'skipped_precondition'
STATUSES = (VERIFIED, COUNTEREXAMPLE, SKIPPED)

PARAM_ORDER = ('u', 'v', 'w', 'l', 'm', 'n', 'k', 'i', 'j')


class VerifyReport(namedtuple('VerifyReport', 'id variant params status lhs rhs note')):
    """
    Outcome of one identity at one parameter point.

    ``lhs`` and ``rhs`` are only set on counterexamples.
    """

    __slots__ = ()

    def sort_key(self):
        return (self.id, self.variant, tuple(self.params.values()))

    def to_dict(self):
        params = {}
        for key, value in self.params.items():
            if isinstance(value, Fraction):
                value = rational_to_str(value)
            params[key] = value
        return {
            'id': self.id,
            'variant': self.variant,
            'params': params,
            'status': self.status,
            'lhs': rational_to_str(self.lhs),
            'rhs': rational_to_str(self.rhs),
            'note': self.note,
        }


def _params(**kwargs):
    return {key: kwargs[key] for key in PARAM_ORDER if key in kwargs}


def _skipped(ident, variant, params, note):
    return VerifyReport(ident, variant, params, SKIPPED, None, None, note)


def _compare(ident, variant, params, forms, note=''):
    """
    forms: (name, lhs, rhs) triples, all of which must balance.

    The first unbalanced form becomes the counterexample.
    """
    for name, lhs, rhs in forms:
        if lhs != rhs:
            text = '{}: lhs != rhs'.format(name)
            if note:
                text = '{}; {}'.format(note, text)
            return VerifyReport(ident, variant, params, COUNTEREXAMPLE,
                                Fraction(lhs), Fraction(rhs), text)
    text = ', '.join(name for name, _, _ in forms)
    if note:
        text = '{}; {}'.format(note, text)
    return VerifyReport(ident, variant, params, VERIFIED, None, None, text)


def _check_variant(ident, variant):
    if variant not in VARIANTS:
        raise ValidationError('unknown variant {!r}; expected one of {}'.format(
            variant, ', '.join(VARIANTS)))
    if variant != AS_STATED and ident not in TYPO_IDS:
        raise ValidationError('{} only has the {} variant'.format(ident, AS_STATED))


def _uvw(u, v, w):
    return Fraction(u), Fraction(v), Fraction(w)


def _tribo(u, v, w):
    """Handle of the (0, 1, 1)-initialised sequence with coefficients (u, v, w)"""
    return handle_for(make_tribonacci(u, v, w, 0, 1, 1))


def _backward_allowed(w, extend_backward):
    return extend_backward and w != 0


class RSequenceState(object):
    """
    Seeded recurrence for the coefficients r_n of 1 / sum T_{2n+1} t^n.

    r_n = d1 r_{n-1} + d2 r_{n-2} for n >= 4, with d1 = u^2 - u + v and
    d2 = w (u - 1). The closed root form is never used: its roots may be
    irrational or coincide.
    """

    def __init__(self, u, v, w):
        self.u, self.v, self.w = _uvw(u, v, w)
        u, v, w = self.u, self.v, self.w
        self.d1 = u * u - u + v
        self.d2 = w * (u - 1)
        r1 = -(u + v)
        r2 = u * u - u ** 3 - u * u * v - u * w - w
        r3 = self.d1 * r2 + self.d2 * r1 - w * w
        # r[0] = 1 is the constant term of the reciprocal series
        self._r = [Fraction(1), r1, r2, r3]
        self._lock = threading.Lock()

    def r(self, n):
        if n < 1:
            raise ValidationError('r_n is defined for n >= 1, got {}'.format(n))
        if n < len(self._r):
            return self._r[n]
        with self._lock:
            memo = self._r
            while len(memo) <= n:
                memo.append(self.d1 * memo[-1] + self.d2 * memo[-2])
        return self._r[n]


@lru_cache(maxsize=None)
def r_state(u, v, w):
    return RSequenceState(u, v, w)


def r_sequence(u, v, w, n):
    u, v, w = _uvw(u, v, w)
    return r_state(u, v, w).r(n)


@lru_cache(maxsize=None)
def _odd_series(u, v, w, bucket):
    return gf_odd(u, v, w, bucket)


@lru_cache(maxsize=None)
def _odd_recip(u, v, w, bucket):
    return series_recip(_odd_series(u, v, w, bucket))


def _bucket(order):
    # orders are rounded up so neighbouring grid points share one expansion
    return ((order + 31) // 32) * 32


def check_q_det(n, extend_backward=False):
    """det of the 3x3 Hankel block of classical Tribonacci values is -1"""
    ident = 'q_det_3x3'
    params = _params(n=n)
    note = ''
    if n < 2:
        if not extend_backward:
            return _skipped(ident, AS_STATED, params, 'needs n >= 2')
        note = 'backward extension'
    h = handle_for(classical_tribonacci())
    rows = [[h.term(n + 2 - r - c) for c in range(3)] for r in range(3)]
    det = det_dense(DenseMatrix.from_rows(rows))
    return _compare(ident, AS_STATED, params, [('3x3 determinant', det, -1)], note)


def check_addition(m, n, extend_backward=False):
    ident = 'addition_formula'
    params = _params(m=m, n=n)
    note = ''
    if n < 1 or m < 1:
        if not extend_backward:
            return _skipped(ident, AS_STATED, params, 'needs m >= 1 and n >= 1')
        note = 'backward extension'
    elif n < 2:
        # c_3 = 1, so T_{-1} = 0 always exists
        note = 'backward extension'
    t = handle_for(classical_tribonacci()).term
    rhs = (t(m + 1) * t(n) + t(m) * t(n - 1) + t(m) * t(n - 2) + t(m - 1) * t(n - 1))
    return _compare(ident, AS_STATED, params, [('addition formula', t(m + n), rhs)], note)


@lru_cache(maxsize=None)
def _theorem1_weights(u, v, w, k, variant):
    """
    Coefficients of T_{n-s} in both forms of theorem1: (s, coefficient) per
    (i, j) of the double sum, and one regrouped coefficient per s = i + j.
    """
    if variant == AS_STATED:
        alpha, beta = u * v, w / v

        def weight(i, j):
            return alpha ** i * beta ** j
    else:
        def weight(i, j):
            return u ** (k - i) * v ** (i - j) * w ** j

    double = tuple((i + j, exact(binom(k, i) * binom(i, j) * weight(i, j)))
                   for i in range(k + 1) for j in range(i + 1))
    regrouped = []
    for s in range(2 * k + 1):
        inner = Fraction(0)
        for i in range(s // 2, k + 1):
            # C(i, s - i) vanishes outside 0 <= s - i <= i
            c = binom(k, i) * binom(i, s - i)
            if c:
                inner += c * weight(i, s - i)
        regrouped.append(exact(inner))
    return double, tuple(regrouped)


def check_theorem1(u, v, w, n, k, variant=DERIVATION_CONSISTENT, extend_backward=False):
    """
    T_{n+k} as a double binomial sum over T_{n-i-j}.

    as_stated weights (uv)^i (w/v)^j; derivation_consistent weights
    u^(k-i) v^(i-j) w^j. Both are checked as a double sum over (i, j) and
    regrouped over s = i + j.
    """
    ident = 'theorem1'
    _check_variant(ident, variant)
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n, k=k)
    if k < 0:
        return _skipped(ident, variant, params, 'needs k >= 0')
    note = ''
    if n < 2 * k:
        if not _backward_allowed(w, extend_backward):
            return _skipped(ident, variant, params, 'needs n >= 2k')
        note = 'backward extension'
    if variant == AS_STATED and v == 0:
        return _skipped(ident, variant, params, 'needs v != 0')

    double, regrouped = _theorem1_weights(u, v, w, k, variant)
    t = _tribo(u, v, w).term
    values = [exact(t(n - s)) for s in range(2 * k + 1)]
    double_sum = sum(c * values[s] for s, c in double)
    regrouped_sum = sum(c * values[s] for s, c in enumerate(regrouped))
    lhs = exact(t(n + k))
    return _compare(ident, variant, params,
                    [('double sum', lhs, double_sum), ('regrouped sum', lhs, regrouped_sum)], note)


@lru_cache(maxsize=None)
def _theorem2_weights(u, v, w, i, variant):
    """
    (offset, coefficient) pairs applied to T_{n+offset}: the left-hand sum,
    the right-hand sum and, for derivation_consistent, row i of the inverse
    row-reversed Pascal matrix.
    """
    beta = w / v
    rhs = tuple((-i - s, exact(binom(i, s) * beta ** s)) for s in range(i + 1))
    if variant == AS_STATED:
        alpha = u * v
        lhs = tuple((i, exact(alpha ** -i * alt_sign(i - s) * binom(i, s))) for s in range(i + 1))
        return lhs, rhs, None
    alpha = v / u
    lhs = tuple((s, exact(alpha ** -i * alt_sign(i - s) * binom(i, s) / u ** s))
                for s in range(i + 1))
    inv = pascal_rowrev_inv(PascalParam(i, alpha))
    row = tuple((i - j, exact(inv[i, j] / u ** (i - j))) for j in range(i + 1))
    return lhs, rhs, row


def check_theorem2(u, v, w, n, i, variant=DERIVATION_CONSISTENT, extend_backward=False):
    """
    Alternating binomial sum of forward terms against a beta-weighted sum of
    backward terms, beta = w/v.

    as_stated takes the summand T_{n+i} with alpha = uv; derivation_consistent
    takes T_{n+t} u^(-t) with alpha = v/u, and is also checked against row i of
    the inverse row-reversed Pascal matrix.
    """
    ident = 'theorem2'
    _check_variant(ident, variant)
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n, i=i)
    if i < 0:
        return _skipped(ident, variant, params, 'needs i >= 0')
    if u == 0 or v == 0:
        return _skipped(ident, variant, params, 'needs u != 0 and v != 0')
    note = ''
    if n < 2 * i:
        if not _backward_allowed(w, extend_backward):
            return _skipped(ident, variant, params, 'needs n >= 2i')
        note = 'backward extension'
    t = _tribo(u, v, w).term

    def apply(weights):
        return sum(c * exact(t(n + offset)) for offset, c in weights)

    lhs_weights, rhs_weights, row_weights = _theorem2_weights(u, v, w, i, variant)
    lhs, rhs = apply(lhs_weights), apply(rhs_weights)
    if variant == AS_STATED:
        return _compare(ident, variant, params, [('stated sum', lhs, rhs)], note)
    return _compare(ident, variant, params,
                    [('reindexed sum', lhs, rhs), ('inverse Pascal row', apply(row_weights), rhs)],
                    note)


def check_cor3(j, variant=DERIVATION_CONSISTENT):
    """
    Binomial inversion of the alpha = beta = 1 case of theorem2 at n = 2u:
    T_j recovered from the sums of T_{2u+t}. Both variants coincide here.
    """
    ident = 'cor3_binom_inv'
    _check_variant(ident, variant)
    params = _params(j=j)
    if j < 0:
        return _skipped(ident, variant, params, 'needs j >= 0')
    t = handle_for(classical_tribonacci()).term
    nested = Fraction(0)
    for u in range(j + 1):
        inner = sum((alt_sign(u - s) * binom(u, s) * t(2 * u + s) for s in range(u + 1)), 0)
        nested += alt_sign(j - u) * binom(j, u) * inner
    swapped = Fraction(0)
    for s in range(j + 1):
        inner = sum((binom(j - s, u - s) * t(2 * u + s) for u in range(s, j + 1)), 0)
        swapped += alt_sign(j - s) * binom(j, s) * inner
    return _compare(ident, variant, params,
                    [('nested sums', t(j), nested), ('swapped sums', t(j), swapped)])


def check_cor4_cramer(n, k, i):
    """
    x_i = sum_j C(i, j) T_{n-i-j} solves the row-reversed Pascal system with
    right-hand side (T_{n+k}, ..., T_n); compare against Cramer's rule.
    """
    ident = 'cor4_cramer'
    params = _params(n=n, k=k, i=i)
    if k < 0 or not 0 <= i <= k:
        return _skipped(ident, AS_STATED, params, 'needs 0 <= i <= k')
    if n < 2 * k:
        return _skipped(ident, AS_STATED, params, 'needs n >= 2k')
    t = handle_for(classical_tribonacci()).term
    lhs = sum((binom(i, j) * t(n - i - j) for j in range(i + 1)), Fraction(0))
    sign = det_pascal_rowrev(k)
    b = pascal_rowrev(PascalParam(k, 1)).replace_column(i, [t(n + k - r) for r in range(k + 1)])
    cramer = sign * det_dense(b)
    swapped = sign * alt_sign(i) * det_dense(b.move_column_first(i))
    return _compare(ident, AS_STATED, params,
                    [('Cramer determinant', lhs, cramer), ('column-swapped determinant', lhs, swapped)])


def check_r_recurrence(u, v, w, n):
    """Seeded r_n against r_n = -sum_{k<n} T_{2(n-k)+1} r_k"""
    ident = 'r_recurrence'
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n)
    if n < 1:
        return _skipped(ident, AS_STATED, params, 'needs n >= 1')
    t = _tribo(u, v, w).term
    r = [Fraction(1)] + [r_sequence(u, v, w, m) for m in range(1, n + 1)]
    conv = -sum((t(2 * (n - k) + 1) * r[k] for k in range(n)), Fraction(0))
    return _compare(ident, AS_STATED, params, [('convolution', r[n], conv)])


@lru_cache(maxsize=None)
def _t2n1_minors(u, v, w):
    state = r_state(u, v, w)
    return ToeplitzHessenbergMinors(lambda d: -alt_sign(d) * state.r(d + 1))


@lru_cache(maxsize=None)
def _odd_minors(u, v, w):
    t = _tribo(u, v, w).term
    return ToeplitzHessenbergMinors(lambda d: t(2 * d + 3))


@lru_cache(maxsize=None)
def _t2n1_cameron(u, v, w, bucket):
    state = r_state(u, v, w)
    return cameron_forward(SeriesTrunc([0] + [-state.r(m) for m in range(1, bucket)]))


@lru_cache(maxsize=None)
def _odd_cameron(u, v, w, bucket):
    t = _tribo(u, v, w).term
    return cameron_inverse(SeriesTrunc([0] + [t(2 * m + 1) for m in range(1, bucket)]))


def t2n1_determinant(u, v, w, n):
    """
    Toeplitz-Hessenberg determinant with (-1)^(d+1) r_{d+1} on the d-th
    subdiagonal and 1 above; equals T_{2n+1}.

    All orders of one (u, v, w) share a single table of leading minors.
    """
    u, v, w = _uvw(u, v, w)
    return _t2n1_minors(u, v, w).minor(n)


def odd_terms_determinant(u, v, w, n):
    """Toeplitz-Hessenberg determinant over T_3, T_5, ..., T_{2n+1}; equals (-1)^n r_n"""
    u, v, w = _uvw(u, v, w)
    return _odd_minors(u, v, w).minor(n)


def check_thm_det_t2n1(u, v, w, n):
    ident = 'thm_det_t2n1'
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n)
    if n < 1:
        return _skipped(ident, AS_STATED, params, 'needs n >= 1')
    det = t2n1_determinant(u, v, w, n)
    z = _t2n1_cameron(u, v, w, _bucket(n + 1))
    lhs = _tribo(u, v, w).term(2 * n + 1)
    return _compare(ident, AS_STATED, params,
                    [('Hessenberg determinant', lhs, det), ('Cameron series', lhs, z[n])])


def check_cor_det_t2n1(u, v, w, n):
    ident = 'cor_det_t2n1'
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n)
    if n < 1:
        return _skipped(ident, AS_STATED, params, 'needs n >= 1')
    det = odd_terms_determinant(u, v, w, n)
    x = _odd_cameron(u, v, w, _bucket(n + 1))
    rhs = alt_sign(n) * r_sequence(u, v, w, n)
    return _compare(ident, AS_STATED, params,
                    [('Hessenberg determinant', det, rhs),
                     ('Cameron inverse', alt_sign(n - 1) * x[n], rhs)])


def check_lemma_rel2step(u, v, w, n):
    """T_n from T_{n-2}, T_{n-4} and T_{n-6}"""
    ident = 'lemma_rel_2step'
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n)
    if n < 6:
        return _skipped(ident, AS_STATED, params, 'needs n >= 6')
    t = _tribo(u, v, w).term
    rhs = (u * u + 2 * v) * t(n - 2) - (v * v - 2 * u * w) * t(n - 4) + w * w * t(n - 6)
    return _compare(ident, AS_STATED, params, [('bisection recurrence', t(n), rhs)])


def check_lemma_gf_odd(u, v, w, n):
    ident = 'lemma_gf_odd'
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n)
    if n < 0:
        return _skipped(ident, AS_STATED, params, 'needs n >= 0')
    coeff = _odd_series(u, v, w, _bucket(n + 1))[n]
    return _compare(ident, AS_STATED, params,
                    [('odd-index generating function', coeff, _tribo(u, v, w).term(2 * n + 1))])


def check_lemma_gf_recip(u, v, w, n):
    ident = 'lemma_gf_recip'
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n)
    if n < 1:
        return _skipped(ident, AS_STATED, params, 'needs n >= 1')
    coeff = _odd_recip(u, v, w, _bucket(n + 1))[n]
    return _compare(ident, AS_STATED, params,
                    [('reciprocal series', coeff, r_sequence(u, v, w, n))])


def check_lemma_cameron(x, n, params=None):
    """
    z_n of (1 - sum x_m t^m)^(-1) against the n x n Hessenberg determinant
    with (-1)^d x_{d+1} on the d-th subdiagonal and 1 above.

    :param x: x_1, x_2, ...
    """
    ident = 'lemma_cameron'
    x = [Fraction(c) for c in x]
    if params is None:
        params = _params(n=n)
    if n < 1:
        return _skipped(ident, AS_STATED, params, 'needs n >= 1')
    if n > len(x):
        raise ArityError('order {} needs {} x values, got {}'.format(n, n, len(x)))
    det = det_hessenberg(HessenbergColumns.toeplitz([alt_sign(d) * x[d] for d in range(n)], 1, n))
    z = cameron_forward(SeriesTrunc([0] + x[:n]))
    return _compare(ident, AS_STATED, params, [('Hessenberg determinant', z[n], det)])


def _check_lemma_cameron_uvw(u, v, w, n):
    # grid form: x = (u, v, w, 0, 0, ...)
    u, v, w = _uvw(u, v, w)
    x = ([u, v, w] + [0] * n)[:max(n, 3)]
    return check_lemma_cameron(x, n, _params(u=u, v=v, w=w, n=n))


def _bell_routes(ident, params, a, b, n, with_inverse):
    """
    b_{n+1} against Y_n(a_1, 1! a_2, ..., (n-1)! a_n) / n!, the Hessenberg
    determinant and the exp(sum a_m t^m / m) series.
    """
    av = a.terms(1, n)
    lhs = b.term(n + 1)
    xs = [factorial(m - 1) * av[m - 1] for m in range(1, n + 1)]
    expo = series_exp(SeriesTrunc([0] + [av[m - 1] / m for m in range(1, n + 1)]))
    forms = [
        ('Bell polynomial', lhs, bell_complete(xs, n) / factorial(n)),
        ('Hessenberg determinant', lhs, bell_via_det(av, n)),
        ('exponential series', lhs, expo[n]),
    ]
    if with_inverse:
        forms.append(('inverse determinant', av[n - 1], bell_inverse_det(b.terms(2, n + 1), n)))
    return _compare(ident, AS_STATED, params, forms)


def bell_tribo_sequences(u, v, w):
    """Handles of the (3, u, u^2+2v) and (0, 1, u) sequences with coefficients (u, v, w)"""
    u, v, w = _uvw(u, v, w)
    a = handle_for(make_tribonacci(u, v, w, 3, u, u * u + 2 * v))
    b = handle_for(make_tribonacci(u, v, w, 0, 1, u))
    return a, b


def check_thm_bell_tribo(u, v, w, n):
    """(0, 1, u) term n+1 from the (3, u, u^2+2v) terms through Bell polynomials"""
    ident = 'thm_bell_tribo'
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n)
    if n < 1:
        return _skipped(ident, AS_STATED, params, 'needs n >= 1')
    a, b = bell_tribo_sequences(u, v, w)
    return _bell_routes(ident, params, a, b, n, with_inverse=False)


def check_cor_bell_tribo_inv(u, v, w, n):
    ident = 'cor_bell_tribo_inv'
    u, v, w = _uvw(u, v, w)
    params = _params(u=u, v=v, w=w, n=n)
    if n < 1:
        return _skipped(ident, AS_STATED, params, 'needs n >= 1')
    a, b = bell_tribo_sequences(u, v, w)
    return _compare(ident, AS_STATED, params,
                    [('inverse determinant', a.term(n), bell_inverse_det(b.terms(2, n + 1), n))])


def bell_lstep_sequences(l):
    return handle_for(make_lstep_companion(l)), handle_for(make_lstep(l))


def check_thm_bell_lstep(l, n):
    """F_{n+1} from the companion sequence through Bell polynomials, and back"""
    ident = 'thm_bell_lstep'
    params = _params(l=l, n=n)
    if l < 2 or n < 1:
        return _skipped(ident, AS_STATED, params, 'needs l >= 2 and n >= 1')
    a, b = bell_lstep_sequences(l)
    return _bell_routes(ident, params, a, b, n, with_inverse=True)


def check_cor_bell_lstep_inv(l, n):
    ident = 'cor_bell_lstep_inv'
    params = _params(l=l, n=n)
    if l < 2 or n < 1:
        return _skipped(ident, AS_STATED, params, 'needs l >= 2 and n >= 1')
    a, b = bell_lstep_sequences(l)
    return _compare(ident, AS_STATED, params,
                    [('inverse determinant', a.term(n), bell_inverse_det(b.terms(2, n + 1), n))])


def _triples(lo, hi):
    return tuple(tuple(Fraction(c) for c in t) for t in product(range(lo, hi + 1), repeat=3) if any(t))


UVW_GRID = _triples(-2, 3)
BELL_UVW_GRID = _triples(-1, 2)


# axes are (symbol, default) pairs in iteration order; a default is a range
# or a callable mapping the partial point to one
IdentityEntry = namedtuple('IdentityEntry', 'id checker axes typo backward')

CATALOG = {entry.id: entry for entry in (
    IdentityEntry('q_det_3x3', check_q_det, (('n', range(2, 31)),), False, True),
    IdentityEntry('addition_formula', check_addition,
                  (('m', range(1, 26)), ('n', range(1, 26))), False, True),
    IdentityEntry('theorem1', check_theorem1,
                  (('uvw', UVW_GRID), ('k', range(0, 13)),
                   ('n', lambda p: range(2 * p['k'], 41))), True, True),
    IdentityEntry('theorem2', check_theorem2,
                  (('uvw', UVW_GRID), ('i', range(0, 13)),
                   ('n', lambda p: range(2 * p['i'], 41))), True, True),
    IdentityEntry('cor3_binom_inv', check_cor3, (('j', range(0, 13)),), True, False),
    IdentityEntry('cor4_cramer', check_cor4_cramer,
                  (('k', range(0, 9)), ('i', lambda p: range(0, p['k'] + 1)),
                   ('n', lambda p: range(2 * p['k'], 2 * p['k'] + 7))), False, False),
    IdentityEntry('thm_det_t2n1', check_thm_det_t2n1,
                  (('uvw', UVW_GRID), ('n', range(1, 41))), False, False),
    IdentityEntry('cor_det_t2n1', check_cor_det_t2n1,
                  (('uvw', UVW_GRID), ('n', range(1, 41))), False, False),
    IdentityEntry('lemma_rel_2step', check_lemma_rel2step,
                  (('uvw', UVW_GRID), ('n', range(6, 41))), False, False),
    IdentityEntry('lemma_gf_odd', check_lemma_gf_odd,
                  (('uvw', UVW_GRID), ('n', range(0, 32))), False, False),
    IdentityEntry('lemma_gf_recip', check_lemma_gf_recip,
                  (('uvw', UVW_GRID), ('n', range(1, 32))), False, False),
    IdentityEntry('r_recurrence', check_r_recurrence,
                  (('uvw', UVW_GRID), ('n', range(1, 41))), False, False),
    IdentityEntry('lemma_cameron', _check_lemma_cameron_uvw,
                  (('uvw', UVW_GRID), ('n', range(1, 21))), False, False),
    IdentityEntry('thm_bell_tribo', check_thm_bell_tribo,
                  (('uvw', BELL_UVW_GRID), ('n', range(1, 26))), False, False),
    IdentityEntry('cor_bell_tribo_inv', check_cor_bell_tribo_inv,
                  (('uvw', BELL_UVW_GRID), ('n', range(1, 26))), False, False),
    IdentityEntry('thm_bell_lstep', check_thm_bell_lstep,
                  (('l', range(2, 8)), ('n', range(1, 31))), False, False),
    IdentityEntry('cor_bell_lstep_inv', check_cor_bell_lstep_inv,
                  (('l', range(2, 8)), ('n', range(1, 31))), False, False),
)}


def entry_for(ident):
    try:
        return CATALOG[ident]
    except KeyError:
        raise ConfigError('unknown identity {!r}; known identities: {}'.format(
            ident, ', '.join(IDENTITY_IDS)))


def symbols_for(ident):
    return tuple(symbol for symbol, _ in entry_for(ident).axes)


def grid_points(ident, grid=None):
    """
    Parameter points of one identity, configured axes overriding defaults.

    :param grid: symbol -> values; the key 'uvw' holds (u, v, w) triples
    """
    grid = grid or {}
    axes = entry_for(ident).axes

    def walk(index, point):
        if index == len(axes):
            yield dict(point)
            return
        symbol, default = axes[index]
        values = grid.get(symbol)
        if values is None:
            values = default(point) if callable(default) else default
        for value in values:
            if symbol == 'uvw':
                point.update(zip('uvw', value))
            else:
                point[symbol] = value
            yield from walk(index + 1, point)

    return walk(0, {})


def variants_for(ident, policy):
    if policy not in VARIANT_POLICIES:
        raise ConfigError('unknown variant policy {!r}; expected one of {}'.format(
            policy, ', '.join(VARIANT_POLICIES)))
    if ident not in TYPO_IDS:
        return (AS_STATED,)
    if policy == POLICY_AS_STATED_ONLY:
        return (AS_STATED,)
    return (DERIVATION_CONSISTENT, AS_STATED)


def is_informational(ident, variant):
    """as_stated outcomes of disputed identities never count as primary"""
    return ident in TYPO_IDS and variant == AS_STATED


def run_check(ident, variant, point, extend_backward=False):
    entry = entry_for(ident)
    kwargs = dict(point)
    if entry.typo:
        kwargs['variant'] = variant
    if entry.backward:
        kwargs['extend_backward'] = extend_backward
    report = entry.checker(**kwargs)
    logger.verbose('{} [{}] {}: {}'.format(ident, variant, format_params(report.params),
                                           report.status))
    return report


def run_grid(config):
    """
    Runs every configured identity over its parameter grid.

    :param config: a GridConfig
    :return: reports sorted by identity, variant and parameter values
    """
    tasks = []
    for ident in config.suites:
        points = list(grid_points(ident, config.grid))
        variants = variants_for(ident, config.variant)
        logger.info('{}: {} points x {} variant(s)'.format(ident, len(points), len(variants)))
        for variant in variants:
            tasks.extend((ident, variant, point) for point in points)

    def work(task):
        return run_check(task[0], task[1], task[2], config.extend_backward)

    if config.threads > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            reports = list(pool.map(work, tasks))
    else:
        reports = [work(task) for task in tasks]
    reports.sort(key=VerifyReport.sort_key)
    for report in reports:
        if report.status == COUNTEREXAMPLE:
            logger.warning('counterexample{}: {} [{}] {}: lhs={} rhs={}'.format(
                ' (informational)' if is_informational(report.id, report.variant) else '',
                report.id, report.variant, format_params(report.params),
                rational_to_str(report.lhs), rational_to_str(report.rhs)))
    return reports

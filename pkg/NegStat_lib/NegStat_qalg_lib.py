#!/usr/bin/env python3
"""
========
Overview
========
Python3 library of exact q-analog arithmetic for NegStat.

TruncatedSeries is a power series in the variables u, t, q, p with integer
coefficients, held as an element of the sympy ring ZZ[u,t,q,p]. Each
variable may carry a cap; arithmetic is exact modulo the ideal generated by
v^(cap+1), so a series with all caps set behaves like a finite jet. A
variable without a cap is only allowed where the object is a genuine
polynomial.

Terms beyond a cap are never stored.

=========
Changelog
=========
v1.1 20261019
 - Series arithmetic on sympy PolyElement, exact division by exquo
v1.0 20261019
 - Original implementation
"""
import math
from typing import NamedTuple

from sympy.polys.domains import ZZ
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.rings import ring


VARS = ('u', 't', 'q', 'p')
INF = math.inf
_ZERO = (0, 0, 0, 0)

R = ring(','.join(VARS), ZZ)[0]


class SeriesError(ArithmeticError):
    """Operation without an exact result modulo the truncation ideal."""


class CapError(ArithmeticError):
    """An exponent exceeds the cap requested by the caller."""


#%%
class Monomial(NamedTuple):
    u: int = 0
    t: int = 0
    q: int = 0
    p: int = 0


def mono_mul(a, b):
    return R.monomial_mul(tuple(a), tuple(b))


def mono_pow(a, k):
    return R.monomial_pow(tuple(a), k)


def make_caps(caps=None):
    """
    Normalise caps given as None, a dict {'q': 10, ...} or a 4-tuple in
    (u, t, q, p) order. Missing variables are uncapped (None).
    """
    if caps is None:
        return (None, None, None, None)
    if isinstance(caps, dict):
        unknown = set(caps) - set(VARS)
        if unknown:
            raise ValueError('unknown variable(s) {} (use {})'.format(
                ','.join(sorted(unknown)), ','.join(VARS)))
        caps = tuple(caps.get(v) for v in VARS)
    caps = tuple(None if c is None else int(c) for c in caps)
    if len(caps) != 4:
        raise ValueError('caps need 4 entries (u, t, q, p)')
    for v, c in zip(VARS, caps):
        if c is not None and c < 0:
            raise ValueError('cap of {} must be non-negative'.format(v))
    return caps


def caps_to_dict(caps):
    return {v: c for v, c in zip(VARS, caps) if c is not None}


def meet_caps(caps1, caps2):
    return tuple(b if a is None else a if b is None else min(a, b)
                 for a, b in zip(caps1, caps2))


def _within(e, caps):
    for x, c in zip(e, caps):
        if c is not None and x > c:
            return False
    return True


def poly_trunc(poly, caps):
    """
    Drop the terms of a ZZ[u,t,q,p] element beyond any cap.
    """
    if all(c is None for c in caps):
        return poly
    p = R.zero
    for e, c in poly.items():
        if _within(e, caps):
            p[e] = c
    return p


#%%
class TruncatedSeries:
    """
    Integer power series in u, t, q, p modulo per-variable caps.
    """
    __slots__ = ('poly', 'caps')

    def __init__(self, terms=None, caps=None):
        caps = make_caps(caps)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != 4 or min(e) < 0:
                raise ValueError('exponent vector {} must have 4 non-negative entries'.format(e))
            if _within(e, caps):
                clean[e] = clean.get(e, 0) + int(c)
        self.poly = R.from_dict(clean)
        self.caps = caps

    @classmethod
    def _raw(cls, poly, caps):
        obj = cls.__new__(cls)
        obj.poly = poly
        obj.caps = caps
        return obj

    def __reduce__(self):
        return (TruncatedSeries, (self.terms, self.caps))

    #%% Constructors
    @classmethod
    def constant(cls, c, caps=None):
        return cls({_ZERO: c}, caps)

    @classmethod
    def one(cls, caps=None):
        return cls.constant(1, caps)

    @classmethod
    def zero(cls, caps=None):
        return cls({}, caps)

    @classmethod
    def monomial(cls, mono, coeff=1, caps=None):
        return cls({tuple(mono): coeff}, caps)

    #%% Ring operations
    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries.constant(other, self.caps)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        caps = meet_caps(self.caps, other.caps)
        return TruncatedSeries._raw(poly_trunc(self.poly + other.poly, caps), caps)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries._raw(-self.poly, self.caps)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries._raw(self.poly * other, self.caps)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        caps = meet_caps(self.caps, other.caps)
        prod = poly_trunc(self.poly, caps) * poly_trunc(other.poly, caps)
        return TruncatedSeries._raw(poly_trunc(prod, caps), caps)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = TruncatedSeries.one(self.caps)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        caps = meet_caps(self.caps, other.caps)
        return poly_trunc(self.poly, caps) == poly_trunc(other.poly, caps)

    __hash__ = None

    #%% Access
    @property
    def terms(self):
        """{(e_u, e_t, e_q, e_p): int}"""
        return {e: int(c) for e, c in self.poly.items()}

    def coeff(self, mono):
        return int(self.poly.get(tuple(mono), 0))

    @property
    def constant_term(self):
        return self.coeff(_ZERO)

    @property
    def is_zero(self):
        return not self.poly

    def __len__(self):
        return len(self.poly)

    def items(self):
        """Terms sorted by exponent vector (u, t, q, p)."""
        return sorted(self.terms.items())

    def degree(self, var):
        """Degree in var; 0 if var is absent, -1 for the zero series."""
        if not self.poly:
            return -1
        return int(self.poly.degree(R.gens[VARS.index(var)]))

    def variables(self):
        return [v for v in VARS if self.degree(v) > 0]

    def truncate(self, caps):
        caps = meet_caps(self.caps, make_caps(caps))
        return TruncatedSeries._raw(poly_trunc(self.poly, caps), caps)

    def shift(self, mono, coeff=1):
        """Multiply by coeff * monomial."""
        return self * TruncatedSeries.monomial(mono, coeff, self.caps)

    def specialize(self, var, value=1):
        """Substitute var = value (an integer); the cap of var is dropped."""
        ix = VARS.index(var)
        caps = self.caps[:ix] + (None,) + self.caps[ix+1:]
        return TruncatedSeries._raw(self.poly.subs(R.gens[ix], value), caps)

    def swap(self, var1, var2):
        """Exchange the exponents (and caps) of two variables."""
        i, j = VARS.index(var1), VARS.index(var2)

        def _sw(x):
            x = list(x)
            x[i], x[j] = x[j], x[i]
            return tuple(x)
        return TruncatedSeries._raw(R.from_dict({_sw(e): c for e, c in self.poly.items()}),
                                    _sw(self.caps))

    def invert(self):
        """
        Inverse modulo the truncation ideal; needs constant term +-1 and a
        cap on every variable present.
        """
        c0 = self.constant_term
        if c0 not in (1, -1):
            raise SeriesError('cannot invert a series with constant term {}'.format(c0))
        h = self - c0
        for v in h.variables():
            if self.caps[VARS.index(v)] is None:
                raise SeriesError('inverse is not a polynomial: set a cap on {}'.format(v))
        ## 1/(c0 + h) = c0 * sum_k (-c0*h)^k, nilpotent under the caps
        g = h * (-c0)
        result = TruncatedSeries.one(self.caps)
        power = TruncatedSeries.one(self.caps)
        while True:
            power = power * g
            if power.is_zero:
                break
            result = result + power
        return result * c0

    #%% Output
    def to_json_obj(self):
        """Canonical form: caps and terms sorted by exponent vector."""
        return {'caps': caps_to_dict(self.caps),
                'terms': [{'exponents': {v: x for v, x in zip(VARS, e) if x},
                           'coefficient': str(c)} for e, c in self.items()]}

    def __repr__(self):
        return 'TruncatedSeries({}, caps={})'.format(str(self), caps_to_dict(self.caps))

    def __str__(self):
        if not self.poly:
            return '0'
        out = ''
        for e, c in self.items():
            mono = '*'.join(v if x == 1 else '{}^{}'.format(v, x)
                            for v, x in zip(VARS, e) if x)
            sign = '-' if c < 0 else '+'
            c = abs(c)
            if not mono:
                body = str(c)
            elif c == 1:
                body = mono
            else:
                body = '{}*{}'.format(c, mono)
            if not out:
                out = ('-' if sign == '-' else '') + body
            else:
                out += ' {} {}'.format(sign, body)
        return out


#%% Ring wrappers
def series_add(f, g):
    return f + g


def series_mul(f, g):
    return f * g


def series_invert(f):
    return f.invert()


def series_coeff(f, mono):
    return f.coeff(mono)


def series_prod(factors, caps=None):
    result = TruncatedSeries.one(caps)
    for f in factors:
        result = result * f
    return result


def term(coeff=1, caps=None, **exps):
    """Single term, e.g. term(-1, p=1, q=1) = -pq."""
    return TruncatedSeries.monomial(Monomial(**exps), coeff, caps)


def series_divide_exact(num, den):
    """
    Exact polynomial division num/den in ZZ[u,t,q,p]; raises SeriesError on
    a nonzero remainder.
    """
    if den.is_zero:
        raise ZeroDivisionError('division by the zero polynomial')
    try:
        quot = num.poly.exquo(den.poly)
    except ExactQuotientFailed:
        raise SeriesError('nonzero remainder in exact division of {} by {}'.format(num, den))
    caps = meet_caps(num.caps, den.caps)
    return TruncatedSeries._raw(poly_trunc(quot, caps), caps)


#%% q-analogs
def q_int(n, var='q', caps=None):
    """[n]_q = 1 + q + ... + q^(n-1)."""
    ix = VARS.index(var)
    terms = {}
    for i in range(n):
        e = [0, 0, 0, 0]
        e[ix] = i
        terms[tuple(e)] = 1
    return TruncatedSeries(terms, caps)


def q_factorial(n, var='q', caps=None):
    return series_prod((q_int(i, var, caps) for i in range(1, n+1)), caps)


def q_binomial(n, m, var='q', caps=None):
    """
    Gaussian coefficient by the recurrence [n,m] = [n-1,m-1] + q^m [n-1,m].
    """
    if not 0 <= m <= n:
        raise ValueError('q_binomial needs 0 <= m <= n (got n={}, m={})'.format(n, m))
    ix = VARS.index(var)
    row = [TruncatedSeries.one(caps)]
    for k in range(1, n+1):
        new = [TruncatedSeries.one(caps)]
        for j in range(1, k):
            e = [0, 0, 0, 0]
            e[ix] = j
            new.append(row[j-1] + row[j].shift(e))
        new.append(TruncatedSeries.one(caps))
        row = new
    return row[m]


def q_multinomial(n, parts, var='q', caps=None):
    parts = [int(x) for x in parts]
    if any(x < 0 for x in parts) or sum(parts) != n:
        raise ValueError('parts {} must be non-negative and sum to {}'.format(parts, n))
    result = TruncatedSeries.one(caps)
    remaining = n
    for x in parts:
        result = result * q_binomial(remaining, x, var, caps)
        remaining -= x
    return result


#%% Pochhammer symbols and q-exponential
def _single_term(a):
    if len(a.terms) != 1:
        raise SeriesError('Pochhammer argument must be a single signed monomial, got {}'.format(a))
    (e, c), = a.terms.items()
    return e, c


def pochhammer(a, base, n, caps=None):
    """
    (a;base)_n = (1-a)(1-a*base)...(1-a*base^(n-1)), (a;base)_0 = 1.

    Inputs:
      a    : single-term TruncatedSeries (e.g. term(-1, p=1, q=1) for -pq)
      base : Monomial
      n    : non-negative integer
    """
    caps = meet_caps(make_caps(caps), a.caps)
    e, c = _single_term(a)
    result = TruncatedSeries.one(caps)
    for i in range(n):
        m = mono_mul(e, mono_pow(tuple(base), i))
        if not _within(m, caps):
            break
        result = result * TruncatedSeries({_ZERO: 1, m: -c}, caps)
    return result


def double_pochhammer(a, r, s, caps=None):
    """
    (a;t,q)_{r,s} = prod_{1<=i<=r} prod_{1<=j<=s} (1 - a t^(i-1) q^(j-1)),
    equal to 1 if r or s is zero; r, s may be INF when t (resp. q) is capped.
    Factors beyond the caps are congruent to 1 and are skipped.
    """
    caps = meet_caps(make_caps(caps), a.caps)
    if r == 0 or s == 0:
        return TruncatedSeries.one(caps)
    if r == INF and caps[1] is None:
        raise SeriesError('(a;t,q)_{inf,s} needs a cap on t')
    if s == INF and caps[2] is None:
        raise SeriesError('(a;t,q)_{r,inf} needs a cap on q')
    e, c = _single_term(a)
    r_max = caps[1] - e[1] + 1 if r == INF else int(r)
    s_max = caps[2] - e[2] + 1 if s == INF else int(s)
    result = TruncatedSeries.one(caps)
    for i in range(r_max):
        for j in range(s_max):
            m = (e[0], e[1] + i, e[2] + j, e[3])
            if _within(m, caps):
                result = result * TruncatedSeries({_ZERO: 1, m: -c}, caps)
    return result


def q_exponential(arg, caps):
    """
    e[arg]_q = sum_n arg^n / [n]_q!, arg a Monomial of positive u-degree,
    truncated at the u- and q-caps.
    """
    caps = make_caps(caps)
    arg = tuple(arg)
    if arg[0] < 1:
        raise SeriesError('q-exponential argument must have positive u-degree')
    if caps[0] is None or caps[2] is None:
        raise SeriesError('q-exponential needs caps on u and q')
    result = TruncatedSeries.zero(caps)
    for k in range(caps[0] // arg[0] + 1):
        m = mono_pow(arg, k)
        if not _within(m, caps):
            break
        result = result + q_factorial(k, 'q', caps).invert().shift(m)
    return result

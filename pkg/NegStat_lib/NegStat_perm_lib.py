#!/usr/bin/env python3
"""
========
Overview
========
Python3 library of signed permutation functions for NegStat.

A signed permutation b of [-n,n]\\{0} is stored by its window
[b(1),...,b(n)]; the rest of the map follows from b(-i) = -b(i).
Every statistic used by the descent class and q-series code is computed
here, both per element (statistics) and batched over numpy arrays of
windows (statistics_array).

=========
Changelog
=========
v1.0 20261019
 - Original implementation
"""
import itertools
import re
from typing import NamedTuple

import numpy as np


STAT_KEYS = ('inv', 'maj', 'des', 'len_B', 'len_D', 'nmaj', 'ndes',
             'dmaj', 'ddes', 'fmaj', 'n1', 'n2')


class WindowError(ValueError):
    """Invalid window or incompatible ranks."""


class DescentSetError(ValueError):
    """Invalid descent set."""


#%%
class SignedPermutation:
    """
    Immutable signed permutation given by its window.

    Instances compare and sort lexicographically on (n, window).
    """
    __slots__ = ('window', 'n')

    def __init__(self, window, check=True):
        window = tuple(int(v) for v in window)
        if check:
            _check_window(window)
        object.__setattr__(self, 'window', window)
        object.__setattr__(self, 'n', len(window))

    def __setattr__(self, name, value):
        raise AttributeError('SignedPermutation is immutable')

    def __call__(self, i):
        if i > 0:
            return self.window[i-1]
        elif i < 0:
            return -self.window[-i-1]
        raise WindowError('0 is not in the domain of a signed permutation')

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.window)

    def __getitem__(self, ix):
        return self.window[ix]

    def __eq__(self, other):
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __lt__(self, other):
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return (self.n, self.window) < (other.n, other.window)

    def __repr__(self):
        return 'SignedPermutation({})'.format(format_window(self))

    def __str__(self):
        return format_window(self)

    def __getstate__(self):
        return self.window

    def __setstate__(self, window):
        object.__setattr__(self, 'window', window)
        object.__setattr__(self, 'n', len(window))


def _check_window(window):
    n = len(window)
    if n == 0:
        raise WindowError('empty window')
    seen = {}
    for pos, v in enumerate(window, 1):
        if v == 0:
            raise WindowError('zero entry at position {}'.format(pos))
        if abs(v) > n:
            raise WindowError('entry {} at position {} is out of range [-{},{}]'.format(v, pos, n, n))
        if abs(v) in seen:
            raise WindowError('entry {} at position {} repeats absolute value {} (position {})'.format(
                v, pos, abs(v), seen[abs(v)]))
        seen[abs(v)] = pos


#%%
class DescentSet:
    """
    Sorted subset M = {m_1 < ... < m_t} of [0, n-1], with m_{t+1} := n.
    """
    __slots__ = ('n', 'members')

    def __init__(self, n, members=()):
        members = tuple(sorted(set(int(m) for m in members)))
        for m in members:
            if m < 0 or m > n-1:
                raise DescentSetError('descent {} is out of range [0,{}]'.format(m, n-1))
        object.__setattr__(self, 'n', int(n))
        object.__setattr__(self, 'members', members)

    def __setattr__(self, name, value):
        raise AttributeError('DescentSet is immutable')

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, m):
        return m in self.members

    def __eq__(self, other):
        if not isinstance(other, DescentSet):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __hash__(self):
        return hash((self.n, self.members))

    def __repr__(self):
        return 'DescentSet({}, {{{}}})'.format(self.n, str(self))

    def __str__(self):
        return ','.join(str(m) for m in self.members)

    def __getstate__(self):
        return (self.n, self.members)

    def __setstate__(self, state):
        object.__setattr__(self, 'n', state[0])
        object.__setattr__(self, 'members', state[1])

    @property
    def t(self):
        return len(self.members)

    def m(self, i):
        """1-based m_i, with m_{t+1} = n."""
        if i == self.t + 1:
            return self.n
        return self.members[i-1]

    @property
    def m1(self):
        """m_1, or n when M is empty."""
        return self.m(1)

    @property
    def m2(self):
        """Second smallest member, or n when |M| <= 1."""
        return self.m(2) if self.t >= 1 else self.n

    def parts(self):
        """Parts m_1, m_2-m_1, ..., n-m_t of the q-multinomial."""
        bounds = (0,) + self.members + (self.n,)
        return [bounds[i+1] - bounds[i] for i in range(len(bounds)-1)]

    def union(self, members):
        return DescentSet(self.n, self.members + tuple(members))

    def subsets(self):
        """All N subset of M, smallest first."""
        for k in range(self.t + 1):
            for comb in itertools.combinations(self.members, k):
                yield DescentSet(self.n, comb)


def parse_descent_set(text, n, allow_zero=True):
    """
    Parse "0,2,5" (empty string = empty set) into a DescentSet of rank n.
    """
    text = text.strip().strip('{}')
    members = []
    if text:
        for pos, token in enumerate(text.split(','), 1):
            token = token.strip()
            try:
                members.append(int(token))
            except ValueError:
                raise DescentSetError('descent set entry {} ("{}") is not an integer'.format(pos, token))
    if not allow_zero and 0 in members:
        raise DescentSetError('0 is not a descent of a permutation in S_n (use group B or D for Des_B/Des_D)')
    return DescentSet(n, members)


def all_descent_sets(n, allow_zero=True):
    """All subsets of [0,n-1] (or [1,n-1]) as DescentSets, by size."""
    lo = 0 if allow_zero else 1
    return list(DescentSet(n, []).union(range(lo, n)).subsets())


#%%
def parse_window(text):
    """
    Parse the bracketed window form "[-3,1,-6,2,-4,-5]".
    """
    text = text.strip()
    match = re.match(r'^\[(.*)\]$', text, re.S)
    if match is None:
        raise WindowError('window "{}" must be a bracketed comma list like [2,-1,3]'.format(text))
    body = match.group(1).strip()
    if not body:
        raise WindowError('empty window')
    values = []
    for pos, token in enumerate(body.split(','), 1):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise WindowError('entry "{}" at position {} is not an integer'.format(token, pos))
    return SignedPermutation(values)


def format_window(p):
    return '[' + ','.join(str(v) for v in p.window) + ']'


def identity(n):
    return SignedPermutation(range(1, n+1), check=False)


def generator(group, i, n):
    """
    Coxeter generator s_i of S_n (A), B_n or D_n in window notation.
    s_i = [1,..,i+1,i,..,n] for i >= 1; s_0^B = [-1,2,..,n];
    s_0^D = [-2,-1,3,..,n].
    """
    w = list(range(1, n+1))
    if i >= 1:
        w[i-1], w[i] = w[i], w[i-1]
    elif group == 'B':
        w[0] = -1
    elif group == 'D':
        w[0], w[1] = -2, -1
    else:
        raise WindowError('S_n has no generator s_0')
    return SignedPermutation(w, check=False)


def inverse(p):
    inv = [0]*p.n
    for pos, v in enumerate(p.window, 1):
        inv[abs(v)-1] = pos if v > 0 else -pos
    return SignedPermutation(inv, check=False)


def compose(p, q):
    """(p o q)(i) = p(q(i))."""
    if p.n != q.n:
        raise WindowError('rank mismatch: {} vs {}'.format(p.n, q.n))
    w = p.window
    return SignedPermutation([w[v-1] if v > 0 else -w[-v-1] for v in q.window], check=False)


def is_even_signed(p):
    return n1(p) % 2 == 0


#%% Single statistics
def n1(p):
    return sum(1 for v in p.window if v < 0)


def n2(p):
    w = p.window
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] + w[j] < 0)


def inv(p):
    w = p.window
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


def des_positions(p):
    w = p.window
    return [i for i in range(1, len(w)) if w[i-1] > w[i]]


def maj(p):
    return sum(des_positions(p))


def des_B_positions(p):
    """Des_B with b(0) := 0."""
    return ([0] if p.window[0] < 0 else []) + des_positions(p)


def des_D_positions(p):
    """Des_D with g(0) := -g(2); empty for n = 1."""
    w = p.window
    if len(w) < 2:
        return []
    return ([0] if -w[1] > w[0] else []) + des_positions(p)


def descent_positions(p, flavor):
    if flavor == 'Des':
        return des_positions(p)
    elif flavor == 'Des_B':
        return des_B_positions(p)
    elif flavor == 'Des_D':
        return des_D_positions(p)
    raise ValueError('unknown descent flavor {}'.format(flavor))


def ndes_multiset(p):
    """NDes = Des u+ {-b(i) : b(i) < 0}, sorted with repetition."""
    return sorted(des_positions(p) + [-v for v in p.window if v < 0])


def ddes_multiset(p):
    """DDes = Des u+ {-g(i)-1 : g(i) < 0} with every 0 removed."""
    return sorted(d for d in des_positions(p) + [-v-1 for v in p.window if v < 0] if d != 0)


def epsilon(p):
    return -1 if 1 not in p.window else 0


def fmaj(p):
    """Flag major index 2*maj + N1 (maj in the natural integer order)."""
    return 2*maj(p) + n1(p)


#%%
class StatisticBundle(NamedTuple):
    inv: int
    maj: int
    des: int
    n1: int
    n2: int
    len_B: int
    len_D: int
    nmaj: int
    ndes: int
    dmaj: int
    ddes: int
    fmaj: int
    epsilon: int
    des_set: DescentSet
    des_B_set: DescentSet
    des_D_set: DescentSet
    ndes_multiset: tuple
    ddes_multiset: tuple


def statistics(p):
    """
    Compute every statistic of p.

    nmaj/ndes and dmaj/ddes are taken from the NDes/DDes multisets, not from
    the closed expressions, so the bundle can be checked against them.
    """
    _inv, _n1, _n2 = inv(p), n1(p), n2(p)
    des = des_positions(p)
    _maj = sum(des)
    nd = tuple(ndes_multiset(p))
    dd = tuple(ddes_multiset(p))
    return StatisticBundle(
        inv=_inv, maj=_maj, des=len(des), n1=_n1, n2=_n2,
        len_B=_inv + _n1 + _n2, len_D=_inv + _n2,
        nmaj=sum(nd), ndes=len(nd), dmaj=sum(dd), ddes=len(dd),
        fmaj=2*_maj + _n1, epsilon=epsilon(p),
        des_set=DescentSet(p.n, des),
        des_B_set=DescentSet(p.n, des_B_positions(p)),
        des_D_set=DescentSet(p.n, des_D_positions(p)),
        ndes_multiset=nd, ddes_multiset=dd)


def check_bundle(p, bundle=None):
    """
    Return the list of violated relations between the statistics of p
    (empty when the length and negative statistic relations hold).
    """
    b = statistics(p) if bundle is None else bundle
    neg_sum = -sum(v for v in p.window if v < 0)
    eps = -1 if -1 in p.window else 0
    checks = [
        ('n1+n2=-sum(neg)', b.n1 + b.n2 == neg_sum),
        ('len_B=inv+n1+n2', b.len_B == b.inv + b.n1 + b.n2),
        ('len_D=inv+n2', b.len_D == b.inv + b.n2),
        ('nmaj=maj+n1+n2', b.nmaj == b.maj + b.n1 + b.n2),
        ('ndes=des+n1', b.ndes == b.des + b.n1),
        ('dmaj=maj+n2', b.dmaj == b.maj + b.n2),
        ('ddes=des+n1+eps', b.ddes == b.des + b.n1 + b.epsilon),
        ('eps=-1 iff -1 in window', b.epsilon == eps),
        ('nmaj=sum(NDes)', b.nmaj == sum(b.ndes_multiset)),
        ('dmaj=sum(DDes)', b.dmaj == sum(b.ddes_multiset)),
    ]
    return [name for name, ok in checks if not ok]


#%% Batched statistics
def statistics_array(windows):
    """
    Statistics of many windows at once.

    Inputs:
      windows : int array (n_el, n) of windows

    Returns:
      stats : dict of int64 arrays (n_el) keyed by STAT_KEYS and 'epsilon'
    """
    w = np.asarray(windows, dtype=np.int64)
    if w.ndim == 1:
        w = w[np.newaxis, :]
    n_el, n = w.shape

    n1 = (w < 0).sum(axis=1)
    inv = np.zeros(n_el, dtype=np.int64)
    n2 = np.zeros(n_el, dtype=np.int64)
    for i in range(n-1):
        inv += (w[:, i:i+1] > w[:, i+1:]).sum(axis=1)
        n2 += ((w[:, i:i+1] + w[:, i+1:]) < 0).sum(axis=1)

    d = w[:, :-1] > w[:, 1:]
    des = d.sum(axis=1)
    maj = (d * np.arange(1, n)).sum(axis=1)
    eps = -(w == -1).any(axis=1).astype(np.int64)

    return {'inv': inv, 'maj': maj, 'des': des, 'n1': n1, 'n2': n2,
            'len_B': inv + n1 + n2, 'len_D': inv + n2,
            'nmaj': maj + n1 + n2, 'ndes': des + n1,
            'dmaj': maj + n2, 'ddes': des + n1 + eps,
            'fmaj': 2*maj + n1, 'epsilon': eps}

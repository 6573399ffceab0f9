#!/usr/bin/env python3
"""
========
Overview
========
Python3 library of enumeration functions for NegStat.

Generates S_n (A), B_n and D_n, their increasing quotients B^J/D^J and
descent classes, the latter both by brute-force filtering and by shuffles
of the block sequences characterizing B(M) and D(M). Also implements the
three decompositions of B(M) onto D(M) (bar map, phi map and the chain
D_1(M), D_12(M), ..., D_{1..m_2}(M)).

Descent classes are left quotients: M selects on the descent set of the
inverse.

=========
Changelog
=========
v1.0 20261019
 - Original implementation
"""
import itertools
from typing import NamedTuple

import numpy as np

import NegStat_perm_lib as perm_lib
from NegStat_perm_lib import SignedPermutation, DescentSet


GROUPS = ('A', 'B', 'D')
FLAVORS = ('Des', 'Des_B', 'Des_D')
MODES = ('subset', 'exact')
DEFAULT_FLAVOR = {'A': 'Des', 'B': 'Des_B', 'D': 'Des_D'}


class EnumerationError(ValueError):
    """Precondition of an enumeration or decomposition violated."""


def _check_group(group, allowed=GROUPS):
    if group not in allowed:
        raise EnumerationError('group must be one of {} (got {})'.format(','.join(allowed), group))


#%% Groups
def iter_group(group, n, prefix=()):
    """
    Yield every element of S_n (A), B_n or D_n once, in lexicographic window
    order. A non-empty prefix restricts to elements whose window starts with
    it (used to shard B_n over workers).
    """
    _check_group(group)
    if n < 1:
        raise EnumerationError('rank must be >= 1 (got {})'.format(n))
    window = list(prefix)
    used = set(abs(v) for v in window)
    if len(used) != len(window):
        raise EnumerationError('prefix {} repeats an absolute value'.format(list(prefix)))
    if group == 'A':
        candidates = list(range(1, n+1))
    else:
        candidates = list(range(-n, 0)) + list(range(1, n+1))

    def _rec():
        if len(window) == n:
            if group == 'D' and sum(1 for v in window if v < 0) % 2:
                return
            yield SignedPermutation(window, check=False)
            return
        for v in candidates:
            if abs(v) not in used:
                window.append(v)
                used.add(abs(v))
                yield from _rec()
                used.discard(abs(v))
                window.pop()

    yield from _rec()


def group_order(group, n):
    f = 1
    for i in range(2, n+1):
        f *= i
    if group == 'A':
        return f
    elif group == 'B':
        return 2**n * f
    return 2**(n-1) * f


def group_array(group, n):
    """
    All windows of the group as an int16 array (n_el, n), rows in the same
    lexicographic order as iter_group.
    """
    _check_group(group)
    perms = np.array(list(itertools.permutations(range(1, n+1))), dtype=np.int16)
    if group == 'A':
        return perms
    signs = np.array(list(itertools.product((-1, 1), repeat=n)), dtype=np.int16)
    if group == 'D':
        signs = signs[(signs < 0).sum(axis=1) % 2 == 0]
    w = (perms[:, np.newaxis, :] * signs[np.newaxis, :, :]).reshape(-1, n)
    order = np.lexsort(w.T[::-1])
    return w[order]


def inverse_array(windows):
    """Inverses of many windows at once."""
    w = np.asarray(windows)
    n_el, n = w.shape
    inv = np.zeros_like(w)
    pos = np.broadcast_to(np.arange(1, n+1, dtype=w.dtype), w.shape)
    rows = np.repeat(np.arange(n_el), n).reshape(n_el, n)
    inv[rows, np.abs(w)-1] = np.sign(w) * pos
    return inv


def descent_mask_array(windows, flavor):
    """
    Descent sets as bit masks (bit k set iff k is a descent) for many windows.
    Besides Des/Des_B/Des_D, 'NDes' and 'DDes' give the underlying sets of
    the negative descent multisets.
    """
    w = np.asarray(windows, dtype=np.int64)
    n = w.shape[1]
    mask = ((w[:, :-1] > w[:, 1:]) * (np.int64(1) << np.arange(1, n, dtype=np.int64))).sum(axis=1)
    neg = w < 0
    if flavor == 'Des_B':
        mask |= neg[:, 0].astype(np.int64)
    elif flavor == 'Des_D':
        if n >= 2:
            mask |= (-w[:, 1] > w[:, 0]).astype(np.int64)
    elif flavor == 'NDes':
        mask |= (neg * (np.int64(1) << np.abs(w))).sum(axis=1)
    elif flavor == 'DDes':
        mask |= (neg * (np.int64(1) << (np.abs(w) - 1))).sum(axis=1)
        mask &= ~np.int64(1)
    elif flavor != 'Des':
        raise EnumerationError('unknown descent flavor {}'.format(flavor))
    return mask


def set_mask(M):
    return sum(1 << m for m in M)


#%% Quotients
def quotient_increasing(group, n):
    """
    Yield B^J (every choice of negated values arranged increasingly) or D^J
    (even number of negated values), in lexicographic window order.
    """
    _check_group(group, ('B', 'D'))
    out = []
    for k in range(n+1):
        if group == 'D' and k % 2:
            continue
        for negs in itertools.combinations(range(1, n+1), k):
            out.append(tuple(sorted([-v for v in negs] + [v for v in range(1, n+1) if v not in negs])))
    for w in sorted(out):
        yield SignedPermutation(w, check=False)


def factor_quotient(p, group='B'):
    """
    Unique factorization p = u o sigma with u increasing and sigma in S_n.

    Returns:
      u     : increasing window (element of B^J or D^J)
      sigma : positive permutation with u(sigma(i)) = p(i)
    """
    _check_group(group, ('B', 'D'))
    if group == 'D' and not perm_lib.is_even_signed(p):
        raise EnumerationError('{} is not in D_{}'.format(p, p.n))
    u = sorted(p.window)
    rank = {v: i for i, v in enumerate(u, 1)}
    sigma = [rank[v] for v in p.window]
    return SignedPermutation(u, check=False), SignedPermutation(sigma, check=False)


#%% Descent classes by filtering
class DescentClassSpec(NamedTuple):
    group: str
    n: int
    M: DescentSet
    mode: str = 'subset'
    flavor: str = 'Des_B'
    restrict: bool = True


def class_spec(group, n, M, mode='subset', flavor=None, restrict=True):
    """
    Validated DescentClassSpec. flavor defaults to Des/Des_B/Des_D for
    A/B/D; the plain Des flavor is allowed for every group (0 not in M).
    restrict=False with group D tabulates Des_D classes over all of B_n.
    """
    _check_group(group)
    if flavor is None:
        flavor = DEFAULT_FLAVOR[group]
    if flavor not in FLAVORS:
        raise EnumerationError('unknown descent flavor {}'.format(flavor))
    if flavor != 'Des' and flavor != DEFAULT_FLAVOR[group]:
        raise EnumerationError('flavor {} does not match group {}'.format(flavor, group))
    if mode not in MODES:
        raise EnumerationError('mode must be subset or exact (got {})'.format(mode))
    if not isinstance(M, DescentSet):
        M = DescentSet(n, M)
    if M.n != n:
        raise EnumerationError('descent set has rank {} but n = {}'.format(M.n, n))
    if flavor == 'Des' and 0 in M:
        raise EnumerationError('0 is not a descent for the Des flavor')
    return DescentClassSpec(group, n, M, mode, flavor, restrict)


def _ambient_group(spec):
    if spec.group == 'D' and not spec.restrict:
        return 'B'
    return spec.group


def in_class(p, spec):
    d = set(perm_lib.descent_positions(perm_lib.inverse(p), spec.flavor))
    if spec.mode == 'subset':
        return d <= set(spec.M)
    return d == set(spec.M)


def descent_class_filter(spec):
    """Brute-force class: every group element whose inverse passes M."""
    return [p for p in iter_group(_ambient_group(spec), spec.n) if in_class(p, spec)]


class GroupTable:
    """
    Windows of a whole group with the descent masks of their inverses,
    for selecting many descent classes of the same rank quickly.
    """
    def __init__(self, group, n):
        self.group = group
        self.n = n
        self.windows = group_array(group, n)
        self._inv = inverse_array(self.windows)
        self._masks = {}
        self._stats = None

    def masks(self, flavor):
        if flavor not in self._masks:
            self._masks[flavor] = descent_mask_array(self._inv, flavor)
        return self._masks[flavor]

    @property
    def stats(self):
        if self._stats is None:
            self._stats = perm_lib.statistics_array(self.windows)
        return self._stats

    def select(self, M, mode='subset', flavor=None):
        """Row indices of the class of M."""
        flavor = DEFAULT_FLAVOR[self.group] if flavor is None else flavor
        mask = self.masks(flavor)
        m = set_mask(M)
        if mode == 'subset':
            return np.flatnonzero((mask & ~m) == 0)
        return np.flatnonzero(mask == m)

    def elements(self, rows):
        return [SignedPermutation(w, check=False) for w in self.windows[rows].tolist()]


#%% Shuffle blocks
class ShuffleBlock(NamedTuple):
    """
    Sequences to be shuffled; parity is the constraint ('none', 'even',
    'odd') under which the block was admitted.
    """
    sequences: tuple
    parity: str = 'none'

    def size(self):
        return sum(len(s) for s in self.sequences)

    def to_json_obj(self):
        return {'sequences': [list(s) for s in self.sequences], 'parity': self.parity}

    def __str__(self):
        return ','.join('(' + ','.join(str(v) for v in s) + ')' for s in self.sequences)


def make_block(sequences, parity='none'):
    return ShuffleBlock(tuple(tuple(s) for s in sequences if len(s)), parity)


def check_block(block, n, increasing=True):
    """Raise EnumerationError unless the block covers [n] (and is increasing)."""
    values = [abs(v) for s in block.sequences for v in s]
    if sorted(values) != list(range(1, n+1)):
        raise EnumerationError('block {} does not cover [{}]'.format(block, n))
    if increasing:
        for s in block.sequences:
            if any(a >= b for a, b in zip(s, s[1:])):
                raise EnumerationError('sequence {} of block {} is not increasing'.format(s, block))


def _neg_run(r, m):
    """(-r, ..., -(m+1))"""
    return tuple(-k for k in range(r, m, -1))


def _r_vectors(M, first=1):
    ranges = [range(M.m(i), M.m(i+1)+1) for i in range(first, M.t+1)]
    return itertools.product(*ranges)


def _rest_sequences(M, rs, first):
    """(-r_i..-(m_i+1)), (r_i+1..m_{i+1}) for i >= first."""
    seqs = []
    for i, r in enumerate(rs, first):
        seqs.append(_neg_run(r, M.m(i)))
        seqs.append(tuple(range(r+1, M.m(i+1)+1)))
    return seqs


def _r_sum(M, rs, first):
    return sum(r - M.m(i) for i, r in enumerate(rs, first))


def _as_descent_set(n, M):
    if not isinstance(M, DescentSet):
        M = DescentSet(n, M)
    if M.n != n:
        raise EnumerationError('descent set has rank {} but n = {}'.format(M.n, n))
    return M


def descent_class_blocks_A(n, M):
    """Single block of consecutive runs (1..m_1), (m_1+1..m_2), ..., (m_t+1..n)."""
    M = _as_descent_set(n, M)
    if 0 in M:
        raise EnumerationError('0 is not a descent of a permutation in S_n')
    bounds = (0,) + M.members + (n,)
    yield (), make_block([range(bounds[i]+1, bounds[i+1]+1) for i in range(len(bounds)-1)])


def descent_class_blocks_B(n, M):
    """
    Yield (r-vector, block) for every m_i <= r_i <= m_{i+1}; the block is
    (1..m_1), (-r_1..-(m_1+1)), (r_1+1..m_2), ..., (-r_t..-(m_t+1)), (r_t+1..n)
    with empty sequences dropped.
    """
    M = _as_descent_set(n, M)
    for rs in _r_vectors(M):
        seqs = [tuple(range(1, M.m1+1))] + _rest_sequences(M, rs, 1)
        yield rs, make_block(seqs)


def descent_class_blocks_D(n, M):
    """
    Yield (case-tag, r-vector, block) generating D(M).

    case1  : 0 in M, B blocks with sum(r_i-m_i) even
    case2a : 0,1 not in M, leading (1..m_1), sum even
    case2b : 0,1 not in M, leading (-1,2..m_1), sum odd
    case3a : 0 not in M, 1 in M, r_1 = 1, (1),(2..m_2), sum_{i>=2} even
    case3b : 0 not in M, 1 in M, r_1 = 1, (-1,2..m_2), sum_{i>=2} odd
    case3c : 0 not in M, 1 in M, r_1 >= 2, (-r_1..-2,1),(r_1+1..m_2), sum even
    """
    M = _as_descent_set(n, M)
    if 0 in M:
        for rs in _r_vectors(M):
            if _r_sum(M, rs, 1) % 2 == 0:
                seqs = [tuple(range(1, M.m1+1))] + _rest_sequences(M, rs, 1)
                yield 'case1', rs, make_block(seqs, 'even')
    elif 1 not in M:
        for rs in _r_vectors(M):
            rest = _rest_sequences(M, rs, 1)
            if _r_sum(M, rs, 1) % 2 == 0:
                yield 'case2a', rs, make_block([tuple(range(1, M.m1+1))] + rest, 'even')
            else:
                yield 'case2b', rs, make_block([(-1,) + tuple(range(2, M.m1+1))] + rest, 'odd')
    else:
        m2 = M.m2
        for r1 in range(1, m2+1):
            for rs in _r_vectors(M, first=2):
                rest = _rest_sequences(M, rs, 2)
                s = _r_sum(M, rs, 2)
                if r1 == 1:
                    if s % 2 == 0:
                        yield 'case3a', (1,) + rs, make_block([(1,), tuple(range(2, m2+1))] + rest, 'even')
                    else:
                        yield 'case3b', (1,) + rs, make_block([(-1,) + tuple(range(2, m2+1))] + rest, 'odd')
                elif (r1 - 1 + s) % 2 == 0:
                    seqs = [_neg_run(r1, 1) + (1,), tuple(range(r1+1, m2+1))] + rest
                    yield 'case3c', (r1,) + rs, make_block(seqs, 'even')


def expand_shuffles(block):
    """
    Yield every interleaving of the block's sequences keeping each sequence
    in order; interleavings come in lexicographic order of the vector of
    source-sequence choices.
    """
    seqs = block.sequences
    total = block.size()
    idx = [0]*len(seqs)
    out = []

    def _rec():
        if len(out) == total:
            yield SignedPermutation(out, check=False)
            return
        for j, s in enumerate(seqs):
            if idx[j] < len(s):
                out.append(s[idx[j]])
                idx[j] += 1
                yield from _rec()
                idx[j] -= 1
                out.pop()

    yield from _rec()


def class_blocks(group, n, M):
    """Blocks of the constructive class of group A, B or D."""
    if group == 'A':
        return [b for _, b in descent_class_blocks_A(n, M)]
    elif group == 'B':
        return [b for _, b in descent_class_blocks_B(n, M)]
    elif group == 'D':
        return [b for _, _, b in descent_class_blocks_D(n, M)]
    raise EnumerationError('unknown group {}'.format(group))


def constructive_class(group, n, M, check_unique=False):
    """
    Class of M from the shuffle characterization, sorted. With check_unique,
    an element produced twice raises EnumerationError.
    """
    out = []
    seen = set()
    for block in class_blocks(group, n, M):
        for p in expand_shuffles(block):
            if check_unique:
                if p in seen:
                    raise EnumerationError('{} produced twice (block {})'.format(p, block))
                seen.add(p)
            out.append(p)
    return sorted(out)


#%% Decompositions of B(M)
def bar_map(p):
    """gamma -> gamma s_0^B: negate the first window entry."""
    w = list(p.window)
    w[0] = -w[0]
    return SignedPermutation(w, check=False)


def phi_map(p, M):
    """
    B(M) -> D(M) for 0,1 not in M: identity on D_n, otherwise s_0^B p
    (negate the entry of absolute value 1).
    """
    M = _as_descent_set(p.n, M)
    if 0 in M or 1 in M:
        raise EnumerationError('phi_map needs 0,1 not in M (got M={{{}}})'.format(M))
    if perm_lib.is_even_signed(p):
        return p
    return SignedPermutation([-v if abs(v) == 1 else v for v in p.window], check=False)


def _chain_step(seqs, i):
    seqs = [list(s) for s in seqs]
    a = next((k, j) for k, s in enumerate(seqs) for j, v in enumerate(s) if v == 1)
    b = next((k, j) for k, s in enumerate(seqs) for j, v in enumerate(s) if abs(v) == i)
    if a[0] == b[0]:
        s = seqs[a[0]]
        s[a[1]], s[b[1]] = s[b[1]], s[a[1]]
    else:
        if a[1] != 0 or b[1] != 0 or seqs[b[0]][0] != i:
            raise EnumerationError('cannot move 1 and {} in block {}'.format(i, seqs))
        seqs[a[0]][0] = -i
        seqs[b[0]][0] = 1
    return seqs


def chain_blocks(n, M, i):
    """
    Yield the blocks of D_{1..i}(M) for 1 in M, 0 not in M, 1 <= i <= m_2.

    D_1(M) takes the D(M) blocks with -1 replaced by 1. Each further step
    swaps 1 and +-i when they share a sequence; otherwise the 1 heading its
    sequence becomes -i and the i heading its sequence becomes 1.
    """
    M = _as_descent_set(n, M)
    if 0 in M or 1 not in M:
        raise EnumerationError('chain_blocks needs 1 in M and 0 not in M (got M={{{}}})'.format(M))
    if not 1 <= i <= M.m2:
        raise EnumerationError('chain index {} is out of range [1,{}]'.format(i, M.m2))
    for _, _, block in descent_class_blocks_D(n, M):
        seqs = [[1 if v == -1 else v for v in s] for s in block.sequences]
        for k in range(2, i+1):
            seqs = _chain_step(seqs, k)
        yield make_block(seqs)


def split_case(M):
    """1 for 0 in M, 2 for 0,1 not in M, 3 for 0 not in M and 1 in M."""
    if 0 in M:
        return 1
    return 2 if 1 not in M else 3

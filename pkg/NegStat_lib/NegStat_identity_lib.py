#!/usr/bin/env python3
"""
========
Overview
========
Python3 library of generating functions, closed forms and identity
verifiers for NegStat.

Each verifier is registered in VERIFIERS under its identity id and returns
a VerificationReport. Verifiers compare exact polynomials (or truncated
series modulo the caps) and keep the first differing monomial as witness.

Gessel identities are checked with the denominator (p;t)_{n+1}, where p
marks the descent number and t the major index; the D identity then starts
with 1/(1-p).

=========
Changelog
=========
v1.0 20261019
 - Original implementation
"""
import functools
import itertools
import multiprocessing as multi
import time
from typing import NamedTuple

import numpy as np

import NegStat_perm_lib as perm_lib
import NegStat_qalg_lib as qalg_lib
import NegStat_enum_lib as enum_lib
from NegStat_perm_lib import DescentSet
from NegStat_qalg_lib import TruncatedSeries, Monomial, CapError, term, VARS, INF


STAT_NAMES = perm_lib.STAT_KEYS + ('epsilon',)
GF_VARS = ('t', 'q', 'p')

ROSELLE_CAPS = {'u': 4, 't': 10, 'q': 10}
GESSEL_CAPS = {'u': 3, 't': 8, 'q': 8, 'p': 3}

LENGTH_KEY = {'A': 'inv', 'B': 'len_B', 'D': 'len_D'}
NEG_MAJ_KEY = {'A': 'maj', 'B': 'nmaj', 'D': 'dmaj'}
NEG_DES_KEY = {'A': 'des', 'B': 'ndes', 'D': 'ddes'}


class VerificationError(ValueError):
    """Unknown identity id or unusable verification parameters."""


#%% Generating functions
def _resolve_keys(keys):
    """
    keys: list of (statistic, variable); a statistic may be a '+' joined
    sum such as 'n1+n2'. Returns [(names, exponent index)].
    """
    if isinstance(keys, dict):
        keys = list(keys.items())
    out = []
    used = set()
    for stat, var in keys:
        names = stat.split('+')
        for name in names:
            if name not in STAT_NAMES:
                raise ValueError('unknown statistic {} (use {})'.format(name, ','.join(STAT_NAMES)))
        if var not in GF_VARS:
            raise ValueError('statistic variable must be one of {} (got {})'.format(','.join(GF_VARS), var))
        if var in used:
            raise ValueError('variable {} used twice'.format(var))
        used.add(var)
        out.append((names, VARS.index(var)))
    return out


def _cap_check(e, caps, key):
    for ix, c in enumerate(caps):
        if c is not None and e[ix] > c:
            raise CapError('{} reaches {}^{} beyond the cap {}'.format(key, VARS[ix], e[ix], c))


def gf(elements, keys, caps=None):
    """
    Sum over elements of prod var^statistic.

    Inputs:
      elements : iterable of SignedPermutation
      keys     : [(statistic, variable)], e.g. [('nmaj', 't'), ('len_B', 'q')]
      caps     : caps of the result; a statistic beyond its cap raises CapError

    Returns:
      TruncatedSeries (exact polynomial)
    """
    caps = qalg_lib.make_caps(caps)
    resolved = _resolve_keys(keys)
    counts = {}
    for p in elements:
        b = perm_lib.statistics(p)
        e = [0, 0, 0, 0]
        for names, ix in resolved:
            e[ix] = sum(getattr(b, name) for name in names)
        e = tuple(e)
        _cap_check(e, caps, p)
        counts[e] = counts.get(e, 0) + 1
    return TruncatedSeries(counts, caps)


def gf_array(windows, keys, caps=None, rows=None, stats=None):
    """
    Batched gf over an array of windows with numpy; stats may hold
    precomputed statistics_array output and rows a row selection.
    """
    caps = qalg_lib.make_caps(caps)
    resolved = _resolve_keys(keys)
    if stats is None:
        stats = perm_lib.statistics_array(windows)
    n_el = len(next(iter(stats.values())))
    rows = np.arange(n_el) if rows is None else np.asarray(rows)
    if rows.size == 0:
        return TruncatedSeries.zero(caps)

    cols = np.zeros((rows.size, 4), dtype=np.int64)
    for names, ix in resolved:
        cols[:, ix] = sum(stats[name][rows] for name in names)
    for ix, c in enumerate(caps):
        if c is not None and cols[:, ix].max() > c:
            raise CapError('statistic reaches {}^{} beyond the cap {}'.format(
                VARS[ix], cols[:, ix].max(), c))

    uniq, counts = np.unique(cols, axis=0, return_counts=True)
    return TruncatedSeries({tuple(e): int(c) for e, c in zip(uniq.tolist(), counts.tolist())}, caps)


#%% Closed forms
def _as_set(n, M):
    if isinstance(M, DescentSet):
        return M
    return DescentSet(n, M)


def one_plus_q_product(lo, hi, caps=None):
    """prod_{i=lo}^{hi} (1+q^i); empty product 1."""
    result = TruncatedSeries.one(caps)
    for i in range(lo, hi+1):
        result = result * (TruncatedSeries.one(caps) + term(1, caps, q=i))
    return result


def closed_form_A(n, M):
    M = _as_set(n, M)
    if 0 in M:
        raise perm_lib.DescentSetError('0 is not a descent of a permutation in S_n')
    return qalg_lib.q_multinomial(n, M.parts())


def closed_form_B(n, M):
    """q-multinomial(parts of M) * prod_{i=m_1+1}^{n} (1+q^i), m_1 := n for M empty."""
    M = _as_set(n, M)
    return qalg_lib.q_multinomial(n, M.parts()) * one_plus_q_product(M.m1+1, n)


def closed_form_B_dlen(n, M, method='product'):
    """
    Sum of q^len_D over B(M).

    method='product' : q-multinomial * prod_{i=m_1}^{n-1} (1+q^i)
    method='rsum'    : the sum over r-vectors, each r_i-sum collapsed by the
                       q-binomial theorem with x = q^(m_i - 1)
    """
    M = _as_set(n, M)
    mult = qalg_lib.q_multinomial(n, M.parts())
    if method == 'product':
        return mult * one_plus_q_product(M.m1, n-1)
    elif method != 'rsum':
        raise ValueError('method must be product or rsum (got {})'.format(method))
    result = mult
    for i in range(1, M.t+1):
        d = M.m(i+1) - M.m(i)
        inner = TruncatedSeries.zero()
        for k in range(d+1):
            inner = inner + qalg_lib.q_binomial(d, k).shift(Monomial(q=k*(k+1)//2 + k*(M.m(i)-1)))
        result = result * inner
    return result


def closed_form_D(n, M):
    """
    Sum of q^len_D over D(M):
      0 in M              : q-multinomial * prod_{i=1}^{n-1} (1+q^i)
      0,1 not in M        : q-multinomial * prod_{i=m_1}^{n-1} (1+q^i)
      0 not in M, 1 in M  : q-multinomial * prod_{i=1}^{n-1} (1+q^i) / [m_2]_q
    """
    M = _as_set(n, M)
    mult = qalg_lib.q_multinomial(n, M.parts())
    case = enum_lib.split_case(M)
    if case == 1:
        return mult * one_plus_q_product(1, n-1)
    elif case == 2:
        return mult * one_plus_q_product(M.m1, n-1)
    return qalg_lib.series_divide_exact(mult * one_plus_q_product(1, n-1), qalg_lib.q_int(M.m2))


def inclusion_exclusion(M, subset_gf):
    """Exact-class series sum_{N subset M} (-1)^{|M|-|N|} subset_gf(N)."""
    result = TruncatedSeries.zero()
    for N in M.subsets():
        sign = -1 if (M.t - N.t) % 2 else 1
        result = result + subset_gf(N) * sign
    return result


def poincare_oracle(group, n):
    """[n]_q! for A, prod [2i]_q for B, [n]_q prod_{i<n} [2i]_q for D."""
    if group == 'A':
        return qalg_lib.q_factorial(n)
    elif group == 'B':
        return qalg_lib.series_prod(qalg_lib.q_int(2*i) for i in range(1, n+1))
    elif group == 'D':
        return qalg_lib.q_int(n) * qalg_lib.series_prod(qalg_lib.q_int(2*i) for i in range(1, n))
    raise enum_lib.EnumerationError('unknown group {}'.format(group))


@functools.lru_cache(maxsize=16)
def group_table(group, n):
    return enum_lib.GroupTable(group, n)


def distribution(group, n, keys):
    """Joint distribution over the whole group, e.g. B_n(t,q)."""
    table = group_table(group, n)
    return gf_array(table.windows, keys, stats=table.stats)


#%% Reports
def _jsonable(obj):
    if isinstance(obj, TruncatedSeries):
        return obj.to_json_obj()
    if isinstance(obj, (perm_lib.SignedPermutation, DescentSet)):
        return str(obj)
    if isinstance(obj, enum_lib.ShuffleBlock):
        return obj.to_json_obj()
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def series_witness(lhs, rhs):
    """First monomial (in sorted order) where the truncations differ."""
    caps = qalg_lib.meet_caps(lhs.caps, rhs.caps)
    a = lhs.truncate(caps).terms
    b = rhs.truncate(caps).terms
    for e in sorted(set(a) | set(b)):
        if a.get(e, 0) != b.get(e, 0):
            return {'exponents': {v: x for v, x in zip(VARS, e) if x},
                    'lhs': str(a.get(e, 0)), 'rhs': str(b.get(e, 0))}
    return None


class VerificationReport(NamedTuple):
    identity_id: str
    params: dict
    status: str
    lhs: object
    rhs: object
    witness: object
    elapsed_ms: int
    n_checks: int = 0
    notes: tuple = ()

    @property
    def passed(self):
        return self.status == 'pass'

    def to_json_obj(self, with_timing=True):
        """elapsed_ms is left out with with_timing=False (byte-stable output)."""
        out = {'identity_id': self.identity_id, 'params': _jsonable(self.params),
               'status': self.status, 'lhs': self.lhs, 'rhs': self.rhs}
        if self.witness is not None:
            out['witness'] = self.witness
        if with_timing:
            out['elapsed_ms'] = self.elapsed_ms
        out['n_checks'] = self.n_checks
        if self.notes:
            out['notes'] = list(self.notes)
        return out


class _Run:
    """Collects the checks of one verification; the first failure wins."""
    def __init__(self, identity_id, params):
        self.identity_id = identity_id
        self.params = params
        self.n_checks = 0
        self.lhs = None
        self.rhs = None
        self.witness = None
        self.notes = []

    def compare(self, lhs, rhs, **context):
        self.n_checks += 1
        ok = lhs == rhs
        if self.witness is None:
            self.lhs, self.rhs = _jsonable(lhs), _jsonable(rhs)
            if not ok:
                if isinstance(lhs, TruncatedSeries) and isinstance(rhs, TruncatedSeries):
                    w = series_witness(lhs, rhs)
                else:
                    w = {'lhs': _jsonable(lhs), 'rhs': _jsonable(rhs)}
                w.update(_jsonable(context))
                self.witness = w
        return ok

    def check(self, ok, **context):
        self.n_checks += 1
        if not ok and self.witness is None:
            self.witness = _jsonable(context)
        return ok

    def note(self, text):
        if text not in self.notes:
            self.notes.append(text)

    def n_range(self, n_min=1):
        n = self.params.get('n')
        if n is not None:
            return [int(n)]
        return list(range(n_min, int(self.params['n_max'])+1))

    def sets(self, n, allow_zero=True):
        """
        Descent sets to scan: the given M, or all of them. Over a range of
        ranks, ranks too small to hold M are skipped.
        """
        M = self.params.get('M')
        if M is not None:
            if isinstance(M, DescentSet):
                M = str(M)
            try:
                return [perm_lib.parse_descent_set(M, n, allow_zero)]
            except perm_lib.DescentSetError:
                if self.params.get('n') is not None:
                    raise
                ## raises again if M does not fit the largest rank either
                perm_lib.parse_descent_set(M, int(self.params['n_max']), allow_zero)
                self.note('ranks too small to hold M={{{}}} are skipped'.format(M.strip('{}')))
                return []
        return perm_lib.all_descent_sets(n, allow_zero)

    def modes(self):
        mode = self.params.get('mode')
        return list(enum_lib.MODES) if mode is None else [mode]

    def caps(self):
        return qalg_lib.make_caps(self.params['caps'])

    def n_para(self):
        return int(self.params.get('n_para') or 1)

    def report(self, elapsed_ms):
        status = 'pass' if self.witness is None else 'fail'
        return VerificationReport(self.identity_id, dict(self.params), status, self.lhs, self.rhs,
                                  self.witness, elapsed_ms, self.n_checks, tuple(self.notes))


#%% Baselines on S_n
def _verify_macmahon_A(run):
    for n in run.n_range():
        t = group_table('A', n)
        run.compare(gf_array(t.windows, [('maj', 'q')], stats=t.stats),
                    gf_array(t.windows, [('inv', 'q')], stats=t.stats), n=n)
        run.compare(gf_array(t.windows, [('inv', 'q')], stats=t.stats), qalg_lib.q_factorial(n), n=n)


def _verify_fs1_A(run):
    for n in run.n_range():
        t = group_table('A', n)
        for M in run.sets(n, allow_zero=False):
            rows = t.select(M, 'exact', 'Des')
            run.compare(gf_array(t.windows, [('maj', 'q')], rows=rows, stats=t.stats),
                        gf_array(t.windows, [('inv', 'q')], rows=rows, stats=t.stats), n=n, M=M)


def _verify_fs2_A(run):
    for n in run.n_range():
        S = distribution('A', n, [('maj', 't'), ('inv', 'q')])
        run.compare(S, S.swap('t', 'q'), n=n)


def _verify_stanley_A(run):
    for n in run.n_range():
        t = group_table('A', n)
        for M in run.sets(n, allow_zero=False):
            for mode in run.modes():
                rows = t.select(M, mode, 'Des')
                if mode == 'subset':
                    rhs = closed_form_A(n, M)
                else:
                    rhs = inclusion_exclusion(M, lambda N: closed_form_A(n, N))
                for key in ('maj', 'inv'):
                    run.compare(gf_array(t.windows, [(key, 'q')], rows=rows, stats=t.stats), rhs,
                                n=n, M=M, mode=mode, statistic=key)


#%% Per-element relations
def _eqs_shard(args):
    """Check every element of B_n with the given first entry."""
    n, first = args
    count = 0
    failure = None
    for p in enum_lib.iter_group('B', n, prefix=(first,)):
        count += 1
        bad = perm_lib.check_bundle(p)
        if bad and failure is None:
            failure = (str(p), bad)
    return count, failure


def _verify_eqs_1_to_5(run):
    n_para = run.n_para()
    for n in run.n_range():
        shards = [(n, v) for v in list(range(-n, 0)) + list(range(1, n+1))]
        if n_para > 1:
            _n_para = min(n_para, len(shards))
            q = multi.get_context('fork')
            p = q.Pool(_n_para)
            results = p.map(_eqs_shard, shards)
            p.close()
        else:
            results = [_eqs_shard(s) for s in shards]
        count = sum(r[0] for r in results)
        run.compare(count, enum_lib.group_order('B', n), n=n, what='elements checked')
        for c, failure in results:
            if failure is not None:
                run.check(False, n=n, element=failure[0], violated=failure[1])
                break
        else:
            run.check(True)


def _verify_mahonian(run, group):
    maj_key, len_key = NEG_MAJ_KEY[group], LENGTH_KEY[group]
    for n in run.n_range():
        t = group_table(group, n)
        lhs = gf_array(t.windows, [(maj_key, 'q')], stats=t.stats)
        rhs = gf_array(t.windows, [(len_key, 'q')], stats=t.stats)
        run.compare(lhs, rhs, n=n)
        run.compare(rhs, poincare_oracle(group, n), n=n)


#%% Descent classes
def _verify_class_B(run):
    for n in run.n_range():
        t = group_table('B', n)
        for M in run.sets(n):
            for mode in run.modes():
                rows = t.select(M, mode)
                if mode == 'subset':
                    rhs = closed_form_B(n, M)
                else:
                    rhs = inclusion_exclusion(M, lambda N: closed_form_B(n, N))
                for key in ('nmaj', 'len_B', 'fmaj'):
                    run.compare(gf_array(t.windows, [(key, 'q')], rows=rows, stats=t.stats), rhs,
                                n=n, M=M, mode=mode, statistic=key)


def _verify_class_B_dlen(run):
    for n in run.n_range():
        t = group_table('B', n)
        for M in run.sets(n):
            rows = t.select(M, 'subset')
            product = closed_form_B_dlen(n, M)
            run.compare(closed_form_B_dlen(n, M, method='rsum'), product, n=n, M=M, form='rsum')
            run.compare(gf_array(t.windows, [('len_D', 'q')], rows=rows, stats=t.stats), product,
                        n=n, M=M)


def _verify_class_D(run):
    for n in run.n_range():
        t = group_table('D', n)
        for M in run.sets(n):
            for mode in run.modes():
                rows = t.select(M, mode)
                if mode == 'subset':
                    rhs = closed_form_D(n, M)
                else:
                    rhs = inclusion_exclusion(M, lambda N: closed_form_D(n, N))
                for key in ('dmaj', 'len_D'):
                    run.compare(gf_array(t.windows, [(key, 'q')], rows=rows, stats=t.stats), rhs,
                                n=n, M=M, mode=mode, statistic=key)


def find_negative_counterexample(group, n_max=4):
    """
    Search n = 1..n_max, subset then exact mode, for a class
    {x : set(NDes(x^-1)) within M} (B) or {x : set(DDes(x^-1)) within M} (D)
    on which the negative major index and the length are not equidistributed.

    Returns:
      None, or dict with n, M, mode and both distributions
    """
    flavor = 'NDes' if group == 'B' else 'DDes'
    maj_key, len_key = NEG_MAJ_KEY[group], LENGTH_KEY[group]
    for n in range(1, n_max+1):
        t = group_table(group, n)
        top = n if group == 'B' else n-1
        sets = list(DescentSet(n+1, []).union(range(1, top+1)).subsets())
        for mode in enum_lib.MODES:
            for M in sets:
                rows = t.select(M, mode, flavor)
                lhs = gf_array(t.windows, [(maj_key, 'q')], rows=rows, stats=t.stats)
                rhs = gf_array(t.windows, [(len_key, 'q')], rows=rows, stats=t.stats)
                if lhs != rhs:
                    return {'n': n, 'M': str(M), 'mode': mode,
                            maj_key: lhs, len_key: rhs}
    return None


def _verify_class_B_des_variant(run):
    for n in run.n_range():
        t = group_table('B', n)
        for M in run.sets(n, allow_zero=False):
            M0 = M.union([0])
            rows = t.select(M, 'subset', 'Des')
            run.check(np.array_equal(rows, t.select(M0, 'subset', 'Des_B')),
                      n=n, M=M, what='Des(x^-1) within M iff Des_B(x^-1) within M u {0}')
            for key in ('nmaj', 'len_B'):
                run.compare(gf_array(t.windows, [(key, 'q')], rows=rows, stats=t.stats),
                            closed_form_B(n, M0), n=n, M=M, statistic=key)
            rows = t.select(M, 'exact', 'Des')
            run.compare(gf_array(t.windows, [('nmaj', 'q')], rows=rows, stats=t.stats),
                        gf_array(t.windows, [('len_B', 'q')], rows=rows, stats=t.stats),
                        n=n, M=M, mode='exact')

    n_max = min(max(run.n_range()), 4)
    found = find_negative_counterexample('B', n_max)
    if found is None:
        run.check(False, what='no NDes counterexample for n <= {}'.format(n_max))
    else:
        run.check(True)
        run.note('NDes classes are not nmaj/len_B equidistributed: n={} M={{{}}} {} mode, '
                 'nmaj {} vs len_B {}'.format(found['n'], found['M'], found['mode'],
                                             found['nmaj'], found['len_B']))
    found = find_negative_counterexample('D', n_max)
    if found is None:
        run.note('no DDes counterexample for n <= {}'.format(n_max))
    else:
        run.note('DDes classes are not dmaj/len_D equidistributed: n={} M={{{}}} {} mode'.format(
            found['n'], found['M'], found['mode']))


#%% Decompositions of B(M)
def _verify_split_props(run):
    for n in run.n_range():
        tB = group_table('B', n)
        tD = group_table('D', n)
        for M in run.sets(n):
            B_M = tB.elements(tB.select(M))
            D_M = tD.elements(tD.select(M))
            setB, setD = set(B_M), set(D_M)
            gfB = gf(B_M, [('len_D', 'q')])
            gfD = gf(D_M, [('len_D', 'q')])
            case = enum_lib.split_case(M)
            ctx = {'n': n, 'M': M, 'case': case}
            if case == 1:
                bar = [enum_lib.bar_map(p) for p in D_M]
                run.check(setD.isdisjoint(bar) and setD | set(bar) == setB, what='B(M) = D(M) + bar D(M)', **ctx)
                run.check(all(perm_lib.statistics(a).len_D == perm_lib.statistics(b).len_D
                              for a, b in zip(D_M, bar)), what='bar map keeps len_D', **ctx)
                run.compare(len(B_M), 2*len(D_M), what='|B(M)| = 2|D(M)|', **ctx)
                run.compare(gfB, gfD*2, **ctx)
            elif case == 2:
                images = [enum_lib.phi_map(p, M) for p in B_M]
                run.check(set(images) == setD and len(set(images)) == len(B_M),
                          what='phi is a bijection B(M) -> D(M)', **ctx)
                run.check(all(perm_lib.statistics(a).len_D == perm_lib.statistics(b).len_D
                              for a, b in zip(B_M, images)), what='phi keeps len_D', **ctx)
                run.compare(len(B_M), len(D_M), what='|B(M)| = |D(M)|', **ctx)
                run.compare(gfB, gfD, **ctx)
            else:
                m2 = M.m2
                union = []
                for i in range(1, m2+1):
                    piece = [p for b in enum_lib.chain_blocks(n, M, i) for p in enum_lib.expand_shuffles(b)]
                    union.extend(piece)
                    run.compare(len(piece), len(D_M), what='|D_1..i(M)| = |D(M)|', i=i, **ctx)
                    run.compare(gf(piece, [('len_D', 'q')]), gfD.shift(Monomial(q=i-1)), i=i, **ctx)
                run.check(len(union) == len(set(union)) and set(union) == setB,
                          what='B(M) = disjoint union of the D_1..i(M)', **ctx)
                run.compare(len(B_M), m2*len(D_M), what='|B(M)| = m_2 |D(M)|', **ctx)
                run.compare(gfB, qalg_lib.q_int(m2)*gfD, **ctx)


REFERENCE_BLOCKS_D = {
    # n=4, M={1,3}
    'D': [((1,), (2, 3), (4,)), ((-1, 2, 3), (-4,)), ((-2, 1), (3,), (-4,)), ((-3, -2, 1), (4,))],
    1: [((1,), (2, 3), (4,)), ((1, 2, 3), (-4,)), ((-2, 1), (3,), (-4,)), ((-3, -2, 1), (4,))],
    2: [((-2,), (1, 3), (4,)), ((2, 1, 3), (-4,)), ((1, -2), (3,), (-4,)), ((-3, 1, -2), (4,))],
    3: [((-2,), (3, 1), (4,)), ((2, 3, 1), (-4,)), ((-3, -2), (1,), (-4,)), ((1, -3, -2), (4,))],
}

REFERENCE_B2_DES_D = {
    '': [(-1, 2), (1, 2)],
    '0': [(-2, -1), (2, -1)],
    '1': [(-2, 1), (2, 1)],
    '0,1': [(-1, -2), (1, -2)],
}


def _verify_blocks(run, group):
    for n in run.n_range():
        t = group_table(group, n)
        for M in run.sets(n):
            oracle = [tuple(w) for w in t.windows[t.select(M)].tolist()]
            try:
                for block in enum_lib.class_blocks(group, n, M):
                    enum_lib.check_block(block, n)
                built = [p.window for p in enum_lib.constructive_class(group, n, M, check_unique=True)]
            except enum_lib.EnumerationError as err:
                run.check(False, n=n, M=M, error=str(err))
                continue
            run.check(built == oracle, n=n, M=M, constructive=len(built), filtered=len(oracle),
                      first_difference=next((str(a) for a, b in zip(built, oracle) if a != b), None))

    if group == 'D':
        for text, expected in REFERENCE_B2_DES_D.items():
            spec = enum_lib.class_spec('D', 2, perm_lib.parse_descent_set(text, 2), 'exact', restrict=False)
            run.compare([p.window for p in enum_lib.descent_class_filter(spec)], expected,
                        what='Des_D classes of B_2', M=text)
        M = DescentSet(4, [1, 3])
        run.compare([b.sequences for _, _, b in enum_lib.descent_class_blocks_D(4, M)],
                    REFERENCE_BLOCKS_D['D'], what='D(M) blocks', n=4, M=M)
        for i in (1, 2, 3):
            run.compare([b.sequences for b in enum_lib.chain_blocks(4, M, i)],
                        REFERENCE_BLOCKS_D[i], what='chain blocks', n=4, M=M, i=i)


#%% Quotients, symmetry and Poincare polynomials
def _verify_lemmino(run):
    for n in run.n_range():
        run.compare(gf(enum_lib.quotient_increasing('B', n), [('n1', 'p'), ('n1+n2', 'q')]),
                    qalg_lib.pochhammer(term(-1, p=1, q=1), Monomial(q=1), n), n=n, group='B')
        run.compare(gf(enum_lib.quotient_increasing('D', n), [('n1+epsilon', 'p'), ('n2', 'q')]),
                    qalg_lib.pochhammer(term(-1, p=1, q=1), Monomial(q=1), n-1), n=n, group='D')


def _verify_symmetry(run, group):
    keys = [(NEG_MAJ_KEY[group], 't'), (LENGTH_KEY[group], 'q')]
    for n in run.n_range():
        F = distribution(group, n, keys)
        size = max(F.degree('t'), F.degree('q')) + 1
        C = np.zeros((size, size), dtype=object)
        for e, c in F.terms.items():
            C[e[1], e[2]] = c
        run.check(np.array_equal(C, C.T), n=n, what='coefficient matrix is symmetric')
        run.compare(F, F.swap('t', 'q'), n=n)


def _verify_quotient_factorization(run):
    for n in run.n_range():
        for group in ('B', 'D'):
            quotient = set(enum_lib.quotient_increasing(group, n))
            len_key = LENGTH_KEY[group]
            pairs = set()
            failure = None
            for p in enum_lib.iter_group(group, n):
                u, sigma = enum_lib.factor_quotient(p, group)
                pairs.add((u, sigma))
                if failure is not None:
                    continue
                bp, bu, bs = perm_lib.statistics(p), perm_lib.statistics(u), perm_lib.statistics(sigma)
                checks = {
                    'p = u sigma': perm_lib.compose(u, sigma) == p,
                    'u in quotient': u in quotient,
                    'sigma in S_n': all(v > 0 for v in sigma.window),
                    'length additive': getattr(bp, len_key) == getattr(bu, len_key) + bs.inv,
                    'maj(u sigma) = maj(sigma)': bp.maj == bs.maj,
                    'inv(u sigma) = inv(sigma)': bp.inv == bs.inv,
                    'N1, N2 from u': bp.n1 == bu.n1 and bp.n2 == bu.n2,
                }
                bad = [k for k, ok in checks.items() if not ok]
                if bad:
                    failure = (p, bad)
            if failure is None:
                run.check(True)
            else:
                run.check(False, n=n, group=group, element=failure[0], violated=failure[1])
            run.compare(len(pairs), enum_lib.group_order(group, n), n=n, group=group, what='unique factorization')
            run.compare(len(quotient) * enum_lib.group_order('A', n), enum_lib.group_order(group, n),
                        n=n, group=group, what='|quotient| n!')


def _verify_poincare(run):
    for n in run.n_range():
        for group in enum_lib.GROUPS:
            run.compare(distribution(group, n, [(LENGTH_KEY[group], 'q')]), poincare_oracle(group, n),
                        n=n, group=group)


def _verify_qbinomial(run):
    for n in run.n_range(n_min=0):
        lhs = qalg_lib.pochhammer(term(-1, p=1, q=1), Monomial(q=1), n)
        rhs = TruncatedSeries.zero()
        for m in range(n+1):
            rhs = rhs + qalg_lib.q_binomial(n, m).shift(Monomial(q=m*(m+1)//2, p=m))
        run.compare(lhs, rhs, n=n)


#%% Series identities
def _full_caps(run, needed):
    caps = run.caps()
    for v in needed:
        if caps[VARS.index(v)] is None:
            raise VerificationError('caps must set {} (got {})'.format(v, qalg_lib.caps_to_dict(caps)))
    return caps


def _group_series(group, n, keys, caps):
    """gf of the whole group, computed exactly and then truncated."""
    if n == 0:
        return TruncatedSeries.one(caps)
    return distribution(group, n, keys).truncate(caps)


def _verify_roselle(run, group):
    caps = _full_caps(run, 'utq')
    keys = [(NEG_MAJ_KEY[group], 't'), (LENGTH_KEY[group], 'q')]
    lhs = TruncatedSeries.zero(caps) + (1 if group == 'D' else 0)
    for n in range(0 if group != 'D' else 1, caps[0]+1):
        den = qalg_lib.pochhammer(term(1, t=1), Monomial(t=1), n, caps) \
            * qalg_lib.pochhammer(term(1, q=1), Monomial(q=1), n, caps)
        if group == 'B':
            den = den * qalg_lib.pochhammer(term(-1, t=1, q=1), Monomial(t=1, q=1), n, caps)
        elif group == 'D':
            den = den * qalg_lib.pochhammer(term(-1, t=1, q=1), Monomial(t=1, q=1), n-1, caps)
        lhs = lhs + (_group_series(group, n, keys, caps) * den.invert()).shift(Monomial(u=n))
    rhs = qalg_lib.double_pochhammer(term(1, u=1), INF, INF, caps).invert()
    run.compare(lhs, rhs, caps=qalg_lib.caps_to_dict(caps))
    if group == 'B':
        run.note('the n=0 term is taken as 1 (B_0(t,q) printed as 0 would break the constant term)')


def _verify_gessel(run, group):
    caps = _full_caps(run, 'utqp')
    keys = [(NEG_MAJ_KEY[group], 't'), (LENGTH_KEY[group], 'q'), (NEG_DES_KEY[group], 'p')]
    lhs = TruncatedSeries.zero(caps)
    for n in range(caps[0]+1):
        den = qalg_lib.q_factorial(n, 'q', caps) * qalg_lib.pochhammer(term(1, p=1), Monomial(t=1), n+1, caps)
        if group == 'D' and n == 0:
            lhs = lhs + den.invert()
            continue
        if group == 'B':
            den = den * qalg_lib.pochhammer(term(-1, t=1, q=1, p=1), Monomial(t=1, q=1), n, caps)
        elif group == 'D':
            den = den * qalg_lib.pochhammer(term(-1, t=1, q=1, p=1), Monomial(t=1, q=1), n-1, caps)
        lhs = lhs + (_group_series(group, n, keys, caps) * den.invert()).shift(Monomial(u=n))

    rhs = TruncatedSeries.zero(caps)
    for k in range(caps[3]+1):
        prod = TruncatedSeries.one(caps)
        for j in range(k+1):
            prod = prod * qalg_lib.q_exponential(Monomial(u=1, t=j), caps)
        rhs = rhs + prod.shift(Monomial(p=k))
    run.compare(lhs, rhs, caps=qalg_lib.caps_to_dict(caps))
    run.note('denominator (p;t)_{n+1} with p marking descents and t the major index')


#%% Registry
VERIFIERS = {
    'macmahon_A': (_verify_macmahon_A, {'n_max': 7}),
    'fs1_A': (_verify_fs1_A, {'n_max': 7}),
    'fs2_A': (_verify_fs2_A, {'n_max': 7}),
    'stanley_A': (_verify_stanley_A, {'n_max': 7}),
    'eqs_1_to_5': (_verify_eqs_1_to_5, {'n_max': 7}),
    'mahonian_B': (functools.partial(_verify_mahonian, group='B'), {'n_max': 6}),
    'mahonian_D': (functools.partial(_verify_mahonian, group='D'), {'n_max': 6}),
    'class_B': (_verify_class_B, {'n_max': 6}),
    'class_B_des_variant': (_verify_class_B_des_variant, {'n_max': 6}),
    'class_B_dlen': (_verify_class_B_dlen, {'n_max': 6}),
    'class_D': (_verify_class_D, {'n_max': 6}),
    'split_props': (_verify_split_props, {'n_max': 6}),
    'blocks_B': (functools.partial(_verify_blocks, group='B'), {'n_max': 6}),
    'blocks_D': (functools.partial(_verify_blocks, group='D'), {'n_max': 6}),
    'lemmino': (_verify_lemmino, {'n_max': 8}),
    'symmetry_B': (functools.partial(_verify_symmetry, group='B'), {'n_max': 5}),
    'symmetry_D': (functools.partial(_verify_symmetry, group='D'), {'n_max': 5}),
    'quotient_factorization': (_verify_quotient_factorization, {'n_max': 5}),
    'poincare': (_verify_poincare, {'n_max': 6}),
    'qbinomial': (_verify_qbinomial, {'n_max': 12}),
    'roselle_A': (functools.partial(_verify_roselle, group='A'), {'caps': ROSELLE_CAPS}),
    'roselle_B': (functools.partial(_verify_roselle, group='B'), {'caps': ROSELLE_CAPS}),
    'roselle_D': (functools.partial(_verify_roselle, group='D'), {'caps': ROSELLE_CAPS}),
    'gessel_A': (functools.partial(_verify_gessel, group='A'), {'caps': GESSEL_CAPS}),
    'gessel_B': (functools.partial(_verify_gessel, group='B'), {'caps': GESSEL_CAPS}),
    'gessel_D': (functools.partial(_verify_gessel, group='D'), {'caps': GESSEL_CAPS}),
}

SERIES_IDS = ('roselle_A', 'roselle_B', 'roselle_D', 'gessel_A', 'gessel_B', 'gessel_D')


def verify(identity_id, **params):
    """
    Run one verification.

    Inputs:
      identity_id : key of VERIFIERS
      params      : n, n_max, M (text), mode, caps (dict, merged over the
                    defaults), n_para; None values take the defaults

    Returns:
      VerificationReport
    """
    if identity_id not in VERIFIERS:
        raise VerificationError('unknown identity id {} (use {})'.format(identity_id, ', '.join(VERIFIERS)))
    func, defaults = VERIFIERS[identity_id]
    merged = dict(defaults)
    series = identity_id in SERIES_IDS
    for k, v in params.items():
        if v is None:
            continue
        if k == 'caps':
            if not series:
                continue
            caps = dict(defaults['caps'])
            caps.update(qalg_lib.caps_to_dict(qalg_lib.make_caps(v)))
            v = caps
        elif series and k in ('n', 'n_max', 'M', 'mode'):
            continue
        merged[k] = v
    run = _Run(identity_id, merged)
    start = time.time()
    func(run)
    return run.report(int((time.time() - start)*1000))


def _verify_wrapper(args):
    identity_id, params = args
    return verify(identity_id, **params)


def verify_many(identity_ids, n_para=1, **params):
    """
    Run several verifications, in parallel over identities when n_para > 1
    (each job then runs single-worker). Reports keep the order of ids.
    """
    if n_para > 1 and len(identity_ids) > 1:
        params['n_para'] = 1
        _n_para = min(n_para, len(identity_ids))
        print('  with {} parallel processing...'.format(_n_para), flush=True)
        q = multi.get_context('fork')
        p = q.Pool(_n_para)
        reports = p.map(_verify_wrapper, [(i, params) for i in identity_ids])
        p.close()
        return reports
    params['n_para'] = n_para
    return [verify(i, **params) for i in identity_ids]

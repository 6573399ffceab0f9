#!/usr/bin/env python3
"""
========
Overview
========
Python3 library of command line helper tools for NegStat.

=========
Changelog
=========
v1.0 20261019
 - Original implementation
"""
import multiprocessing as multi
import os

import NegStat_qalg_lib as qalg_lib


#%%
def get_n_para():
    """Number of usable CPUs."""
    try:
        n_para = len(os.sched_getaffinity(0))
    except:
        n_para = multi.cpu_count()
    return n_para


#%%
def parse_caps(text, defaults=None):
    """
    Parse "u=4,t=10,q=10" into a dict; variables not given keep defaults.
    """
    caps = dict(defaults or {})
    text = text.strip()
    if not text:
        return caps
    for token in text.split(','):
        if '=' not in token:
            raise ValueError('cap "{}" must look like q=10'.format(token.strip()))
        var, value = (s.strip() for s in token.split('=', 1))
        if var not in qalg_lib.VARS:
            raise ValueError('unknown variable {} in caps (use {})'.format(var, ','.join(qalg_lib.VARS)))
        try:
            caps[var] = int(value)
        except ValueError:
            raise ValueError('cap of {} ("{}") is not an integer'.format(var, value))
        if caps[var] < 1:
            raise ValueError('cap of {} must be positive'.format(var))
    return caps


def default_gf_caps(n):
    """Caps large enough for any statistic over rank n (all are <= n^2)."""
    return {'t': n*n, 'q': n*n, 'p': n*n}


#%%
def parse_group(text):
    group = text.strip().upper()
    if group not in ('A', 'B', 'D'):
        raise ValueError('group must be A, B or D (got {})'.format(text))
    return group


def parse_rank(text, name='n'):
    try:
        n = int(text)
    except ValueError:
        raise ValueError('{} must be an integer (got {})'.format(name, text))
    if n < 1:
        raise ValueError('{} must be >= 1 (got {})'.format(name, n))
    return n

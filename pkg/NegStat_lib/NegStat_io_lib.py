#!/usr/bin/env python3
"""
========
Overview
========
Python3 library of input/output functions for NegStat.

Reports are written as JSON (one object per verification) and summarized
in a TSV table; element listings are one window per line or a JSON array.

=========
Changelog
=========
v1.0 20261019
 - Original implementation
"""
import json
import os

import NegStat_perm_lib as perm_lib


#%%
def bundle_to_dict(bundle):
    """StatisticBundle as a JSON-ready dict (descent sets as lists)."""
    out = {}
    for k, v in bundle._asdict().items():
        if isinstance(v, perm_lib.DescentSet):
            out[k] = list(v.members)
        elif isinstance(v, tuple):
            out[k] = list(v)
        else:
            out[k] = v
    return out


#%%
def dumps_json(obj):
    return json.dumps(obj, indent=1, ensure_ascii=False)


def write_json(jsonfile, obj):
    """Write obj to jsonfile, creating the directory if needed."""
    dirname = os.path.dirname(jsonfile)
    if dirname and not os.path.exists(dirname):
        os.makedirs(dirname)
    with open(jsonfile, 'w') as f:
        f.write(dumps_json(obj) + '\n')


def read_json(jsonfile):
    with open(jsonfile) as f:
        return json.load(f)


#%%
def write_reports(outdir, reports):
    """
    Write <outdir>/<identity_id>.json for each report and summary.tsv.

    Returns:
      list of written files
    """
    if not os.path.exists(outdir):
        os.makedirs(outdir)
    files = []
    for r in reports:
        jsonfile = os.path.join(outdir, '{}.json'.format(r.identity_id))
        write_json(jsonfile, r.to_json_obj())
        files.append(jsonfile)
    tsvfile = os.path.join(outdir, 'summary.tsv')
    with open(tsvfile, 'w') as f:
        f.write('\n'.join(summary_lines(reports)) + '\n')
    files.append(tsvfile)
    return files


def summary_lines(reports):
    """TSV summary table with a header line."""
    lines = ['identity_id\tstatus\tn_checks\telapsed_ms\twitness']
    for r in reports:
        witness = '' if r.witness is None else json.dumps(r.witness, sort_keys=True)
        lines.append('{}\t{}\t{}\t{}\t{}'.format(r.identity_id, r.status, r.n_checks, r.elapsed_ms, witness))
    return lines


#%%
def format_listing(elements, output='pretty'):
    """Listing of signed permutations, one window per line or a JSON array."""
    if output == 'json':
        return dumps_json([perm_lib.format_window(p) for p in elements])
    return '\n'.join(perm_lib.format_window(p) for p in elements)


def format_block(block):
    """(1),(2,3),(4) followed by the parity tag."""
    return '{}  [{}]'.format(str(block), block.parity)

#!/usr/bin/env python3
"""
v1.0.0 20261019 The NegStat developers

========
Overview
========
This script runs identity verifications by exhaustive enumeration and
truncated series comparison, prints a summary table and optionally writes
one JSON report per identity plus summary.tsv.

Identities (use --list for the default parameters):
 macmahon_A fs1_A fs2_A stanley_A eqs_1_to_5 mahonian_B mahonian_D
 class_B class_B_des_variant class_B_dlen class_D split_props blocks_B blocks_D
 lemmino symmetry_B symmetry_D quotient_factorization poincare qbinomial
 roselle_A roselle_B roselle_D gessel_A gessel_B gessel_D

class_B_des_variant passes when a counterexample to the NDes variant is found.

Exit code: 0 if all pass, 1 if a verification fails, 2 on usage errors
(including unknown identity ids, which are skipped).

=====
Usage
=====
NegStat_verify.py [-i ids] [ids ...] [--n int] [--n-max int] [--set M] [--mode subset|exact]
  [--caps u=4,t=10,q=10] [--jobs int] [-o outdir] [--output pretty|json|tsv] [--list]
 (options and identity ids may be given in any order)

 -i        Comma separated identity ids, or all (Default: all)
 --n       Check this rank only
 --n-max   Check ranks 1..n-max (Default: per identity)
 --set     Check this descent set only (class identities)
 --mode    Check this mode only (class identities; Default: both)
 --caps    Caps of the series identities; missing variables keep defaults
           (Roselle u=4,t=10,q=10; Gessel u=3,t=8,q=8,p=3)
 --jobs    Number of parallel processing (Default: # of usable CPU)
 -o        Directory for JSON reports and summary.tsv (Default: none written)
 --output  pretty (Default), json or tsv
 --list    List identity ids and default parameters and exit

"""
#%% Change log
'''
v1.0.1 20261019 The NegStat developers
 - json output mode prints the banner and footer to stderr
 - Options may follow the identity ids (gnu_getopt)
v1.0.0 20261019 The NegStat developers
 - Original implementation
'''

#%% Import
from NegStat_meta import *
import contextlib
import getopt
import os
import sys
import time
import NegStat_identity_lib as identity_lib
import NegStat_io_lib as io_lib
import NegStat_tools_lib as tools_lib

class Usage(Exception):
    """Usage context manager"""
    def __init__(self, msg):
        self.msg = msg


#%% Main
def main(argv=None):

    #%% Check argv
    if argv == None:
        argv = sys.argv

    start = time.time()


    #%% Set default
    ids = []
    n = None
    n_max = None
    set_text = None
    mode = None
    caps = None
    outdir = []
    output = 'pretty'
    n_para = tools_lib.get_n_para()


    #%% Read options
    try:
        try:
            opts, args = getopt.gnu_getopt(argv[1:], "hi:o:",
                                       ["help", "n=", "n-max=", "set=", "mode=", "caps=", "jobs=",
                                        "output=", "list"])
        except getopt.error as msg:
            raise Usage(msg)
        for o, a in opts:
            if o == '-h' or o == '--help':
                print(__doc__)
                return 0
            elif o == '--list':
                for key, (_, defaults) in identity_lib.VERIFIERS.items():
                    print('  {:24s}{}'.format(key, defaults))
                return 0
            elif o == '-i':
                ids.extend(s.strip() for s in a.split(',') if s.strip())
            elif o == '-o':
                outdir = a
            elif o == '--n':
                n = a
            elif o == '--n-max':
                n_max = a
            elif o == '--set':
                set_text = a
            elif o == '--mode':
                mode = a
            elif o == '--caps':
                caps = a
            elif o == '--jobs':
                n_para = a
            elif o == '--output':
                output = a

        ids.extend(args)
        if not ids or 'all' in ids:
            ids = list(identity_lib.VERIFIERS)
        try:
            if n is not None:
                n = tools_lib.parse_rank(n, '--n')
            if n_max is not None:
                n_max = tools_lib.parse_rank(n_max, '--n-max')
            if caps is not None:
                caps = tools_lib.parse_caps(caps)
            n_para = tools_lib.parse_rank(n_para, '--jobs')
        except ValueError as err:
            raise Usage(err)
        if mode not in (None, 'subset', 'exact'):
            raise Usage('--mode must be subset or exact (got {})'.format(mode))
        if output not in ('pretty', 'json', 'tsv'):
            raise Usage('--output must be pretty, json or tsv (got {})'.format(output))

    except Usage as err:
        print("\nERROR:", file=sys.stderr, end='')
        print("  "+str(err.msg), file=sys.stderr)
        print("\nFor help, use -h or --help.\n", file=sys.stderr)
        return 2


    #%% Banner; json mode keeps stdout for the document
    info = sys.stderr if output == 'json' else sys.stdout
    print("\n{} ver{} {} {}".format(os.path.basename(argv[0]), ver, date, author), file=info, flush=True)
    print("{} {}".format(os.path.basename(argv[0]), ' '.join(argv[1:])), file=info, flush=True)


    #%% Unknown ids are skipped
    unknown = [i for i in ids if i not in identity_lib.VERIFIERS]
    ids = [i for i in ids if i in identity_lib.VERIFIERS]
    for i in unknown:
        print("\nERROR:  unknown identity id {}, skipped".format(i), file=sys.stderr)


    #%% Run
    print('\nVerify {} identities'.format(len(ids)), file=info, flush=True)
    try:
        with contextlib.redirect_stdout(info):
            reports = identity_lib.verify_many(ids, n_para=n_para, n=n, n_max=n_max, M=set_text,
                                               mode=mode, caps=caps)
    except (ValueError, ArithmeticError) as err:
        print("\nERROR:", file=sys.stderr, end='')
        print("  "+str(err), file=sys.stderr)
        return 2


    #%% Output
    if output == 'json':
        print(io_lib.dumps_json([r.to_json_obj(with_timing=False) for r in reports]), flush=True)
    elif output == 'tsv':
        print('\n'.join(io_lib.summary_lines(reports)), flush=True)
    else:
        print('')
        for r in reports:
            print('  {:24s}{:6s}{:8d} checks {:10d} ms'.format(r.identity_id, r.status, r.n_checks,
                                                              r.elapsed_ms), flush=True)
            for note in r.notes:
                print('      {}'.format(note))
            if r.witness is not None:
                print('      witness: {}'.format(r.witness))

    if outdir:
        files = io_lib.write_reports(outdir, reports)
        print('\n{} files written to {}'.format(len(files), os.path.relpath(outdir)), file=info, flush=True)

    n_fail = sum(1 for r in reports if not r.passed)
    print('\n{} passed, {} failed, {} unknown'.format(len(reports)-n_fail, n_fail, len(unknown)), file=info)

    elapsed_time = time.time() - start
    hour = int(elapsed_time / 3600)
    minite = int((elapsed_time / 60) % 60)
    sec = int(elapsed_time % 60)
    print("\nElapsed time: {0:02}h {1:02}m {2:02}s".format(hour, minite, sec), file=info)

    if unknown:
        return 2
    if n_fail:
        return 1
    print('\n{} Successfully finished!!\n'.format(os.path.basename(argv[0])), file=info)
    return 0


#%% main
if __name__ == "__main__":
    sys.exit(main())

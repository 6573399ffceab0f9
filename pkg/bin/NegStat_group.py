#!/usr/bin/env python3
"""
v1.0.0 20261019 The NegStat developers

========
Overview
========
This script lists S_n (A), B_n or D_n, or the increasing quotient B^J/D^J
(--quotient), with the statistics of every element.

=====
Usage
=====
NegStat_group.py -g A|B|D -n rank [--quotient] [--count] [--output pretty|json|tsv]

 -g  Group (A, B or D)
 -n  Rank
 --quotient  List the elements with increasing window (B and D only)
 --count     Print the number of elements only
 --output    pretty (Default, windows only), json or tsv (windows and statistics)

"""
#%% Change log
'''
v1.0.1 20261019 The NegStat developers
 - json output mode prints the banner to stderr
v1.0.0 20261019 The NegStat developers
 - Original implementation
'''

#%% Import
from NegStat_meta import *
import getopt
import os
import sys
import NegStat_perm_lib as perm_lib
import NegStat_enum_lib as enum_lib
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



    #%% Set default
    group = []
    n = []
    quotient = False
    count_only = False
    output = 'pretty'


    #%% Read options
    try:
        try:
            opts, args = getopt.getopt(argv[1:], "hg:n:",
                                       ["help", "group=", "n=", "quotient", "count", "output="])
        except getopt.error as msg:
            raise Usage(msg)
        for o, a in opts:
            if o == '-h' or o == '--help':
                print(__doc__)
                return 0
            elif o == '-g' or o == '--group':
                group = a
            elif o == '-n' or o == '--n':
                n = a
            elif o == '--quotient':
                quotient = True
            elif o == '--count':
                count_only = True
            elif o == '--output':
                output = a

        if not group:
            raise Usage('No group given, -g is not optional!')
        if not n:
            raise Usage('No rank given, -n is not optional!')
        try:
            group = tools_lib.parse_group(group)
            n = tools_lib.parse_rank(n)
        except ValueError as err:
            raise Usage(err)
        if quotient and group == 'A':
            raise Usage('--quotient needs group B or D')
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


    #%% Enumerate
    if quotient:
        elements = enum_lib.quotient_increasing(group, n)
        label = '{}^J'.format(group)
    else:
        elements = enum_lib.iter_group(group, n)
        label = 'S' if group == 'A' else group

    if count_only:
        count = sum(1 for _ in elements)
        if output == 'json':
            print(io_lib.dumps_json({'group': label, 'n': n, 'count': count}), flush=True)
        else:
            print('\n{}_{}: {} elements'.format(label, n, count), flush=True)
        return 0

    if output == 'json':
        out = [{'window': perm_lib.format_window(p),
                'statistics': {k: getattr(perm_lib.statistics(p), k) for k in perm_lib.STAT_KEYS}}
               for p in elements]
        print(io_lib.dumps_json(out), flush=True)
    elif output == 'tsv':
        print('window\t' + '\t'.join(perm_lib.STAT_KEYS))
        for p in elements:
            b = perm_lib.statistics(p)
            print(perm_lib.format_window(p) + '\t' + '\t'.join(str(getattr(b, k)) for k in perm_lib.STAT_KEYS))
    else:
        print('\n{}_{}:'.format(label, n))
        for p in elements:
            print(perm_lib.format_window(p))

    return 0


#%% main
if __name__ == "__main__":
    sys.exit(main())

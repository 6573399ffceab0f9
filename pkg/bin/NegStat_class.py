#!/usr/bin/env python3
"""
v1.0.0 20261019 The NegStat developers

========
Overview
========
This script lists a descent class of S_n (A), B_n or D_n, i.e. the elements
whose inverse has its descent set inside M (subset mode) or equal to M
(exact mode), together with its generating functions and closed form.

The class is built by filtering the group (--filter), by shuffling the
block sequences of the class (--construct, subset mode only), or both
(--both), which also reports whether the two agree.

Descent flavors: Des for A, Des_B for B, Des_D for D.

=====
Usage
=====
NegStat_class.py -g A|B|D -n rank [-s M] [--mode subset|exact]
  [--construct|--filter|--both] [--count] [--unrestricted] [--output pretty|json]

 -g  Group (A, B or D)
 -n  Rank
 -s  Descent set, comma separated (Default: empty set). 0 is allowed for B and D.
 --mode          subset (Default) or exact
 --construct     Build the class from its shuffle blocks (echoes the blocks)
 --filter        Filter the group (Default)
 --both          Do both and compare
 --count         Print the cardinality instead of the elements
 --unrestricted  With -g D and --filter, tabulate the Des_D class over all of B_n
 --output        pretty (Default) or json

"""
#%% Change log
'''
v1.0.1 20261019 The NegStat developers
 - json output mode prints the banner and footer to stderr
v1.0.0 20261019 The NegStat developers
 - Original implementation
'''

#%% Import
from NegStat_meta import *
import getopt
import os
import sys
import time
import NegStat_perm_lib as perm_lib
import NegStat_enum_lib as enum_lib
import NegStat_identity_lib as identity_lib
import NegStat_io_lib as io_lib
import NegStat_tools_lib as tools_lib

class Usage(Exception):
    """Usage context manager"""
    def __init__(self, msg):
        self.msg = msg


GF_KEYS = {'A': ('maj', 'inv'),
           'B': ('nmaj', 'len_B', 'fmaj', 'len_D'),
           'D': ('dmaj', 'len_D')}


#%% Main
def main(argv=None):

    #%% Check argv
    if argv == None:
        argv = sys.argv

    start = time.time()


    #%% Set default
    group = []
    n = []
    set_text = ''
    mode = 'subset'
    method = 'filter'
    count_only = False
    restrict = True
    output = 'pretty'


    #%% Read options
    try:
        try:
            opts, args = getopt.getopt(argv[1:], "hg:n:s:",
                                       ["help", "group=", "n=", "set=", "mode=", "construct",
                                        "filter", "both", "count", "unrestricted", "output="])
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
            elif o == '-s' or o == '--set':
                set_text = a
            elif o == '--mode':
                mode = a
            elif o == '--construct':
                method = 'construct'
            elif o == '--filter':
                method = 'filter'
            elif o == '--both':
                method = 'both'
            elif o == '--count':
                count_only = True
            elif o == '--unrestricted':
                restrict = False
            elif o == '--output':
                output = a

        if not group:
            raise Usage('No group given, -g is not optional!')
        if not n:
            raise Usage('No rank given, -n is not optional!')
        try:
            group = tools_lib.parse_group(group)
            n = tools_lib.parse_rank(n)
            M = perm_lib.parse_descent_set(set_text, n, allow_zero=(group != 'A'))
            spec = enum_lib.class_spec(group, n, M, mode, restrict=restrict)
        except (ValueError, perm_lib.DescentSetError, enum_lib.EnumerationError) as err:
            raise Usage(err)
        if output not in ('pretty', 'json'):
            raise Usage('--output must be pretty or json (got {})'.format(output))
        if method != 'filter' and mode != 'subset':
            raise Usage('--construct/--both need --mode subset (blocks describe subset classes)')
        if not restrict and (group != 'D' or method != 'filter'):
            raise Usage('--unrestricted needs -g D with --filter')

    except Usage as err:
        print("\nERROR:", file=sys.stderr, end='')
        print("  "+str(err.msg), file=sys.stderr)
        print("\nFor help, use -h or --help.\n", file=sys.stderr)
        return 2


    #%% Banner; json mode keeps stdout for the document
    info = sys.stderr if output == 'json' else sys.stdout
    print("\n{} ver{} {} {}".format(os.path.basename(argv[0]), ver, date, author), file=info, flush=True)
    print("{} {}".format(os.path.basename(argv[0]), ' '.join(argv[1:])), file=info, flush=True)


    #%% Build class
    out = {'group': group, 'n': n, 'M': str(M), 'mode': mode, 'method': method}
    blocks = []
    if method in ('construct', 'both'):
        if group == 'D':
            blocks = [(tag, rs, b) for tag, rs, b in enum_lib.descent_class_blocks_D(n, M)]
        elif group == 'B':
            blocks = [('', rs, b) for rs, b in enum_lib.descent_class_blocks_B(n, M)]
        else:
            blocks = [('', rs, b) for rs, b in enum_lib.descent_class_blocks_A(n, M)]
        constructed = enum_lib.constructive_class(group, n, M)
        out['blocks'] = [dict(b.to_json_obj(), case=tag, r=list(rs)) for tag, rs, b in blocks]
    if method in ('filter', 'both'):
        filtered = enum_lib.descent_class_filter(spec)
    elements = filtered if method != 'construct' else constructed
    agree = None
    if method == 'both':
        agree = constructed == filtered
        out['agree'] = agree


    #%% Generating functions
    caps = tools_lib.default_gf_caps(n)
    gfs = {key: identity_lib.gf(elements, [(key, 'q')], caps) for key in GF_KEYS[group]}
    closed = None
    if restrict:
        if mode == 'subset':
            closed = {'A': identity_lib.closed_form_A, 'B': identity_lib.closed_form_B,
                      'D': identity_lib.closed_form_D}[group](n, M)
        else:
            closed = identity_lib.inclusion_exclusion(
                M, lambda N: {'A': identity_lib.closed_form_A, 'B': identity_lib.closed_form_B,
                              'D': identity_lib.closed_form_D}[group](n, N))


    #%% Output
    out['count'] = len(elements)
    if not count_only:
        out['elements'] = [perm_lib.format_window(p) for p in elements]
    out['gf'] = {key: f.to_json_obj() for key, f in gfs.items()}
    if closed is not None:
        out['closed_form'] = closed.to_json_obj()

    if output == 'json':
        print(io_lib.dumps_json(out), flush=True)
    else:
        label = '{}({{{}}})'.format(group, M) if restrict else 'Des_D class of B_{} for {{{}}}'.format(n, M)
        print('\n{} n={} {} mode: {} elements'.format(label, n, mode, len(elements)), flush=True)
        if blocks:
            print('\nBlocks:')
            for tag, rs, b in blocks:
                print('  {:8s}r={:12s}{}'.format(tag, str(list(rs)), io_lib.format_block(b)))
        if not count_only:
            print('\nElements:')
            print(io_lib.format_listing(elements))
        print('\nGenerating functions:')
        for key, f in gfs.items():
            print('  {:8s}{}'.format(key, f))
        if closed is not None:
            print('  {:8s}{}'.format('closed', closed))
        if agree is not None:
            print('\nConstructive and filtered classes {}'.format('agree' if agree else 'DIFFER'), flush=True)

    elapsed_time = time.time() - start
    print("\nElapsed time: {0:.2f}s".format(elapsed_time), file=info)

    return 0 if agree in (None, True) else 1


#%% main
if __name__ == "__main__":
    sys.exit(main())

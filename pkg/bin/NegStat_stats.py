#!/usr/bin/env python3
"""
v1.0.0 20261019 The NegStat developers

========
Overview
========
This script prints every statistic of a signed permutation given in window
notation: inv, maj, des, N1, N2, the lengths len_B and len_D, the negative
statistics nmaj, ndes, dmaj, ddes, the flag major index fmaj, epsilon, the
descent sets Des, Des_B, Des_D and the multisets NDes and DDes.

ddes is |DDes| counted with multiplicity, so ddes = des + N1 + epsilon.

=====
Usage
=====
NegStat_stats.py -w window [--output pretty|json]

 -w        Window, e.g. "[-3,1,-6,2,-4,-5]" (may also be given as argument)
 --output  pretty (Default) or json

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
import NegStat_io_lib as io_lib

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
    window_text = []
    output = 'pretty'


    #%% Read options
    try:
        try:
            opts, args = getopt.getopt(argv[1:], "hw:", ["help", "window=", "output="])
        except getopt.error as msg:
            raise Usage(msg)
        for o, a in opts:
            if o == '-h' or o == '--help':
                print(__doc__)
                return 0
            elif o == '-w' or o == '--window':
                window_text = a
            elif o == '--output':
                output = a

        if not window_text and args:
            window_text = args[0]
        if not window_text:
            raise Usage('No window given, -w is not optional!')
        if output not in ('pretty', 'json'):
            raise Usage('--output must be pretty or json (got {})'.format(output))
        try:
            p = perm_lib.parse_window(window_text)
        except perm_lib.WindowError as err:
            raise Usage(err)

    except Usage as err:
        print("\nERROR:", file=sys.stderr, end='')
        print("  "+str(err.msg), file=sys.stderr)
        print("\nFor help, use -h or --help.\n", file=sys.stderr)
        return 2


    #%% Banner; json mode keeps stdout for the document
    info = sys.stderr if output == 'json' else sys.stdout
    print("\n{} ver{} {} {}".format(os.path.basename(argv[0]), ver, date, author), file=info, flush=True)
    print("{} {}".format(os.path.basename(argv[0]), ' '.join(argv[1:])), file=info, flush=True)


    #%% Statistics
    bundle = perm_lib.statistics(p)
    violated = perm_lib.check_bundle(p, bundle)

    if output == 'json':
        out = {'window': perm_lib.format_window(p), 'n': p.n,
               'statistics': io_lib.bundle_to_dict(bundle), 'violated': violated}
        print(io_lib.dumps_json(out), flush=True)
    else:
        print('\nwindow  {}  (n={}, {})'.format(perm_lib.format_window(p), p.n,
              'even-signed' if perm_lib.is_even_signed(p) else 'odd-signed'))
        for key in ('inv', 'maj', 'des', 'n1', 'n2', 'len_B', 'len_D', 'nmaj', 'ndes',
                    'dmaj', 'ddes', 'fmaj', 'epsilon'):
            print('  {:8s}{}'.format(key, getattr(bundle, key)))
        print('  {:8s}{{{}}}'.format('Des', bundle.des_set))
        print('  {:8s}{{{}}}'.format('Des_B', bundle.des_B_set))
        print('  {:8s}{{{}}}'.format('Des_D', bundle.des_D_set))
        print('  {:8s}{{{}}}'.format('NDes', ','.join(str(v) for v in bundle.ndes_multiset)))
        print('  {:8s}{{{}}}'.format('DDes', ','.join(str(v) for v in bundle.ddes_multiset)))
        print('\nNote: ddes counts DDes with multiplicity (des + n1 + epsilon).')
        if violated:
            print('\nViolated relations: {}'.format(', '.join(violated)), flush=True)
        else:
            print('\nAll statistic relations hold.', flush=True)

    return 0 if not violated else 1


#%% main
if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""
v1.0.0 20261019 The NegStat developers

This script checks if NegStat install is OK or not.

"""
#%% Change log
'''
v1.0.0 20261019 The NegStat developers
 - Original implementation
'''


#%% Import
from importlib import import_module
import platform
import shutil
import sys


#%% Main
if __name__ == "__main__":
    flag = True
    modules = ['numpy',
               'sympy',
               ]


    print('\nPython version: {}'.format(platform.python_version()))
    pyver = platform.python_version_tuple()
    if int(pyver[0]) < 3 or (int(pyver[0]) == 3 and int(pyver[1]) < 8):
        print('  ERROR: must be >= 3.8')
        flag = False
    else:
        print('  OK')


    print('\nCheck required modules and versions')
    for module in modules:
        try:
            imported = import_module(module)
        except Exception as err:
            print('  ERROR: {}'.format(err))
            flag = False
        else:
            ver = imported.__version__
            print('  {}({}) OK'.format(module, ver))

    try:
        imported = import_module('pytest')
    except Exception:
        print('  pytest not found (only needed to run tests/)')
    else:
        print('  pytest({}) OK'.format(imported.__version__))


    print('\nCheck NegStat commands')
    rc = shutil.which('NegStat_verify.py')
    if rc is None:
        print('  ERROR: PATH is not set to NegStat commands')
        flag = False
    else:
        print('  OK')


    print('\nCheck NegStat library')
    try:
         imported = import_module('NegStat_perm_lib')
    except Exception:
         print('  ERROR: PYTHONPATH is not set to NegStat library')
         flag = False
    else:
         print('  OK')


    if flag:
        print('\nNegStat install is OK\n')
        sys.exit(0)
    else:
        print('\nERROR: NegStat install is NOT OK\n')
        sys.exit(1)

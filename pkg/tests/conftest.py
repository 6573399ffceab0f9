import os
import sys

here = os.path.dirname(os.path.abspath(__file__))
for d in ('NegStat_lib', 'bin'):
    path = os.path.join(os.path.dirname(here), d)
    if path not in sys.path:
        sys.path.insert(0, path)

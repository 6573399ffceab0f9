# version control
ver='1.0.0'
date='2026-10-19'
author="The NegStat developers"

# numpy must not spawn its own threads inside the fork pool workers
import os
os.environ["OMP_NUM_THREADS"] = '1'

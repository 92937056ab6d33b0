"""
The command-line tool
=====================

``hilbsegre`` (or ``python -m hilbsegre``) computes tables, runs checker
grids and compares series.  This script calls it through ``subprocess``
with a throwaway cache directory.
"""

import os
import subprocess
import sys
import tempfile

cache = tempfile.mkdtemp(prefix="hilbsegre-demo-")
env = dict(os.environ, HILBSEGRE_CACHE_DIR=cache)


def hilbsegre(*args):
    cmd = [sys.executable, "-m", "hilbsegre", *args]
    print("$ hilbsegre", " ".join(args))
    proc = subprocess.run(cmd, capture_output=True, text=True, env=env)
    print(proc.stdout, end="")
    print(f"(exit {proc.returncode})\n")


# %%
# Integral tables in three formats.

hilbsegre("integrals", "--n-max", "4")
hilbsegre("integrals", "--n-max", "3", "--d", "1,2,3,4", "--format", "csv")
hilbsegre("integrals", "--n-max", "2", "--format", "json")

# %%
# A checker grid.  Exit status 0 means every check passed.

hilbsegre("verify", "main-theorem", "--k-max", "3", "--m-max", "6", "--n-max", "5")

# %%
# Series comparison and fit.

hilbsegre("series", "closed-form", "--c2", "9", "--c1sq", "9", "--c1k", "-9", "--order", "6")
hilbsegre("series", "compare", "--d", "1,2,4,5", "--order", "5")
hilbsegre("series", "fit", "--d-list", "1,2,4,5", "--order", "5")

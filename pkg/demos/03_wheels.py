"""
Wheel sharblies
===============

The wheel on e_1..e_n and the rim vectors e_i - e_(i+1) is a cycle. In odd
rank it is a nonzero primitive; in even rank it vanishes. Rank 5 needs a
width cap of at least 10 columns.
"""

import os
import time

os.environ.setdefault("SHARBLY_MAX_COLS", "10")

from sharbly import is_cycle, is_primitive, wheel  # noqa: E402

for n in (3, 4, 5):
    start = time.perf_counter()
    w = wheel(n)
    if w.is_zero():
        print(f"w{n} = 0")
        continue
    print(f"w{n}: cycle={is_cycle(w)} primitive={is_primitive(w)} ({time.perf_counter() - start:.2f}s)")

"""Timing the biobjective algorithm on growing random fronts.

Doubling N should roughly double the time (a little more, for the sort).
Run: python demos/04_scaling.py [max_exponent]
"""

import sys
import time

import numpy as np

from dommove import compute_dom_2d, make_set

top = int(sys.argv[1]) if len(sys.argv) > 1 else 18
rng = np.random.default_rng(0)


def front(n):
    x = np.sort(rng.uniform(0, 1, n))
    return make_set(np.column_stack([x, 1 - np.sqrt(x)]).tolist())


prev = None
print(f"{'N':>9}{'seconds':>10}{'ratio':>8}{'merges':>9}")
for e in range(12, top + 1):
    P, Q = front(1 << e), front(1 << e)
    t = time.perf_counter()
    res = compute_dom_2d(P, Q)
    dt = time.perf_counter() - t
    ratio = f"{dt / prev:8.2f}" if prev else " " * 8
    print(f"{1 << e:>9}{dt:>10.3f}{ratio}{len(res.trace):>9}")
    prev = dt

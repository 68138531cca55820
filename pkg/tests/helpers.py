"""Shared test helpers: random instance builders and fixed coordinates."""

import numpy as np
from hypothesis import strategies as st

from dommove import make_set


def grid_set(rng, n, m=2, step=0.1, hi=2.0):
    """n random points on a regular grid in [0, hi]^m."""
    k = int(round(hi / step))
    return make_set((rng.integers(0, k + 1, size=(n, m)) * step).tolist())


def dyadic_set(rng, n, m=2, k=16):
    """Points whose coordinates are multiples of 1/8, so float sums are exact."""
    return make_set((rng.integers(0, k + 1, size=(n, m)) / 8.0).tolist())


def random_front(rng, n):
    """n mutually nondominated points on a convex curve."""
    x = np.sort(rng.uniform(0, 1, n))
    return make_set(np.column_stack([x, 1 - np.sqrt(x)]).tolist())


coords = st.integers(0, 20).map(lambda v: v / 10)


def point_sets(m=2, min_size=1, max_size=6):
    return st.lists(st.lists(coords, min_size=m, max_size=m), min_size=min_size, max_size=max_size).map(make_set)


COUNTER_P = [[2.0, 2.0, 2.0], [2.0, 2.2, 1.5], [3.0, 1.6, 1.6]]
COUNTER_Q = [[2.0, 1.2, 2.1], [2.0, 2.1, 1.0], [4.0, 1.5, 1.5]]


# PASS/FAIL lines from the acceptance suite, printed in the terminal summary
ACCEPTANCE_RESULTS = []

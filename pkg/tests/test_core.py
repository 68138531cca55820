import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dommove import ValidationError, ideal_point, move_point_to_group, move_point_to_point, weakly_dominates
from dommove.model import DimensionError

from helpers import COUNTER_P, COUNTER_Q


def test_ideal_point():
    assert ideal_point([[1, 3], [3, 1]]).tolist() == [1, 1]
    assert ideal_point([COUNTER_P[1]] + COUNTER_Q).tolist() == [2.0, 1.2, 1.0]
    assert ideal_point([[4, 5]]).tolist() == [4, 5]
    with pytest.raises(ValidationError):
        ideal_point([])


def test_move_point_to_point():
    assert move_point_to_point(COUNTER_P[0], COUNTER_Q[0]) == pytest.approx(0.8, abs=1e-15)
    assert move_point_to_point(COUNTER_P[2], COUNTER_Q[2]) == pytest.approx(0.2, abs=1e-15)
    assert move_point_to_point([1, 1], [2, 3]) == 0.0
    with pytest.raises(DimensionError):
        move_point_to_point([1, 1], [1, 1, 1])


def test_move_point_to_group():
    # (2.2 - 1.2) + (1.5 - 1.0) in binary floating point
    assert move_point_to_group(COUNTER_P[1], COUNTER_Q) == pytest.approx(1.5, abs=4e-16)
    assert move_point_to_group([3, 1], [[1, 2]]) == move_point_to_point([3, 1], [1, 2])
    with pytest.raises(ValidationError):
        move_point_to_group([1, 1], [])


def sequential(p, order):
    """Accumulate a group move one point at a time via the two-part identity."""
    total, cur = 0.0, np.asarray(p, float)
    for q in order:
        total += move_point_to_point(cur, q)
        cur = np.minimum(cur, q)
    return total


def test_order_independence(rng):
    for _ in range(200):
        p = rng.integers(0, 9, 3) / 4
        Qs = rng.integers(0, 9, (4, 3)) / 4
        ref = move_point_to_group(p, Qs)
        for perm in itertools.permutations(range(4)):
            assert sequential(p, Qs[list(perm)]) == ref


vec = st.integers(2, 5).flatmap(
    lambda m: st.tuples(
        st.lists(st.floats(-10, 10), min_size=m, max_size=m),
        st.lists(st.lists(st.floats(-10, 10), min_size=m, max_size=m), min_size=1, max_size=4),
        st.lists(st.lists(st.floats(-10, 10), min_size=m, max_size=m), min_size=1, max_size=4),
    )
)


@given(vec)
def test_split_identity_and_subadditivity(args):
    p, Qs, Qt = args
    whole = move_point_to_group(p, Qs + Qt)
    first = move_point_to_group(p, Qs)
    rest = move_point_to_group(ideal_point(Qs + [p]), Qt)
    assert whole == pytest.approx(first + rest, rel=1e-12, abs=1e-12)
    # tight in many cases, so compare in exact arithmetic
    exact = lambda G: sum(Fraction(a) - min(Fraction(a), Fraction(min(q[j] for q in G))) for j, a in enumerate(p))  # noqa: E731
    assert exact(Qs + Qt) <= exact(Qs) + exact(Qt)


@given(vec)
def test_zero_iff_dominates(args):
    p, Qs, _ = args
    zero = move_point_to_group(p, Qs) == 0.0
    assert zero == all(weakly_dominates(p, q) for q in Qs)

"""Pareto dominance between points and sets, and nondominated filtering."""

from __future__ import annotations

from enum import Enum

import numpy as np

from .model import DimensionError, SolutionSet, ValidationError, as_vector, check_same_dim

__all__ = [
    "SetRelation",
    "weakly_dominates",
    "dominates",
    "set_weakly_dominates",
    "classify_relation",
    "nondominated_mask",
    "nondominated_filter",
    "reduce_pair",
]


class SetRelation(str, Enum):
    EQUAL = "equal"
    P_BETTER = "P_better"
    Q_BETTER = "Q_better"
    INCOMPARABLE = "incomparable"


def _pair(p, q):
    p, q = as_vector(p), as_vector(q)
    if p.shape != q.shape:
        raise DimensionError(f"dimension mismatch: {p.size} vs {q.size}")
    return p, q


def weakly_dominates(p, q) -> bool:
    """True iff ``p`` is no worse than ``q`` on every objective."""
    p, q = _pair(p, q)
    return bool(np.all(p <= q))


def dominates(p, q) -> bool:
    """True iff ``p`` weakly dominates ``q`` and is strictly better somewhere."""
    p, q = _pair(p, q)
    return bool(np.all(p <= q) and np.any(p < q))


def _covered_by(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Mask over rows of Q: weakly dominated by at least one row of P."""
    if P.shape[1] == 2:
        order = np.lexsort((P[:, 1], P[:, 0]))
        x = P[order, 0]
        best = np.minimum.accumulate(P[order, 1])
        k = np.searchsorted(x, Q[:, 0], side="right") - 1
        out = np.zeros(len(Q), dtype=bool)
        hit = k >= 0
        out[hit] = best[k[hit]] <= Q[hit, 1]
        return out
    out = np.zeros(len(Q), dtype=bool)
    for p in P:
        out |= np.all(p <= Q, axis=1)
    return out


def set_weakly_dominates(P: SolutionSet, Q: SolutionSet) -> bool:
    """True iff every point of Q is weakly dominated by some point of P."""
    check_same_dim(P, Q)
    return bool(np.all(_covered_by(P.points, Q.points)))


def classify_relation(P: SolutionSet, Q: SolutionSet) -> SetRelation:
    if len(P) == 0 or len(Q) == 0:
        raise ValidationError("cannot classify an empty set")
    pq = set_weakly_dominates(P, Q)
    qp = set_weakly_dominates(Q, P)
    if pq and qp:
        return SetRelation.EQUAL
    if pq:
        return SetRelation.P_BETTER
    if qp:
        return SetRelation.Q_BETTER
    return SetRelation.INCOMPARABLE


def _sweep_mask_2d(pts: np.ndarray) -> np.ndarray:
    # stable lexsort on (f1, f2, input index): first occurrence of a duplicate
    # comes first and survives, later copies fail the strict test below
    order = np.lexsort((np.arange(len(pts)), pts[:, 1], pts[:, 0]))
    f2 = pts[order, 1]
    prev_best = np.empty_like(f2)
    prev_best[0] = np.inf
    np.minimum.accumulate(f2[:-1], out=prev_best[1:])
    keep = np.zeros(len(pts), dtype=bool)
    keep[order[f2 < prev_best]] = True
    return keep


def _pairwise_mask(pts: np.ndarray) -> np.ndarray:
    n = len(pts)
    keep = np.ones(n, dtype=bool)
    for i in range(n):
        le = np.all(pts <= pts[i], axis=1)
        lt = np.any(pts < pts[i], axis=1)
        dominated = np.any(le & lt)
        earlier_copy = np.any(le[:i] & ~lt[:i])
        keep[i] = not (dominated or earlier_copy)
    return keep


def nondominated_mask(points: np.ndarray) -> np.ndarray:
    """Boolean mask of the nondominated rows; exact duplicates keep the first.

    Two objectives use an O(N log N) sort-and-sweep, other dimensions an
    O(m N^2) pairwise check.
    """
    points = np.asarray(points, dtype=np.float64)
    if len(points) == 0:
        return np.zeros(0, dtype=bool)
    if points.shape[1] == 2:
        return _sweep_mask_2d(points)
    return _pairwise_mask(points)


def nondominated_filter(S: SolutionSet) -> SolutionSet:
    if len(S) == 0:
        raise ValidationError("cannot filter an empty set")
    return S.subset(np.flatnonzero(nondominated_mask(S.points)))


def reduce_indices(P: SolutionSet, Q: SolutionSet) -> tuple[np.ndarray, np.ndarray]:
    """Indices (into the inputs, increasing) of the points kept by :func:`reduce_pair`."""
    check_same_dim(P, Q)
    ip = np.flatnonzero(nondominated_mask(P.points))
    iq = np.flatnonzero(nondominated_mask(Q.points))
    if iq.size and ip.size:
        iq = iq[~_covered_by(P.points[ip], Q.points[iq])]
    return ip, iq


def reduce_pair(P: SolutionSet, Q: SolutionSet) -> tuple[SolutionSet, SolutionSet]:
    """Drop points that cannot affect the dominance move of P to Q.

    P and Q are each reduced to their nondominated subsets, then every Q point
    weakly dominated by a point of P is dropped. The returned Q may be empty.
    """
    ip, iq = reduce_indices(P, Q)
    return P.subset(ip), Q.subset(iq)

"""Manhattan dominance-move primitives.

The move of a point ``p`` to a group ``G`` is the smallest total l1 distance
``p`` must travel so that it weakly dominates every member of ``G``::

    d(p, G) = sum_j (p_j - min(p_j, min_{g in G} g_j))

i.e. the l1 distance from ``p`` to the ideal point of ``G`` plus ``p``.
"""

from __future__ import annotations

import math

import numpy as np

from .model import DimensionError, ValidationError, as_vector

__all__ = ["ideal_point", "move_point_to_point", "move_point_to_group"]


def _group(points) -> np.ndarray:
    arr = np.asarray(points, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.size == 0:
        raise ValidationError("need a non-empty list of points")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("points must be finite")
    return arr


def ideal_point(points) -> np.ndarray:
    """Componentwise minimum of a non-empty collection of points."""
    return _group(points).min(axis=0)


def move_point_to_point(p, q) -> float:
    """sum_j max(0, p_j - q_j): zero exactly when p weakly dominates q."""
    p, q = as_vector(p), as_vector(q)
    if p.shape != q.shape:
        raise DimensionError(f"dimension mismatch: {p.size} vs {q.size}")
    return math.fsum((p - np.minimum(p, q)).tolist())


def move_point_to_group(p, group) -> float:
    p = as_vector(p)
    g = _group(group)
    if g.shape[1] != p.size:
        raise DimensionError(f"dimension mismatch: {p.size} vs {g.shape[1]}")
    return math.fsum((p - np.minimum(p, g.min(axis=0))).tolist())

"""Companion quality indicators: epsilon indicators and 2-D hypervolume."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import DimensionError, SolutionSet, ValidationError, as_vector, check_same_dim

__all__ = [
    "HvConfig",
    "epsilon_additive",
    "epsilon_multiplicative",
    "hypervolume_2d",
    "hypervolume_grid_oracle",
]

_CHUNK_ELEMS = 1 << 22


@dataclass(frozen=True)
class HvConfig:
    reference: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "reference", tuple(as_vector(self.reference).tolist()))


def _as_config(cfg) -> HvConfig:
    return cfg if isinstance(cfg, HvConfig) else HvConfig(tuple(cfg))


def _check_pair(P: SolutionSet, Q: SolutionSet) -> None:
    if len(P) == 0 or len(Q) == 0:
        raise ValidationError("epsilon indicator needs two non-empty sets")
    check_same_dim(P, Q)


def _max_min_max(P: np.ndarray, Q: np.ndarray, op) -> float:
    step = max(1, _CHUNK_ELEMS // (len(P) * P.shape[1]))
    worst = -np.inf
    for s in range(0, len(Q), step):
        q = Q[s : s + step]
        # (|q|, |P|, m) -> worst objective per pair -> best p per q
        per_q = op(P[None, :, :], q[:, None, :]).max(axis=2).min(axis=1)
        worst = max(worst, float(per_q.max()))
    return worst


def epsilon_additive(P: SolutionSet, Q: SolutionSet) -> float:
    """Smallest shift eps such that every q is weakly dominated by some p - eps.

    ``max_q min_p max_i (p_i - q_i)``. Negative when P is strictly better
    than Q everywhere; never floored at zero.
    """
    _check_pair(P, Q)
    return _max_min_max(P.points, Q.points, np.subtract)


def epsilon_multiplicative(P: SolutionSet, Q: SolutionSet) -> float:
    """``max_q min_p max_i p_i / q_i``; all coordinates must be positive."""
    _check_pair(P, Q)
    if np.any(P.points <= 0) or np.any(Q.points <= 0):
        raise ValidationError("multiplicative epsilon needs strictly positive coordinates")
    return _max_min_max(P.points, Q.points, np.divide)


def _in_bounds(S: SolutionSet, cfg: HvConfig) -> tuple[np.ndarray, np.ndarray]:
    if S.dim != 2 or len(cfg.reference) != 2:
        raise DimensionError("hypervolume_2d needs two objectives and a 2-D reference point")
    r = np.asarray(cfg.reference)
    pts = S.points
    # points that do not strictly beat the reference on both axes span no area
    return pts[np.all(pts < r, axis=1)], r


def hypervolume_2d(S: SolutionSet, cfg) -> float:
    """Exact area dominated by ``S`` and bounded by the reference point.

    >>> from dommove.model import make_set
    >>> hypervolume_2d(make_set([[2, 5], [4, 3]]), (10, 10))
    52.0
    """
    cfg = _as_config(cfg)
    pts, r = _in_bounds(S, cfg)
    if len(pts) == 0:
        return 0.0
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    x, y = pts[order, 0], pts[order, 1]
    best = np.minimum.accumulate(y)
    prev = np.concatenate(([r[1]], best[:-1]))
    step = prev - best
    keep = step > 0
    return float(np.sum((r[0] - x[keep]) * step[keep]))


def hypervolume_grid_oracle(S: SolutionSet, cfg, pitch: float) -> float:
    """Pixel-count estimate of the 2-D hypervolume.

    Counts the pixel centres of a regular grid laid from the ideal point of
    the in-bounds points up to the reference that some point weakly
    dominates. The error is bounded by roughly perimeter * pitch.
    """
    if not pitch > 0:
        raise ValidationError("pitch must be positive")
    cfg = _as_config(cfg)
    pts, r = _in_bounds(S, cfg)
    if len(pts) == 0:
        return 0.0
    lo = pts.min(axis=0)
    nx = int(np.ceil((r[0] - lo[0]) / pitch))
    ny = int(np.ceil((r[1] - lo[1]) / pitch))
    xs = lo[0] + (np.arange(nx) + 0.5) * pitch
    ys = lo[1] + (np.arange(ny) + 0.5) * pitch
    xs, ys = xs[xs < r[0]], ys[ys < r[1]]
    count = 0
    for start in range(0, xs.size, 256):
        cx = xs[start : start + 256]
        # lowest covered height in each pixel column, by direct scan
        reach = np.where(pts[None, :, 0] <= cx[:, None], pts[None, :, 1], np.inf).min(axis=1)
        count += int((ys.size - np.searchsorted(ys, reach, side="left")).sum())
    return count * pitch * pitch

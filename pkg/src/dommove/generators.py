"""Artificial set pairs that differ in exactly one quality aspect.

All sets lie on the linear front ``f1 + f2 = 2`` with ``f1`` in [0.2, 1.8]
(range 1.6 per objective), so every generated set is mutually nondominated.
Each generator returns ``(A, B)`` where one set is better by construction;
:data:`GENERATORS` records which one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import SolutionSet, ValidationError, make_set

__all__ = [
    "GENERATORS",
    "GeneratorSpec",
    "front",
    "gen_cardinality_count_pair",
    "gen_cardinality_pair",
    "gen_convergence_shift",
    "gen_extensity_pair",
    "gen_uniformity_pair",
]

LO, HI = 0.2, 1.8


def front(f1, label: str = "") -> SolutionSet:
    f1 = np.asarray(f1, dtype=np.float64)
    return make_set(np.column_stack([f1, 2.0 - f1]).tolist(), label)


def _uniform(points: int, lo: float = LO, hi: float = HI) -> np.ndarray:
    if points < 2:
        raise ValidationError("need at least two points")
    return np.linspace(lo, hi, points)


def gen_convergence_shift(points: int = 8, d1: float = 0.02, d2: float = 0.04) -> tuple[SolutionSet, SolutionSet]:
    """A on the front; B = A moved by ``-d1`` on f1 and ``+d2`` on f2.

    When the spacing of A exceeds ``d1 + d2`` the pointwise pairing is
    optimal, so D(A, B) = points * d1 and D(B, A) = points * d2.
    """
    if d1 < 0 or d2 < 0:
        raise ValidationError("shifts must be nonnegative")
    x = _uniform(points)
    gap = (HI - LO) / (points - 1)
    if not gap > d1 + d2:
        raise ValidationError(f"spacing {gap:.6g} must exceed d1 + d2 = {d1 + d2:.6g}")
    A = front(x, "A")
    B = make_set(np.column_stack([x - d1, 2.0 - x + d2]).tolist(), "B")
    return A, B


def gen_uniformity_pair(points: int = 10, mode: str = "random", seed: int | None = 0) -> tuple[SolutionSet, SolutionSet]:
    """A uniform; B with the same endpoints but uneven spacing.

    ``mode="random"`` draws B's interior points uniformly (seeded);
    ``mode="graded"`` makes B's gaps grow linearly from the bottom end
    (largest f1) to the top, independent of ``seed``.
    """
    if points < 3:
        raise ValidationError("need at least three points")
    A = front(_uniform(points), "A")
    if mode == "random":
        rng = np.random.default_rng(seed)
        inner = np.sort(rng.uniform(LO, HI, points - 2))
        xb = np.concatenate(([LO], inner, [HI]))
    elif mode == "graded":
        gaps = np.arange(1, points, dtype=np.float64)
        gaps *= (HI - LO) / gaps.sum()
        xb = HI - np.concatenate(([0.0], np.cumsum(gaps)))
        xb[-1] = LO
        xb = xb[::-1]
    else:
        raise ValidationError(f"unknown uniformity mode {mode!r}")
    return A, front(xb, "B")


def gen_extensity_pair(points: int = 9, shrink: float = 0.75) -> tuple[SolutionSet, SolutionSet]:
    """A spans the full range; B has the same size shrunk about the centre."""
    if not 0 < shrink < 1:
        raise ValidationError("shrink must lie in (0, 1)")
    mid, half = (LO + HI) / 2, (HI - LO) / 2 * shrink
    return front(_uniform(points), "A"), front(_uniform(points, mid - half, mid + half), "B")


def gen_cardinality_pair(points: int = 7, extra: int = 2, seed: int | None = None) -> tuple[SolutionSet, SolutionSet]:
    """A uniform; B is A plus ``extra`` front points placed inside A's gaps.

    Without a seed the extra points go to the midpoints of gaps spread
    evenly along the front; with a seed gaps and positions are random.
    B weakly dominates A, so D(B, A) = 0.
    """
    if extra < 0:
        raise ValidationError("extra must be nonnegative")
    x = _uniform(points)
    if seed is None:
        # spread the extras over the gaps; c points in one gap split it evenly
        slots = np.linspace(0, points - 2, extra + 2)[1:-1].round().astype(int) if extra else np.empty(0, int)
        slots = np.sort(slots)
        counts = np.bincount(slots, minlength=points - 1)
        rank = np.arange(extra) - np.searchsorted(slots, slots)
        frac = (rank + 1) / (counts[slots] + 1)
    else:
        rng = np.random.default_rng(seed)
        slots = rng.integers(0, points - 1, extra)
        frac = rng.uniform(0.1, 0.9, extra)
    new = x[slots] + frac * (x[slots + 1] - x[slots])
    xb = np.unique(np.concatenate([x, new]))
    return front(x, "A"), front(xb, "B")


def gen_cardinality_count_pair(points: int = 11, fewer: int = 1) -> tuple[SolutionSet, SolutionSet]:
    """A and B both uniform over the same range; B has ``fewer`` points less."""
    if not 1 <= fewer <= points - 2:
        raise ValidationError("fewer must be between 1 and points - 2")
    return front(_uniform(points), "A"), front(_uniform(points - fewer), "B")


@dataclass(frozen=True)
class GeneratorSpec:
    func: Callable[..., tuple[SolutionSet, SolutionSet]]
    better: str
    seeded: bool


# which set is better by construction, i.e. has the smaller dominance move
GENERATORS: dict[str, GeneratorSpec] = {
    "convergence": GeneratorSpec(gen_convergence_shift, "A", False),
    "uniformity": GeneratorSpec(gen_uniformity_pair, "A", True),
    "extensity": GeneratorSpec(gen_extensity_pair, "A", False),
    "cardinality": GeneratorSpec(gen_cardinality_pair, "B", True),
    "cardinality-count": GeneratorSpec(gen_cardinality_count_pair, "A", False),
}

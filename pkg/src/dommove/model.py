"""Core value types: objective vectors, solution sets, partitions and reports.

Everything here is immutable once built. Coordinates are stored as float64
arrays flagged read-only, so a :class:`SolutionSet` can be shared freely.
All objectives are minimised.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from collections.abc import Iterable, Sequence

import numpy as np

__all__ = [
    "DimensionError",
    "ValidationError",
    "SolutionSet",
    "Group",
    "Partition",
    "MergeEvent",
    "MergeTrace",
    "DomResult",
    "ComparisonReport",
    "make_set",
    "as_vector",
]

# An objective vector is a read-only 1-D float64 array.
ObjectiveVector = np.ndarray


class ValidationError(ValueError):
    """Raised when input values are malformed (empty, non-finite, ...)."""


class DimensionError(ValidationError):
    """Raised when points or sets of different dimension are combined."""


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def as_vector(p) -> ObjectiveVector:
    """Coerce ``p`` to a finite 1-D float64 array."""
    arr = np.asarray(p, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValidationError(f"objective vector must be a non-empty 1-D sequence, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"objective vector has non-finite values: {arr.tolist()}")
    return arr


@dataclass(frozen=True, eq=False)
class SolutionSet:
    """An ordered collection of objective vectors of a common dimension.

    Duplicates and dominated points are kept as given; use
    :func:`dommove.pareto.nondominated_filter` to drop them.
    """

    points: np.ndarray
    label: str = ""

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]

    def __getitem__(self, i: int) -> ObjectiveVector:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def rows(self) -> list[list[float]]:
        return self.points.tolist()

    def subset(self, indices: Sequence[int], label: str | None = None) -> "SolutionSet":
        idx = np.asarray(indices, dtype=np.intp)
        pts = self.points[idx] if idx.size else np.empty((0, self.dim))
        return SolutionSet(_frozen(np.array(pts, dtype=np.float64)), self.label if label is None else label)

    def __repr__(self) -> str:
        return f"SolutionSet(label={self.label!r}, n={len(self)}, dim={self.dim})"


def make_set(rows: Iterable[Sequence[float]], label: str = "") -> SolutionSet:
    """Build a :class:`SolutionSet` from a list of rows.

    Input order is preserved and no filtering is applied.

    >>> make_set([[1, 2], [3, 1]]).dim
    2
    """
    rows = [list(r) for r in rows]
    if not rows:
        raise ValidationError("a solution set needs at least one point")
    m = len(rows[0])
    if m == 0:
        raise ValidationError("points need at least one objective")
    for i, r in enumerate(rows):
        if len(r) != m:
            raise DimensionError(f"row {i} has {len(r)} values, expected {m}")
    try:
        arr = np.array(rows, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"non-numeric value in rows: {exc}") from None
    bad = np.argwhere(~np.isfinite(arr))
    if bad.size:
        i, j = bad[0]
        raise ValidationError(f"non-finite value {arr[i, j]!r} at row {i}, column {j}")
    return SolutionSet(_frozen(arr), label)


def _coerce_set(s, label: str = "") -> SolutionSet:
    if isinstance(s, SolutionSet):
        return s
    return make_set(np.asarray(s, dtype=np.float64).tolist(), label)


def check_same_dim(a: SolutionSet, b: SolutionSet) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")


@dataclass(frozen=True)
class Group:
    anchor: int
    members: frozenset[int]
    move: float


@dataclass(frozen=True, eq=False)
class Partition:
    """Assignment of retained Q points to P anchors.

    ``assignment[j]`` is the index (into the original P) of the point that
    covers Q point ``j``, or -1 when ``j`` was dropped during reduction.
    ``anchors`` and ``moves`` list one entry per group, sorted by anchor.
    """

    assignment: np.ndarray
    anchors: np.ndarray
    moves: np.ndarray
    total_move: float

    @cached_property
    def groups(self) -> list[Group]:
        order = np.argsort(self.assignment, kind="stable")
        keyed = self.assignment[order]
        lo = np.searchsorted(keyed, self.anchors, side="left")
        hi = np.searchsorted(keyed, self.anchors, side="right")
        return [
            Group(a, frozenset(order[i:j].tolist()), mv)
            for a, i, j, mv in zip(self.anchors.tolist(), lo.tolist(), hi.tolist(), self.moves.tolist())
        ]

    @property
    def retained(self) -> frozenset[int]:
        return frozenset(np.flatnonzero(self.assignment >= 0).tolist())

    @classmethod
    def empty(cls, n_q: int) -> "Partition":
        return cls(
            _frozen(np.full(n_q, -1, dtype=np.intp)),
            _frozen(np.empty(0, dtype=np.intp)),
            _frozen(np.empty(0)),
            0.0,
        )

    @classmethod
    def from_assignment(cls, P: SolutionSet, Q: SolutionSet, assignment) -> "Partition":
        """Evaluate an explicit assignment with the point-to-group move."""
        assignment = np.asarray(assignment, dtype=np.intp)
        if assignment.shape != (len(Q),):
            raise ValidationError(f"assignment needs one entry per Q point ({len(Q)})")
        if np.any(assignment >= len(P)):
            raise ValidationError("assignment refers to a P index out of range")
        anchors = np.unique(assignment[assignment >= 0])
        moves = np.empty(anchors.size)
        for k, a in enumerate(anchors):
            p = P.points[a]
            ideal = np.minimum(p, Q.points[assignment == a].min(axis=0))
            moves[k] = math.fsum((p - ideal).tolist())
        return cls(_frozen(assignment), _frozen(anchors), _frozen(moves), math.fsum(moves.tolist()))


@dataclass(frozen=True)
class MergeEvent:
    """Two Q nodes that were each other's inward neighbor, fused into one.

    ``left`` and ``right`` are the Q indices of the leftmost members of the
    two nodes (sorted by the first objective); ``ideal`` is the new node.
    """

    left: int
    right: int
    ideal: tuple[float, ...]


class MergeTrace(Sequence[MergeEvent]):
    """Read-only sequence of merge events backed by arrays."""

    def __init__(self, left=(), right=(), ideal=None):
        self.left = _frozen(np.asarray(left, dtype=np.intp))
        self.right = _frozen(np.asarray(right, dtype=np.intp))
        if ideal is None:
            ideal = np.empty((self.left.size, 2))
        self.ideal = _frozen(np.asarray(ideal, dtype=np.float64))

    def __len__(self) -> int:
        return self.left.size

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[k] for k in range(*i.indices(len(self)))]
        return MergeEvent(int(self.left[i]), int(self.right[i]), tuple(self.ideal[i].tolist()))

    def __eq__(self, other) -> bool:
        if isinstance(other, MergeTrace):
            return (
                np.array_equal(self.left, other.left)
                and np.array_equal(self.right, other.right)
                and np.array_equal(self.ideal, other.ideal)
            )
        return NotImplemented

    def __repr__(self) -> str:
        return f"MergeTrace({len(self)} events)"


@dataclass(frozen=True, eq=False)
class DomResult:
    value: float
    partition: Partition
    trace: MergeTrace = field(default_factory=MergeTrace)


@dataclass(frozen=True)
class ComparisonReport:
    relation: str
    dom_pq: float
    dom_qp: float
    eps_pq: float
    eps_qp: float
    hv_p: float | None = None
    hv_q: float | None = None

    def as_dict(self) -> dict:
        out = {
            "relation": self.relation,
            "dom_pq": self.dom_pq,
            "dom_qp": self.dom_qp,
            "eps_pq": self.eps_pq,
            "eps_qp": self.eps_qp,
        }
        if self.hv_p is not None:
            out["hv_p"] = self.hv_p
            out["hv_q"] = self.hv_q
        return out

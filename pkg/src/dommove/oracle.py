"""Exact dominance move in any dimension by exhaustive enumeration.

Every feasible move of P induces a cover of Q in which each Q point is taken
care of by one moved P point, and the point-to-group move is a lower bound
for each P point's travel. So D(P, Q) is the minimum, over all maps from the
(reduced) Q points to P points, of the summed point-to-group moves. This
holds for any number of objectives; it is only practical for small inputs.

The enumeration visits all ``n ** L`` maps. To keep that affordable the move
of each P point onto every subset of Q is tabulated first, so scoring a map
costs ``n`` table lookups instead of a pass over the coordinates.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .model import DomResult, Partition, SolutionSet, ValidationError, check_same_dim
from .pareto import reduce_indices

__all__ = ["BudgetExceeded", "DEFAULT_BUDGET", "default_budget", "dom_brute_force"]

DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 15
_TABLE_MAX_Q = 16  # subset-cost tables hold n * 2**L entries


class BudgetExceeded(RuntimeError):
    """The instance is too large for exhaustive enumeration."""


def default_budget() -> int:
    raw = os.environ.get("DOMMOVE_ORACLE_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"DOMMOVE_ORACLE_BUDGET must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValidationError("DOMMOVE_ORACLE_BUDGET must be positive")
    return value


def _digits(start: int, stop: int, n: int, L: int) -> np.ndarray:
    """Assignments start..stop-1 in mixed radix; Q point 0 varies fastest."""
    codes = np.arange(start, stop, dtype=np.int64)
    out = np.empty((codes.size, L), dtype=np.intp)
    for j in range(L):
        codes, out[:, j] = np.divmod(codes, n)
    return out


def _costs(p: np.ndarray, q: np.ndarray, assign: np.ndarray) -> np.ndarray:
    """Summed point-to-group move for each row of ``assign``."""
    total = np.zeros(len(assign))
    for a in range(len(p)):
        member = (assign == a)[:, :, None]
        gmin = np.where(member, q[None, :, :], np.inf).min(axis=1)
        total += (p[a] - np.minimum(p[a], gmin)).sum(axis=1)
    return total


def _subset_costs(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """cost[a, mask]: move of anchor ``a`` onto the Q points whose bits are set."""
    L, m = q.shape
    ideal = np.full((1 << L, m), np.inf)
    for j in range(L):
        ideal[1 << j : 2 << j] = np.minimum(ideal[: 1 << j], q[j])
    return (p[:, None, :] - np.minimum(p[:, None, :], ideal[None, :, :])).sum(axis=2)


def _masks(digits: np.ndarray, n: int, shift: int) -> np.ndarray:
    """Bit mask of the Q points each anchor receives, one row per assignment."""
    bits = np.left_shift(1, np.arange(digits.shape[1]) + shift)
    return np.stack([((digits == a) * bits).sum(axis=1) for a in range(n)], axis=1)


def _best_by_table(p: np.ndarray, q: np.ndarray) -> tuple[float, np.ndarray]:
    # split Q into a fast-varying low half and a slow high half; every
    # assignment is a pair (low, high) and its cost is n table lookups
    n, L = len(p), len(q)
    cost = _subset_costs(p, q)
    h = L // 2
    low = _digits(0, n**h, n, h)
    high = _digits(0, n ** (L - h), n, L - h)
    m_low, m_high = _masks(low, n, 0), _masks(high, n, h)
    rows = max(1, _CHUNK * 8 // (len(low) * n))
    anchors = np.arange(n)
    best_cost, best = math.inf, None
    for s in range(0, len(high), rows):
        mask = m_high[s : s + rows, None, :] | m_low[None, :, :]
        total = cost[anchors, mask].sum(axis=2).ravel()
        k = int(np.argmin(total))
        if total[k] < best_cost:
            hi, lo = divmod(k, len(low))
            best_cost, best = total[k], np.concatenate([low[lo], high[s + hi]])
    return best_cost, best


def dom_brute_force(P: SolutionSet, Q: SolutionSet, limit: int | None = None) -> DomResult:
    """D(P, Q) by trying every assignment of reduced Q points to P points.

    The first minimiser in enumeration order is returned. Raises
    :class:`BudgetExceeded` when ``n ** L`` exceeds ``limit`` (default
    10**7, overridable through ``DOMMOVE_ORACLE_BUDGET``).
    """
    check_same_dim(P, Q)
    if limit is None:
        limit = default_budget()
    if limit < 1:
        raise ValidationError("limit must be positive")
    ip, iq = reduce_indices(P, Q)
    n, L = ip.size, iq.size
    if L == 0:
        return DomResult(0.0, Partition.empty(len(Q)))
    if n == 0:
        raise ValidationError("P is empty: nothing can move to cover Q")
    count = n**L
    if count > limit:
        raise BudgetExceeded(f"instance too large for oracle: {n}**{L} = {count} assignments > budget {limit}")

    p, q = P.points[ip], Q.points[iq]
    if L <= _TABLE_MAX_Q:
        _, best_row = _best_by_table(p, q)
    else:
        best_cost, best_row = math.inf, None
        for start in range(0, count, _CHUNK):
            assign = _digits(start, min(count, start + _CHUNK), n, L)
            costs = _costs(p, q, assign)
            k = int(np.argmin(costs))
            if costs[k] < best_cost:
                best_cost, best_row = costs[k], assign[k]

    assignment = np.full(len(Q), -1, dtype=np.intp)
    assignment[iq] = ip[best_row]
    part = Partition.from_assignment(P, Q, assignment)
    return DomResult(part.total_move, part)

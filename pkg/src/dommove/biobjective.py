"""Exact dominance move for two objectives in O(N log N).

Outline:

1. Reduce both sets to their nondominated points and drop every Q point that
   some P point already weakly dominates.
2. Point every Q node at its inward neighbor: the other point of P u Q with
   the smallest move onto it.
3. Nodes whose chain of neighbors ends in a P point are grouped with it.
4. Two Q nodes that are each other's neighbor are fused into their ideal
   point, the fused node gets a fresh neighbor, and we loop back to 3.

After reduction both sets are staircases (f1 increasing, f2 decreasing) and
no P point weakly dominates a Q node, which is what makes the neighbor query
cheap: the best Q candidate is always an adjacent node, and the P candidates
are the last P point left of the query, the first one right of and below it,
and the P points it dominates (scanned only inside the current best radius).
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right

import numpy as np

from .model import DimensionError, DomResult, MergeTrace, Partition, SolutionSet, ValidationError, _frozen
from .pareto import reduce_indices

__all__ = ["NeighborGraph", "compute_dom_2d", "inward_neighbor"]

# Neighbor references: a Q node is its (leftmost) sorted position i >= 0,
# P point k is encoded as -(k + 1).


def _p_ref(k: int) -> int:
    return -k - 1


class NeighborGraph:
    """Mutable merge state for one biobjective computation.

    ``px, py`` are the reduced P points sorted by f1, ``qx, qy`` likewise for
    Q. A live Q node is identified by the sorted position of its leftmost
    member and covers the contiguous run up to ``right_end[i]``; its
    coordinates are the ideal point of that run, ``(qx[i], qy[right_end[i]])``.
    """

    def __init__(self, px, py, qx, qy):
        self.px = np.asarray(px, dtype=np.float64)
        self.py = np.asarray(py, dtype=np.float64)
        self.qx = np.asarray(qx, dtype=np.float64)
        self.qy = np.asarray(qy, dtype=np.float64)
        n, l = self.px.size, self.qx.size
        if n == 0 and l > 0:
            raise ValidationError("P is empty: nothing can move to cover Q")
        self._px = self.px.tolist()
        self._py = self.py.tolist()
        self._negpy = (-self.py).tolist()
        self._qx = self.qx.tolist()
        self._qy = self.qy.tolist()
        self.parent = list(range(l))
        self.right_end = list(range(l))
        self.prev = list(range(-1, l - 1))
        self.next = list(range(1, l)) + [-1] if l else []
        self.nbr = self._initial_neighbors().tolist() if l else []
        # merge log: left node, right node, ideal point of the fused node
        self.trace_left: list[int] = []
        self.trace_right: list[int] = []
        self.trace_x: list[float] = []
        self.trace_y: list[float] = []

    @property
    def n_p(self) -> int:
        return self.px.size

    @property
    def n_q(self) -> int:
        return self.qx.size

    def find(self, i: int) -> int:
        parent = self.parent
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def alive(self) -> list[int]:
        return [i for i in range(self.n_q) if self.parent[i] == i]

    def coords(self, i: int) -> tuple[float, float]:
        return self._qx[i], self._qy[self.right_end[i]]

    def neighbor_of(self, i: int) -> int:
        """Current neighbor of live node ``i``, with merged targets resolved."""
        t = self.nbr[i]
        return t if t < 0 else self.find(t)

    # -- neighbor queries -------------------------------------------------

    def query(self, i: int) -> tuple[float, int]:
        """Inward neighbor of live node ``i`` among P and the other live nodes.

        Ties prefer a P point, then the leftmost candidate.
        """
        ax, ay = self.coords(i)
        px, py, negpy = self._px, self._py, self._negpy
        n = len(px)

        left, right = self.prev[i], self.next[i]
        q_d, q_best = math.inf, 0
        if left >= 0:
            q_d, q_best = max(0.0, self._qy[self.right_end[left]] - ay), left
        if right >= 0:
            d = max(0.0, self._qx[right] - ax)
            if d < q_d:
                q_d, q_best = d, right

        p_d, p_best = math.inf, 0
        j = bisect_right(px, ax) - 1
        if j >= 0:
            p_d, p_best = max(0.0, py[j] - ay), _p_ref(j)
        k0 = j + 1
        k = max(k0, bisect_left(negpy, -ay))
        if k < n:
            d = px[k] - ax + max(0.0, py[k] - ay)
            if d < p_d:
                p_d, p_best = d, _p_ref(k)
        if k > k0:
            # P points the node dominates: d = (px - ax) + (py - ay), so only
            # those within the current radius on both axes can win
            radius = min(p_d, q_d)
            s = k0
            if radius < math.inf:
                s = max(k0, bisect_left(negpy, -(ay + radius)) - 2)
            for t in range(s, k):
                dx = px[t] - ax
                if dx > radius:
                    break
                d = dx + (py[t] - ay)
                if d < p_d or (d == p_d and _p_ref(t) > p_best):
                    p_d, p_best = d, _p_ref(t)
                    radius = min(p_d, q_d)
        if q_d < p_d:
            return q_d, q_best
        return p_d, p_best

    def full_scan(self, i: int) -> tuple[float, int]:
        """Reference neighbor query by exhaustive scan (same tie rules)."""
        ax, ay = self.coords(i)
        cands = []
        for k in range(self.n_p):
            d = max(0.0, self._px[k] - ax) + max(0.0, self._py[k] - ay)
            cands.append((d, 0, k, _p_ref(k)))
        for r in self.alive():
            if r != i:
                rx, ry = self.coords(r)
                d = max(0.0, rx - ax) + max(0.0, ry - ay)
                cands.append((d, 1, r, r))
        if not cands:
            raise ValidationError("no other point to be a neighbor")
        d, _, _, ref = min(cands)
        return d, ref

    def _initial_neighbors(self) -> np.ndarray:
        px, py, qx, qy = self.px, self.py, self.qx, self.qy
        n, l = px.size, qx.size
        idx = np.arange(l)

        q_d = np.full(l, np.inf)
        q_best = np.zeros(l, dtype=np.int64)
        q_d[1:] = np.maximum(0.0, qy[:-1] - qy[1:])
        q_best[1:] = idx[:-1]
        d_right = np.maximum(0.0, qx[1:] - qx[:-1])
        better = d_right < q_d[:-1]
        q_d[:-1][better] = d_right[better]
        q_best[:-1][better] = idx[1:][better]

        p_d = np.full(l, np.inf)
        p_best = np.zeros(l, dtype=np.int64)
        j = np.searchsorted(px, qx, side="right") - 1
        has = j >= 0
        p_d[has] = np.maximum(0.0, py[j[has]] - qy[has])
        p_best[has] = j[has]
        k0 = j + 1
        k = np.maximum(k0, np.searchsorted(-py, -qy, side="left"))
        has = k < n
        kk = k[has]
        d = px[kk] - qx[has] + np.maximum(0.0, py[kk] - qy[has])
        better = d < p_d[has]
        sel = np.flatnonzero(has)[better]
        p_d[sel] = d[better]
        p_best[sel] = kk[better]

        # dominated P points inside the current radius
        radius = np.minimum(p_d, q_d)
        s = np.maximum(k0, np.searchsorted(-py, -(qy + radius), side="left") - 2)
        e = np.minimum(k, np.searchsorted(px, qx + radius, side="right") + 2)
        lens = np.maximum(e - s, 0)
        total = int(lens.sum())
        if total:
            seg = np.repeat(idx, lens)
            starts = np.cumsum(lens) - lens
            pos = np.arange(total) - np.repeat(starts, lens) + np.repeat(s, lens)
            d = (px[pos] - qx[seg]) + (py[pos] - qy[seg])
            order = np.lexsort((pos, d, seg))
            first = order[np.r_[True, seg[order][1:] != seg[order][:-1]]]
            fseg, fd, fpos = seg[first], d[first], pos[first]
            better = (fd < p_d[fseg]) | ((fd == p_d[fseg]) & (fpos < p_best[fseg]))
            p_d[fseg[better]] = fd[better]
            p_best[fseg[better]] = fpos[better]

        return np.where(q_d < p_d, q_best, -p_best - 1)

    # -- merging ------------------------------------------------------------

    def mutual_pairs(self) -> list[tuple[int, int]]:
        """Live (left, right) node pairs that point at each other."""
        out = []
        for i in self.alive():
            t = self.neighbor_of(i)
            if t > i and self.neighbor_of(t) == i:
                out.append((i, t))
        return out

    def merge(self, a: int, b: int) -> int:
        """Fuse adjacent live nodes ``a`` (left) and ``b`` (right); returns the new node."""
        if self.next[a] != b:
            raise ValueError(f"nodes {a} and {b} are not adjacent live nodes")
        self.parent[b] = a
        self.right_end[a] = self.right_end[b]
        nb = self.next[b]
        self.next[a] = nb
        if nb >= 0:
            self.prev[nb] = a
        self.trace_left.append(a)
        self.trace_right.append(b)
        self.trace_x.append(self._qx[a])
        self.trace_y.append(self._qy[self.right_end[a]])
        self.nbr[a] = self.query(a)[1]
        return a

    def resolve(self) -> None:
        """Fuse mutual pairs until every node's chain ends at a P point."""
        if self.trace_left:
            stack = self.mutual_pairs()
        else:
            # nothing merged yet, so neighbor refs need no resolving
            nbr = np.asarray(self.nbr, dtype=np.int64)
            i = np.flatnonzero(nbr > np.arange(nbr.size))
            stack = list(zip(i[nbr[nbr[i]] == i].tolist(), nbr[i][nbr[nbr[i]] == i].tolist()))
        stack.reverse()
        while stack:
            a, b = stack.pop()
            node = self.merge(a, b)
            t = self.nbr[node]
            if t >= 0 and self.neighbor_of(t) == node:
                stack.append((node, t) if t > node else (t, node))

    def anchors(self) -> np.ndarray:
        """Sorted P position anchoring each sorted Q position."""
        l, n = self.n_q, self.n_p
        root = np.asarray(self.parent)
        while True:
            nxt = root[root]
            if np.array_equal(nxt, root):
                break
            root = nxt
        nbr = np.asarray(self.nbr, dtype=np.int64)
        succ = np.empty(l + n, dtype=np.int64)
        succ[l:] = np.arange(l, l + n)
        tgt = np.where(nbr >= 0, root[np.maximum(nbr, 0)], l - nbr - 1)
        succ[:l] = np.where(root == np.arange(l), tgt, root)
        for _ in range(2 * max(1, int(l).bit_length()) + 2):
            nxt = succ[succ]
            if np.array_equal(nxt, succ):
                break
            succ = nxt
        if np.any(succ[:l] < l):
            raise RuntimeError("unresolved neighbor cycle among Q nodes")
        return succ[:l] - l


def inward_neighbor(graph: NeighborGraph, i: int) -> tuple[float, int]:
    """Inward neighbor of live node ``i``: ``(distance, ref)``.

    ``ref >= 0`` is a live Q node, ``ref < 0`` encodes P position ``-ref - 1``.
    """
    if graph.parent[i] != i:
        raise ValueError(f"node {i} is not live")
    if graph.n_p + len(graph.alive()) < 2:
        raise ValidationError("no other point to be a neighbor")
    return graph.query(i)


def _sorted_front(points: np.ndarray, idx: np.ndarray):
    order = np.argsort(points[idx, 0], kind="stable")
    idx = idx[order]
    return idx, points[idx, 0].copy(), points[idx, 1].copy()


def build_graph(P: SolutionSet, Q: SolutionSet):
    """Reduce the pair and build the initial neighbor graph.

    Returns ``(graph, p_index, q_index)`` where the index arrays map sorted
    positions back to indices of the input sets.
    """
    if P.dim != 2 or Q.dim != 2:
        raise DimensionError("the biobjective algorithm needs exactly two objectives")
    ip, iq = reduce_indices(P, Q)
    ip, px, py = _sorted_front(P.points, ip)
    iq, qx, qy = _sorted_front(Q.points, iq)
    return NeighborGraph(px, py, qx, qy), ip, iq


def compute_dom_2d(P: SolutionSet, Q: SolutionSet, trace: bool = True) -> DomResult:
    """Dominance move D(P, Q) for two objectives.

    Returns the value together with an optimal partition (indices refer to
    the input sets) and, if ``trace`` is set, the list of node merges.
    """
    graph, ip, iq = build_graph(P, Q)
    if graph.n_q == 0:
        return DomResult(0.0, Partition.empty(len(Q)))
    graph.resolve()
    anchor_pos = graph.anchors()

    n = graph.n_p
    gx = np.full(n, np.inf)
    gy = np.full(n, np.inf)
    np.minimum.at(gx, anchor_pos, graph.qx)
    np.minimum.at(gy, anchor_pos, graph.qy)
    used = np.flatnonzero(np.isfinite(gx))
    moves = (graph.px[used] - np.minimum(graph.px[used], gx[used])) + (
        graph.py[used] - np.minimum(graph.py[used], gy[used])
    )
    anchors = ip[used]
    order = np.argsort(anchors)
    anchors, moves = anchors[order], moves[order]

    assignment = np.full(len(Q), -1, dtype=np.intp)
    assignment[iq] = ip[anchor_pos]
    total = math.fsum(moves.tolist())
    part = Partition(_frozen(assignment), _frozen(anchors.astype(np.intp)), _frozen(moves), total)

    events = MergeTrace()
    if trace and graph.trace_left:
        events = MergeTrace(
            iq[np.asarray(graph.trace_left)],
            iq[np.asarray(graph.trace_right)],
            np.column_stack([graph.trace_x, graph.trace_y]),
        )
    return DomResult(total, part, events)

"""Side-by-side comparison of two sets with all indicators."""

from __future__ import annotations

from .biobjective import compute_dom_2d
from .indicators import HvConfig, epsilon_additive, hypervolume_2d
from .model import ComparisonReport, DimensionError, DomResult, SolutionSet, check_same_dim
from .oracle import dom_brute_force
from .pareto import classify_relation, nondominated_filter


class UnsupportedDimension(DimensionError):
    """No exact fast method exists for this many objectives."""


def dominance_move(P: SolutionSet, Q: SolutionSet, oracle: bool = False, limit: int | None = None) -> DomResult:
    """D(P, Q) with the fast biobjective method, or the enumeration oracle.

    Three or more objectives require ``oracle=True``; no polynomial exact
    method is known there.
    """
    check_same_dim(P, Q)
    if oracle:
        return dom_brute_force(P, Q, limit)
    if P.dim != 2:
        raise UnsupportedDimension(
            f"exact dominance move for {P.dim} objectives has no known efficient algorithm; "
            "use the enumeration oracle for small sets"
        )
    return compute_dom_2d(P, Q)


def compare_sets(P: SolutionSet, Q: SolutionSet, ref=None, oracle: bool = False, limit: int | None = None) -> ComparisonReport:
    check_same_dim(P, Q)
    relation = classify_relation(nondominated_filter(P), nondominated_filter(Q))
    hv_p = hv_q = None
    if ref is not None:
        if P.dim != 2:
            raise UnsupportedDimension("hypervolume is only provided for two objectives")
        cfg = ref if isinstance(ref, HvConfig) else HvConfig(tuple(ref))
        hv_p, hv_q = hypervolume_2d(P, cfg), hypervolume_2d(Q, cfg)
    return ComparisonReport(
        relation=relation.value,
        dom_pq=dominance_move(P, Q, oracle, limit).value,
        dom_qp=dominance_move(Q, P, oracle, limit).value,
        eps_pq=epsilon_additive(P, Q),
        eps_qp=epsilon_additive(Q, P),
        hv_p=hv_p,
        hv_q=hv_q,
    )

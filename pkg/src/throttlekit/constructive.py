"""Constructive order bounds for power-domination throttling.

For a connected graph the initial-cost product throttling number under
power domination is at most 6n/7, and the sum throttling number is at
most floor(n/3) + 2.  Both proofs are algorithmic: either a small
optimal dominating set already finishes in one step, or a dominating
set of the graph minus one chosen private neighbor per dominator
finishes in two.  This module runs that construction and returns the
resulting start set as a checkable certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .domination import (
    domination_number,
    external_private_neighbors,
    is_dominating_set,
    optimal_dominating_set,
)
from .forcing import INFINITY, Rule, propagation_time
from .graph import Graph, VertexSet
from .throttling import ThrottleKind, throttling_number, throttling_value

_BRANCH_TINY = "tiny-order"
_BRANCH_DOMINATION = "small-dominating-set"
_BRANCH_PRIVATE = "private-neighbor"


@dataclass(frozen=True, eq=False)
class BoundCertificate:
    """A start set witnessing an order bound on a throttling number.

    ``value`` is the exact cost of ``power_set`` and never exceeds
    ``bound_numerator / bound_denominator``.
    """

    kind: ThrottleKind
    graph: Graph
    branch: str
    dominating_set: VertexSet
    epn_choice: Optional[dict[int, int]]
    power_set: VertexSet
    propagation_time: int
    value: int
    bound_numerator: int
    bound_denominator: int

    def validate(self) -> None:
        g = self.graph
        if not is_dominating_set(g, self.dominating_set):
            raise AssertionError("recorded dominating set does not dominate")
        gamma, _ = domination_number(g)
        if len(self.dominating_set) != gamma:
            raise AssertionError("recorded dominating set is not minimum")
        if self.epn_choice is not None:
            for v, u in self.epn_choice.items():
                if u not in external_private_neighbors(g, self.dominating_set, v):
                    raise AssertionError(
                        f"{u} is not an external private neighbor of {v}"
                    )
        pt = propagation_time(Rule.POWER_DOMINATION, g, self.power_set)
        if pt != self.propagation_time:
            raise AssertionError("recorded propagation time is wrong")
        value = throttling_value(self.kind, len(self.power_set), pt)
        if value != self.value:
            raise AssertionError("recorded cost is wrong")
        if self.value * self.bound_denominator > self.bound_numerator:
            raise AssertionError("certificate cost exceeds the claimed bound")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "order": self.graph.n,
            "branch": self.branch,
            "dominating_set": list(self.dominating_set.members),
            "epn_choice": None if self.epn_choice is None else {
                str(v): u for v, u in sorted(self.epn_choice.items())
            },
            "power_set": list(self.power_set.members),
            "propagation_time": self.propagation_time,
            "value": self.value,
            "bound": [self.bound_numerator, self.bound_denominator],
        }


def _bound(kind: ThrottleKind, n: int) -> tuple[int, int]:
    if kind is ThrottleKind.PRODUCT_INITIAL_COST:
        return 6 * n, 7
    return n // 3 + 2, 1


def _small_enough(kind: ThrottleKind, d: int, n: int) -> bool:
    # Exact integer forms of d <= 3n/7 and d <= n/3.
    if kind is ThrottleKind.PRODUCT_INITIAL_COST:
        return 7 * d <= 3 * n
    return 3 * d <= n


def power_domination_certificate(g: Graph,
                                 kind: ThrottleKind) -> BoundCertificate:
    """Build a start set meeting the order bound for the given cost kind.

    Supports the sum and initial-cost product kinds; the graph must be
    connected, and of order at least 3 for the product kind (smaller
    connected graphs have product cost equal to their order).
    """
    n = g.n
    if kind is ThrottleKind.PRODUCT_NO_INITIAL_COST:
        raise ValueError("no order bound is constructed for this kind")
    if not g.is_connected() or n == 0:
        raise ValueError("the bound construction needs a connected graph")
    if kind is ThrottleKind.PRODUCT_INITIAL_COST and n < 3:
        raise ValueError(f"order must be at least 3, got {n}")

    cert = optimal_dominating_set(g)
    d = cert.vertices
    num, den = _bound(kind, n)

    if kind is ThrottleKind.SUM and n <= 2:
        branch, choice, b = _BRANCH_TINY, None, d
    elif _small_enough(kind, len(d), n):
        branch, choice, b = _BRANCH_DOMINATION, None, d
    else:
        branch = _BRANCH_PRIVATE
        # Least-label private neighbor per dominator; nonempty for every
        # dominator of an optimal set in a connected graph of order >= 2.
        choice = {v: cert.private_neighbors[v][0] for v in d}
        removed = g.vertex_set(choice.values())
        sub, vmap = g.induced_subgraph(removed.complement())
        _, p_sub = domination_number(sub)
        b = vmap.preimage_set(p_sub)

    pt = propagation_time(Rule.POWER_DOMINATION, g, b)
    assert pt != INFINITY and isinstance(pt, int)
    value = throttling_value(kind, len(b), pt)
    assert isinstance(value, int)
    out = BoundCertificate(
        kind=kind,
        graph=g,
        branch=branch,
        dominating_set=d,
        epn_choice=choice,
        power_set=b,
        propagation_time=pt,
        value=value,
        bound_numerator=num,
        bound_denominator=den,
    )
    out.validate()
    return out


def extremal_product_throttling_report(g: Graph) -> dict:
    """Exact product throttling with the 6n/7 and 3n/7 equality tests."""
    n = g.n
    result = throttling_number(Rule.POWER_DOMINATION,
                               ThrottleKind.PRODUCT_INITIAL_COST, g)
    gamma, _ = domination_number(g)
    return {
        "order": n,
        "value": result.value,
        "witness": list(result.witness.members),
        "attains_bound": 7 * result.value == 6 * n,
        "domination_number": gamma,
        "domination_at_three_sevenths": 7 * gamma == 3 * n,
    }

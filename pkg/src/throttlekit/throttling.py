"""Throttling numbers: trading start-set size against propagation time.

Three cost functions over a start set B with propagation time pt:

* sum:       |B| + pt
* prodx:     |B| * (1 + pt)   (product with initial cost)
* prodstar:  |B| * pt         (product without initial cost)

The sum and prodx optima range over every start size up to the order;
the prodstar optimum excludes the full vertex set (its cost would be a
degenerate 0) and is undefined on edgeless graphs.  Witnesses are
deterministic: least value, then least size, then colex-least set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Union

from .forcing import (
    INFINITY,
    Rule,
    Time,
    _pt,
    _size_masks,
    _standard_step,
    k_propagation_time,
)
from .graph import Graph, VertexSet, bits

TableEntry = tuple[Time, Optional[VertexSet]]


class ThrottleKind(enum.Enum):
    SUM = "sum"
    PRODUCT_INITIAL_COST = "prodx"
    PRODUCT_NO_INITIAL_COST = "prodstar"


def throttling_value(kind: ThrottleKind, size: int, pt: Time) -> Time:
    """Combine a start-set size and a propagation time into a cost."""
    if pt == INFINITY:
        return INFINITY
    if kind is ThrottleKind.SUM:
        return size + pt
    if kind is ThrottleKind.PRODUCT_INITIAL_COST:
        return size * (1 + pt)
    return size * pt


def _value_floor(kind: ThrottleKind, k: int) -> int:
    # Least conceivable cost at size k when the set is proper (pt >= 1).
    if kind is ThrottleKind.SUM:
        return k + 1
    if kind is ThrottleKind.PRODUCT_INITIAL_COST:
        return 2 * k
    return k


def _pt_cap(kind: ThrottleKind, k: int, incumbent: Optional[int]) -> Optional[int]:
    # Largest pt that still beats the incumbent cost at size k.
    if incumbent is None:
        return None
    if kind is ThrottleKind.SUM:
        return incumbent - k - 1
    if kind is ThrottleKind.PRODUCT_INITIAL_COST:
        return (incumbent - 1) // k - 1
    return (incumbent - 1) // k


@dataclass(frozen=True, eq=False)
class ThrottlingResult:
    """A throttling optimum with its witness start set."""

    rule: Rule
    kind: ThrottleKind
    graph: Graph
    value: int
    size: int
    propagation_time: int
    witness: VertexSet
    table: Optional[dict[int, TableEntry]] = None

    def to_dict(self) -> dict:
        out = {
            "rule": self.rule.value,
            "kind": self.kind.value,
            "order": self.graph.n,
            "value": self.value,
            "size": self.size,
            "propagation_time": self.propagation_time,
            "witness": list(self.witness.members),
        }
        if self.table is not None:
            out["table"] = {
                str(k): {
                    "value": None if v == INFINITY else v,
                    "witness": None if w is None else list(w.members),
                }
                for k, (v, w) in self.table.items()
            }
        return out


def throttling_of_set(rule: Rule, kind: ThrottleKind, g: Graph,
                      initial: VertexSet) -> Time:
    """Cost of one specific start set."""
    if initial.order != g.n:
        raise ValueError("vertex set order does not match the graph")
    if kind is ThrottleKind.PRODUCT_NO_INITIAL_COST and initial.mask == g.full_mask:
        raise ValueError("no-initial-cost throttling excludes the full vertex set")
    t = _pt(rule, g.adjacency, g.n, initial.mask)
    assert t is not None
    return throttling_value(kind, len(initial), t)


def throttling_at_size(rule: Rule, kind: ThrottleKind, g: Graph,
                       k: int) -> TableEntry:
    """Best cost over start sets of exactly size k, with its witness.

    Returns (INFINITY, None) when no size-k set completes.
    """
    n = g.n
    if kind is ThrottleKind.PRODUCT_NO_INITIAL_COST:
        if not 1 <= k <= n - 1:
            raise ValueError(f"size must be between 1 and {n - 1}, got {k}")
    elif not 0 <= k <= n:
        raise ValueError(f"size must be between 0 and {n}, got {k}")
    adj = g.adjacency
    best: Optional[int] = None
    witness: Optional[int] = None
    floor = throttling_value(kind, k, 0) if k == n else _value_floor(kind, k)
    for mask in _size_masks(n, k):
        t = _pt(rule, adj, n, mask, _pt_cap(kind, k, best))
        if t is None or t == INFINITY:
            continue
        val = throttling_value(kind, k, t)
        assert isinstance(val, int)
        if best is None or val < best:
            best, witness = val, mask
            if best == floor:
                break
    if best is None:
        return INFINITY, None
    return best, VertexSet.from_mask(n, witness)


def throttling_number(rule: Rule, kind: ThrottleKind, g: Graph,
                      with_table: bool = False) -> ThrottlingResult:
    """Minimum cost over all start sizes, with a deterministic witness.

    With ``with_table`` the result also carries the per-size optima.
    """
    n = g.n
    if kind is ThrottleKind.PRODUCT_NO_INITIAL_COST and g.edge_count == 0:
        raise ValueError(
            "no-initial-cost throttling needs at least one edge"
        )
    if n == 0:
        # The empty start set colors the empty graph in no steps.
        return ThrottlingResult(
            rule=rule, kind=kind, graph=g, value=0, size=0,
            propagation_time=0, witness=VertexSet(0),
            table={} if with_table else None,
        )
    adj = g.adjacency
    best: Optional[int] = None
    best_k = best_pt = 0
    best_mask: Optional[int] = None
    table: Optional[dict[int, TableEntry]] = {} if with_table else None

    if with_table:
        top = n - 1 if kind is ThrottleKind.PRODUCT_NO_INITIAL_COST else n
        for k in range(1, top + 1):
            assert table is not None
            val, wit = throttling_at_size(rule, kind, g, k)
            table[k] = (val, wit)
            if val != INFINITY and (best is None or val < best):
                assert wit is not None and isinstance(val, int)
                best, best_k, best_mask = val, k, wit.mask
                best_pt = _int_pt(rule, adj, n, wit.mask)
    else:
        for k in range(1, n):
            if best is not None and _value_floor(kind, k) >= best:
                break
            for mask in _size_masks(n, k):
                t = _pt(rule, adj, n, mask, _pt_cap(kind, k, best))
                if t is None or t == INFINITY:
                    continue
                val = throttling_value(kind, k, t)
                assert isinstance(val, int) and isinstance(t, int)
                if best is None or val < best:
                    best, best_k, best_pt, best_mask = val, k, t, mask
        if kind is not ThrottleKind.PRODUCT_NO_INITIAL_COST and n >= 1:
            # The full set costs exactly n under both remaining kinds and
            # the sized scan above never considers it.
            if best is None or n < best:
                best, best_k, best_pt, best_mask = n, n, 0, g.full_mask

    if best is None or best_mask is None:
        raise AssertionError("a finite throttling cost always exists here")
    return ThrottlingResult(
        rule=rule,
        kind=kind,
        graph=g,
        value=best,
        size=best_k,
        propagation_time=best_pt,
        witness=VertexSet.from_mask(n, best_mask),
        table=table,
    )


def _int_pt(rule: Rule, adj: tuple[int, ...], n: int, mask: int) -> int:
    t = _pt(rule, adj, n, mask)
    assert isinstance(t, int)
    return t


def least_size_with_propagation_time(g: Graph, p: int) -> tuple[int, VertexSet]:
    """Least start size whose fastest standard propagation time is exactly p."""
    if p < 0:
        raise ValueError(f"propagation time must be nonnegative, got {p}")
    for k in range(g.n + 1):
        t, wit = k_propagation_time(Rule.STANDARD, g, k)
        if t == p:
            assert wit is not None
            return k, wit
    raise ValueError(f"no start size has standard propagation time {p}")


def one_step_forcing_number(g: Graph) -> tuple[int, VertexSet]:
    """Least size of a set whose single standard step colors everything.

    This equals the no-initial-cost throttling number under the standard
    rule.  Undefined (ValueError) on edgeless graphs, where only the full
    set completes.
    """
    if g.edge_count == 0:
        raise ValueError("one-step forcing needs at least one edge")
    adj = g.adjacency
    full = g.full_mask
    for k in range(1, g.n):
        for mask in _size_masks(g.n, k):
            if mask | _standard_step(adj, mask, full) == full:
                return k, VertexSet.from_mask(g.n, mask)
    raise AssertionError("deleting one endpoint of an edge always works")


def is_matched_sum(g: Graph) -> tuple[bool, Optional[VertexSet]]:
    """Whether the vertices split into equal halves whose crossing edges
    form a perfect matching; returns one half as witness when they do."""
    n = g.n
    if n % 2:
        raise ValueError(f"matched sums have even order, got {n}")
    if n == 0:
        return False, None
    adj = g.adjacency
    full = g.full_mask
    for x in _size_masks(n, n // 2):
        if not x & 1:
            continue
        y = full & ~x
        if all((adj[v] & y).bit_count() == 1 for v in bits(x)) and \
                all((adj[v] & x).bit_count() == 1 for v in bits(y)):
            return True, VertexSet.from_mask(n, x)
    return False, None

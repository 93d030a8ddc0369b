"""Propagation engines: standard, positive semidefinite, power domination.

All three processes repeatedly color vertices in strictly simultaneous
steps until nothing new is colored.  They differ only in the step rule:

* standard: a colored vertex with exactly one uncolored neighbor colors it;
* positive semidefinite: the standard rule applied separately inside
  every component of the graph minus the colored set;
* power domination: the first step colors the closed neighborhood of the
  start set, every later step uses the standard rule.

Times are exact small integers; a stalled process has time INFINITY.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .graph import Graph, VertexSet, bits, mask_components

INFINITY = float("inf")

Time = Union[int, float]


class Rule(enum.Enum):
    """Which step rule drives the propagation."""

    STANDARD = "zf"
    PSD = "psd"
    POWER_DOMINATION = "pd"


def _size_masks(n: int, k: int) -> Iterator[int]:
    # Gosper's hack: all k-bit masks below 2**n in increasing numeric
    # order, which is colexicographic order on the vertex sets.
    if k == 0:
        yield 0
        return
    if k > n:
        return
    m = (1 << k) - 1
    limit = 1 << n
    while m < limit:
        yield m
        low = m & -m
        ripple = m + low
        m = (((ripple ^ m) >> 2) // low) | ripple


def _standard_step(adj: tuple[int, ...], filled: int, full: int) -> int:
    new = 0
    unfilled = full & ~filled
    for v in bits(filled):
        w = adj[v] & unfilled
        if w and not (w & (w - 1)):
            new |= w
    return new


def _psd_step(adj: tuple[int, ...], filled: int, full: int) -> int:
    unfilled = full & ~filled
    if not unfilled:
        return 0
    new = 0
    for comp in mask_components(adj, unfilled):
        for v in bits(filled):
            w = adj[v] & comp
            if w and not (w & (w - 1)):
                new |= w
    return new


def _domination_step(adj: tuple[int, ...], filled: int, full: int) -> int:
    reach = filled
    for v in bits(filled):
        reach |= adj[v]
    return reach & full & ~filled


def _step_mask(rule: Rule, adj: tuple[int, ...], filled: int, full: int,
               time_index: int) -> int:
    if rule is Rule.POWER_DOMINATION and time_index == 1:
        return _domination_step(adj, filled, full)
    if rule is Rule.PSD:
        return _psd_step(adj, filled, full)
    return _standard_step(adj, filled, full)


def _pt(rule: Rule, adj: tuple[int, ...], n: int, mask: int,
        cap: Optional[int] = None) -> Optional[Time]:
    """Propagation time of ``mask``: an int, INFINITY on a stall, or
    None once the time provably exceeds ``cap``."""
    full = (1 << n) - 1
    filled = mask
    t = 0
    while filled != full:
        new = _step_mask(rule, adj, filled, full, t + 1)
        if not new:
            return INFINITY
        t += 1
        filled |= new
        if cap is not None and t >= cap and filled != full:
            return None
    return t


@dataclass(frozen=True)
class PropagationTrace:
    """Full record of one propagation run."""

    rule: Rule
    graph: Graph
    initial: VertexSet
    steps: tuple[VertexSet, ...]
    completed: bool
    components_per_step: Optional[tuple[tuple[VertexSet, ...], ...]] = None

    @property
    def propagation_time(self) -> Time:
        return len(self.steps) if self.completed else INFINITY

    def filled_after(self, t: int) -> VertexSet:
        """Cumulative colored set once step t has finished (t=0: start)."""
        if not 0 <= t <= len(self.steps):
            raise ValueError(f"step index {t} out of range")
        out = self.initial
        for s in self.steps[:t]:
            out = out | s
        return out

    @property
    def final(self) -> VertexSet:
        return self.filled_after(len(self.steps))

    def to_dict(self) -> dict:
        pt = self.propagation_time
        return {
            "rule": self.rule.value,
            "order": self.graph.n,
            "initial": list(self.initial.members),
            "steps": [list(s.members) for s in self.steps],
            "completed": self.completed,
            "propagation_time": None if pt == INFINITY else pt,
        }


def step(rule: Rule, g: Graph, filled: VertexSet,
         time_index: int = 1) -> VertexSet:
    """Vertices newly colored by one step from ``filled`` at the given
    1-based time index (the index only matters for power domination)."""
    if filled.order != g.n:
        raise ValueError("vertex set order does not match the graph")
    if time_index < 1:
        raise ValueError(f"time index must be at least 1, got {time_index}")
    new = _step_mask(rule, g.adjacency, filled.mask, g.full_mask, time_index)
    return VertexSet.from_mask(g.n, new)


def propagate(rule: Rule, g: Graph, initial: VertexSet,
              record_components: bool = False) -> PropagationTrace:
    """Run the process to its fixed point and return the whole trace."""
    if initial.order != g.n:
        raise ValueError("vertex set order does not match the graph")
    adj = g.adjacency
    full = g.full_mask
    filled = initial.mask
    steps: list[VertexSet] = []
    comps: list[tuple[VertexSet, ...]] = []
    while filled != full:
        if record_components and rule is Rule.PSD:
            comps.append(tuple(
                VertexSet.from_mask(g.n, c)
                for c in mask_components(adj, full & ~filled)
            ))
        new = _step_mask(rule, adj, filled, full, len(steps) + 1)
        if not new:
            break
        steps.append(VertexSet.from_mask(g.n, new))
        filled |= new
    return PropagationTrace(
        rule=rule,
        graph=g,
        initial=initial,
        steps=tuple(steps),
        completed=filled == full,
        components_per_step=tuple(comps) if record_components and rule is Rule.PSD else None,
    )


def propagation_time(rule: Rule, g: Graph, initial: VertexSet) -> Time:
    """Number of steps to color everything from ``initial`` (INFINITY on
    a stall)."""
    if initial.order != g.n:
        raise ValueError("vertex set order does not match the graph")
    t = _pt(rule, g.adjacency, g.n, initial.mask)
    assert t is not None
    return t


def is_forcing_set(rule: Rule, g: Graph, initial: VertexSet) -> bool:
    return propagation_time(rule, g, initial) != INFINITY


def forcing_number(rule: Rule, g: Graph) -> tuple[int, VertexSet]:
    """Least size of a set that colors everything, with the first witness
    in size order then colexicographic order."""
    if g.n == 0:
        return 0, g.vertex_set(())
    adj = g.adjacency
    for k in range(1, g.n + 1):
        for mask in _size_masks(g.n, k):
            if _pt(rule, adj, g.n, mask) != INFINITY:
                return k, VertexSet.from_mask(g.n, mask)
    raise AssertionError("the full vertex set always forces")


def k_propagation_time(rule: Rule, g: Graph,
                       k: int) -> tuple[Time, Optional[VertexSet]]:
    """Fastest propagation time over all start sets of size k.

    Returns (INFINITY, None) when no size-k set colors everything,
    otherwise the time and its first colexicographic witness.
    """
    if not 0 <= k <= g.n:
        raise ValueError(f"size must be between 0 and {g.n}, got {k}")
    adj = g.adjacency
    floor_time = 0 if k == g.n else 1
    best: Time = INFINITY
    witness: Optional[int] = None
    for mask in _size_masks(g.n, k):
        cap = None if best == INFINITY else int(best) - 1
        t = _pt(rule, adj, g.n, mask, cap)
        if t is None or t == INFINITY:
            continue
        if t < best:
            best, witness = t, mask
            if best == floor_time:
                break
    if witness is None:
        return INFINITY, None
    return best, VertexSet.from_mask(g.n, witness)


def graph_propagation_time(rule: Rule, g: Graph) -> tuple[Time, Optional[VertexSet]]:
    """Fastest propagation time over all minimum forcing sets."""
    y, _ = forcing_number(rule, g)
    return k_propagation_time(rule, g, y)

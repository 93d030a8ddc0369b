"""Brute-force graph isomorphism for small orders.

A degree-refinement coloring prunes the permutation search.  This is
deliberately dependency-free and is only meant for graphs of at most
about ten vertices; enumeration and tests stay within that range.
"""

from __future__ import annotations

from .graph import Graph, bits

# Structural colors are interned process-wide so that color ids are
# comparable across graphs.
_COLOR_IDS: dict[tuple, int] = {}


def _intern(term: tuple) -> int:
    got = _COLOR_IDS.get(term)
    if got is None:
        got = len(_COLOR_IDS)
        _COLOR_IDS[term] = got
    return got


def refined_colors(n: int, adj: tuple[int, ...]) -> tuple[int, ...]:
    """Iterated neighborhood-degree coloring, run to a fixed class count."""
    colors = [_intern(("deg", adj[v].bit_count())) for v in range(n)]
    distinct = len(set(colors))
    for _ in range(n):
        colors = [
            _intern((colors[v], tuple(sorted(colors[w] for w in bits(adj[v])))))
            for v in range(n)
        ]
        now = len(set(colors))
        if now == distinct:
            break
        distinct = now
    return tuple(colors)


def invariant_key(n: int, adj: tuple[int, ...]) -> tuple:
    """An isomorphism-invariant bucket key (not a complete canonical form)."""
    edge_count = sum(m.bit_count() for m in adj) // 2
    return (n, edge_count, tuple(sorted(refined_colors(n, adj))))


def _iso_adj(n: int, adj_a: tuple[int, ...], adj_b: tuple[int, ...]) -> tuple[int, ...] | None:
    """Find a label mapping carrying adj_a onto adj_b, or None."""
    colors_a = refined_colors(n, adj_a)
    colors_b = refined_colors(n, adj_b)
    if sorted(colors_a) != sorted(colors_b):
        return None

    class_size: dict[int, int] = {}
    for c in colors_a:
        class_size[c] = class_size.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (class_size[colors_a[v]], colors_a[v], v))
    candidates = {
        v: [w for w in range(n) if colors_b[w] == colors_a[v]] for v in order
    }

    mapping: list[int] = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                p = order[j]
                if (adj_a[v] >> p & 1) != (adj_b[w] >> mapping[p] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if extend(0):
        return tuple(mapping)
    return None


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A vertex bijection mapping g onto h, or None if none exists."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    return _iso_adj(g.n, g.adjacency, h.adjacency)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None

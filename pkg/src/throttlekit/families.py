"""Graph generators, named fixtures, and small-order enumeration.

Alongside the classical families (paths, stars, coronas, books, ...)
this module ships a catalog of small named graphs transcribed once from
figures into edge-list data files, loadable by name.  A tiny expression
language ("spider:2,2,1,1", "fig4_twin/dv:x") builds any of them plus
derived graphs on the command line and in the bundled claim catalog.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graph import Graph, VertexMap, bits
from .graphio import read_edge_list
from .iso import _iso_adj, invariant_key

MAX_ENUMERATION_ORDER = 9

STATIC_FIXTURES = (
    "fig1_base",
    "fig2_spider_plus_e",
    "fig3_H1",
    "fig3_H2",
    "fig3_H3",
    "fig4_twin",
    "fig5_K2corona",
    "fig6_legs5_plus_e",
    "ex3_7_H",
    "fig7_subdiv",
)

PARAMETRIC_FIXTURES = (
    "path:n",
    "cycle:n",
    "complete:n",
    "empty:n",
    "star:n",
    "spider:a1,a2,...",
    "corona:H,r",
    "book:k",
    "family_6n7:H",
    "matched_complete:r",
    "ex11_57:H",
    "star_plus_edge:n",
    "corona_tower:H",
)


@dataclass(frozen=True, eq=False)
class Fixture:
    """A graph together with its named vertices and edges."""

    graph: Graph
    vertices: dict[str, int] = field(default_factory=dict)
    edges: dict[str, tuple[int, int]] = field(default_factory=dict)
    meta: dict[str, str] = field(default_factory=dict)


def _positive(n: int, what: str) -> None:
    if n < 1:
        raise ValueError(f"{what} must be at least 1, got {n}")


def path(n: int) -> Graph:
    """The path on n vertices, labeled along the path."""
    _positive(n, "path order")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle order must be at least 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _positive(n, "complete graph order")
    return Graph(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    _positive(n, "empty graph order")
    return Graph(n)


def star(n: int) -> Graph:
    """The star on n vertices: center 0 joined to n-1 leaves."""
    _positive(n, "star order")
    return Graph(n, [(0, v) for v in range(1, n)])


def spider(leg_lengths: Iterable[int]) -> tuple[Graph, int]:
    """A center vertex with one path leg per entry; returns (graph, center).

    Leg vertices are labeled consecutively outward, one leg at a time.
    """
    legs = list(leg_lengths)
    if len(legs) < 3:
        raise ValueError(f"a spider needs at least 3 legs, got {len(legs)}")
    if any(a < 1 for a in legs):
        raise ValueError("every leg length must be at least 1")
    edges = []
    label = 1
    for a in legs:
        prev = 0
        for _ in range(a):
            edges.append((prev, label))
            prev = label
            label += 1
    return Graph(label, edges), 0


def corona(h: Graph, r: int) -> Graph:
    """Attach r new leaves to every vertex of h (the corona with r K_1's)."""
    _positive(r, "leaf count")
    if h.n < 1:
        raise ValueError("corona base must have at least one vertex")
    edges = list(h.edges())
    for v in range(h.n):
        for j in range(r):
            edges.append((v, h.n + v * r + j))
    return Graph(h.n * (1 + r), edges)


def matched_sum(g1: Graph, g2: Graph,
                matching: Iterable[tuple[int, int]]) -> Graph:
    """Disjoint union of two equal-order graphs joined by a perfect matching.

    ``matching`` pairs labels of g1 with labels of g2; the result keeps
    g1's labels and shifts g2's labels up by g1's order.
    """
    if g1.n != g2.n:
        raise ValueError(f"orders differ: {g1.n} vs {g2.n}")
    _positive(g1.n, "matched sum half order")
    pairs = list(matching)
    if len(pairs) != g1.n:
        raise ValueError(f"matching must have exactly {g1.n} edges")
    left = [u for u, _ in pairs]
    right = [v for _, v in pairs]
    if sorted(left) != list(range(g1.n)) or sorted(right) != list(range(g2.n)):
        raise ValueError("matching must saturate every vertex on both sides")
    edges = list(g1.edges())
    edges += [(u + g1.n, v + g1.n) for u, v in g2.edges()]
    edges += [(u, v + g1.n) for u, v in pairs]
    return Graph(2 * g1.n, edges)


def matched_complete(r: int) -> Fixture:
    """Two copies of K_r joined by the identity matching."""
    _positive(r, "clique order")
    g = matched_sum(complete(r), complete(r), [(i, i) for i in range(r)])
    edges = {f"m{i + 1}": (i, i + r) for i in range(r)}
    return Fixture(g, vertices={}, edges=edges, meta={"name": f"matched_complete:{r}"})


def book(k: int) -> tuple[Graph, tuple[int, int]]:
    """The Cartesian product of a k-leaf star with one edge.

    Two star copies (centers 0 and k+1) with matched vertices joined;
    returns the graph and the center-to-center spine edge.
    """
    _positive(k, "page count")
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(k + 1, k + 1 + i) for i in range(1, k + 1)]
    edges += [(i, i + k + 1) for i in range(k + 1)]
    return Graph(2 * k + 2, edges), (0, k + 1)


def family_6n7(h: Graph, force: bool = False) -> Fixture:
    """Pendant-extended host family with order 7k for a 2k-vertex host.

    Every host vertex receives two pendant leaves, and the second leaf of
    each of the first k host vertices receives one further leaf.
    """
    if h.n < 2 or h.n % 2:
        raise ValueError(f"host order must be even and positive, got {h.n}")
    if not force and not h.is_connected():
        raise ValueError("host graph must be connected (pass force to override)")
    k = h.n // 2
    edges = list(h.edges())
    names: dict[str, int] = {}
    for i in range(2 * k):
        names[f"v{i + 1}"] = i
        first, second = 2 * k + 2 * i, 2 * k + 2 * i + 1
        edges += [(i, first), (i, second)]
        names[f"u{i + 1}_1"] = first
        names[f"u{i + 1}_2"] = second
    for i in range(k):
        deep = 6 * k + i
        edges.append((names[f"u{i + 1}_2"], deep))
        names[f"u{i + 1}_3"] = deep
    return Fixture(Graph(7 * k, edges), vertices=names,
                   meta={"name": "family_6n7", "host_order": str(2 * k)})


def ex11_57(h: Graph) -> Fixture:
    """Double-leaf corona of a connected host with one extra pendant.

    Every host vertex gets two leaves, then one more leaf is appended to
    the first leaf of host vertex 0.
    """
    if h.n < 2:
        raise ValueError(f"host order must be at least 2, got {h.n}")
    if not h.is_connected():
        raise ValueError("host graph must be connected")
    g = corona(h, 2)
    extra = g.n
    edges = list(g.edges()) + [(h.n, extra)]
    return Fixture(Graph(g.n + 1, edges),
                   vertices={"ell": h.n, "tip": extra},
                   meta={"name": "ex11_57", "host_order": str(h.n)})


def star_plus_edge(n: int) -> Fixture:
    """A star on n vertices with one extra edge between two leaves."""
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    g = star(n)
    edges = list(g.edges()) + [(1, 2)]
    return Fixture(Graph(n, edges), vertices={"c": 0},
                   edges={"e": (1, 2)}, meta={"name": "star_plus_edge"})


def corona_tower(h: Graph) -> Fixture:
    """Two stacked single-leaf coronas of a connected host, plus a dome.

    The dome vertex u is joined to everything else, so the result has a
    universal vertex and order 4r+1 for a host of order r.
    """
    if h.n < 1:
        raise ValueError("host graph must have at least one vertex")
    if not h.is_connected():
        raise ValueError("host graph must be connected")
    g = corona(corona(h, 1), 1)
    u = g.n
    edges = list(g.edges()) + [(v, u) for v in range(g.n)]
    return Fixture(Graph(g.n + 1, edges), vertices={"u": u},
                   meta={"name": "corona_tower"})


def _load_static_fixture(name: str) -> Fixture:
    text = (resources.files("throttlekit") / "data" / f"{name}.txt").read_text()
    graphs = list(read_edge_list(text))
    if len(graphs) != 1:
        raise ValueError(f"fixture file {name} must hold exactly one graph")
    vertices: dict[str, int] = {}
    edges: dict[str, tuple[int, int]] = {}
    meta: dict[str, str] = {"name": name}
    for raw in text.splitlines():
        line = raw.strip()
        if not line.startswith("#"):
            continue
        parts = line[1:].split()
        if len(parts) == 3 and parts[0] == "vertex":
            vertices[parts[1]] = int(parts[2])
        elif len(parts) == 4 and parts[0] == "edge":
            edges[parts[1]] = (int(parts[2]), int(parts[3]))
        elif len(parts) == 2 and parts[0].endswith(":"):
            meta[parts[0][:-1]] = parts[1]
    return Fixture(graphs[0], vertices=vertices, edges=edges, meta=meta)


@lru_cache(maxsize=None)
def _static_fixture_cached(name: str) -> Fixture:
    return _load_static_fixture(name)


def fixture(name: str) -> Fixture:
    """Load a named static fixture from its committed edge-list file."""
    if name not in STATIC_FIXTURES:
        raise ValueError(
            f"unknown fixture {name!r}; static fixtures are "
            f"{', '.join(STATIC_FIXTURES)}"
        )
    return _static_fixture_cached(name)


# ---------------------------------------------------------------------------
# expression language


_ATOM = re.compile(r"^([KPCE])(\d+)$")


def _atom_graph(token: str) -> Optional[Graph]:
    m = _ATOM.match(token)
    if not m:
        return None
    kind, num = m.group(1), int(m.group(2))
    if kind == "K":
        return complete(num)
    if kind == "P":
        return path(num)
    if kind == "C":
        return cycle(num)
    return empty_graph(num)


def _arg_graph(token: str) -> Graph:
    g = _atom_graph(token)
    if g is not None:
        return g
    if token in STATIC_FIXTURES:
        return fixture(token).graph
    raise ValueError(f"cannot interpret {token!r} as a graph argument")


def _int_args(name: str, argstr: str, count: Optional[int] = None) -> list[int]:
    if not argstr:
        raise ValueError(f"{name} needs arguments")
    try:
        args = [int(tok) for tok in argstr.split(",")]
    except ValueError:
        raise ValueError(f"{name} takes integer arguments, got {argstr!r}") from None
    if count is not None and len(args) != count:
        raise ValueError(f"{name} takes {count} argument(s), got {len(args)}")
    return args


def _build_term(term: str) -> Fixture:
    name, _, argstr = term.partition(":")
    name = name.strip()
    argstr = argstr.strip()
    atom = _atom_graph(name)
    if atom is not None:
        if argstr:
            raise ValueError(f"{name} takes no arguments")
        return Fixture(atom, meta={"name": name})
    if name in STATIC_FIXTURES:
        if argstr:
            raise ValueError(f"fixture {name} takes no arguments")
        return fixture(name)
    if name == "path":
        return Fixture(path(_int_args(name, argstr, 1)[0]), meta={"name": term})
    if name == "cycle":
        return Fixture(cycle(_int_args(name, argstr, 1)[0]), meta={"name": term})
    if name == "complete":
        return Fixture(complete(_int_args(name, argstr, 1)[0]), meta={"name": term})
    if name == "empty":
        return Fixture(empty_graph(_int_args(name, argstr, 1)[0]), meta={"name": term})
    if name == "star":
        return Fixture(star(_int_args(name, argstr, 1)[0]),
                       vertices={"c": 0}, meta={"name": term})
    if name == "spider":
        g, center = spider(_int_args(name, argstr))
        return Fixture(g, vertices={"c": center}, meta={"name": term})
    if name == "corona":
        toks = argstr.split(",") if argstr else []
        if len(toks) != 2:
            raise ValueError("corona takes a host graph and a leaf count")
        return Fixture(corona(_arg_graph(toks[0].strip()), int(toks[1])),
                       meta={"name": term})
    if name == "book":
        g, spine = book(_int_args(name, argstr, 1)[0])
        return Fixture(g, vertices={"c1": spine[0], "c2": spine[1]},
                       edges={"e": spine}, meta={"name": term})
    if name == "family_6n7":
        return family_6n7(_arg_graph(argstr))
    if name == "matched_complete":
        return matched_complete(_int_args(name, argstr, 1)[0])
    if name == "ex11_57":
        return ex11_57(_arg_graph(argstr))
    if name == "star_plus_edge":
        return star_plus_edge(_int_args(name, argstr, 1)[0])
    if name == "corona_tower":
        return corona_tower(_arg_graph(argstr))
    raise ValueError(f"unknown graph name {name!r}")


def _resolve_vertex(fx: Fixture, ref: str) -> int:
    if ref in fx.vertices:
        return fx.vertices[ref]
    try:
        return int(ref)
    except ValueError:
        raise ValueError(f"unknown vertex reference {ref!r}") from None


def _resolve_edge(fx: Fixture, ref: str) -> tuple[str, tuple[int, int]]:
    if ref in fx.edges:
        return ref, fx.edges[ref]
    if "-" in ref:
        a, b = ref.split("-", 1)
        return ref, (_resolve_vertex(fx, a), _resolve_vertex(fx, b))
    raise ValueError(f"unknown edge reference {ref!r}")


def _remap_names(fx: Fixture, g: Graph, vmap: VertexMap,
                 extra: dict[str, int]) -> Fixture:
    vertices = {}
    for name, v in fx.vertices.items():
        img = vmap.image(v)
        if img is not None:
            vertices[name] = img
    vertices.update(extra)
    edges = {}
    for name, (u, v) in fx.edges.items():
        iu, iv = vmap.image(u), vmap.image(v)
        if iu is None or iv is None or iu == iv:
            continue
        if g.has_edge(iu, iv):
            edges[name] = (iu, iv)
    return Fixture(g, vertices=vertices, edges=edges, meta=dict(fx.meta))


def _apply_op(fx: Fixture, spec: str) -> Fixture:
    op, _, ref = spec.partition(":")
    op = op.strip()
    ref = ref.strip()
    g = fx.graph
    if op == "dv":
        x = _resolve_vertex(fx, ref)
        g2, vmap = g.delete_vertex(x)
        return _remap_names(fx, g2, vmap, {})
    if op == "de":
        _, (u, v) = _resolve_edge(fx, ref)
        g2 = g.delete_edge(u, v)
        vmap = VertexMap(g.n, g.n, range(g.n))
        return _remap_names(fx, g2, vmap, {})
    if op == "ae":
        if "-" not in ref:
            raise ValueError("ae needs an explicit u-v pair")
        a, b = ref.split("-", 1)
        u, v = _resolve_vertex(fx, a), _resolve_vertex(fx, b)
        if g.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        g2 = Graph(g.n, list(g.edges()) + [(u, v)])
        vmap = VertexMap(g.n, g.n, range(g.n))
        out = _remap_names(fx, g2, vmap, {})
        out.edges[ref if ref not in out.edges else f"added_{ref}"] = (u, v)
        return out
    if op == "ce":
        name, (u, v) = _resolve_edge(fx, ref)
        g2, vmap = g.contract_edge(u, v)
        merged = vmap.image(u)
        assert merged is not None
        return _remap_names(fx, g2, vmap, {f"y_{name}": merged})
    if op == "se":
        name, (u, v) = _resolve_edge(fx, ref)
        g2, vmap = g.subdivide_edge(u, v)
        assert vmap.new_vertex is not None
        return _remap_names(fx, g2, vmap, {f"z_{name}": vmap.new_vertex})
    raise ValueError(f"unknown graph operation {op!r} (use dv/de/ae/ce/se)")


def parse_graph_expression(expr: str) -> Fixture:
    """Build a graph from an expression like ``fig4_twin/dv:x``.

    The head names a fixture or generator (with ``:``-separated args);
    each ``/op:ref`` suffix applies a vertex deletion (dv), edge deletion
    (de), edge addition (ae), contraction (ce), or subdivision (se).
    """
    parts = [p.strip() for p in expr.split("/")]
    fx = _build_term(parts[0])
    for spec in parts[1:]:
        fx = _apply_op(fx, spec)
    return fx


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, by vertex extension."""
    if n == 1:
        return (Graph(1),)
    out: list[Graph] = []
    buckets: dict[tuple, list[tuple[int, ...]]] = {}
    top = 1 << (n - 1)
    for parent in _iso_classes(n - 1):
        base = parent.adjacency
        for mask in range(1 << (n - 1)):
            adj = tuple(
                base[v] | ((mask >> v & 1) << (n - 1)) for v in range(n - 1)
            ) + (mask,)
            key = invariant_key(n, adj)
            bucket = buckets.setdefault(key, [])
            if any(_iso_adj(n, adj, seen) is not None for seen in bucket):
                continue
            bucket.append(adj)
            out.append(Graph.from_adjacency(adj))
    return tuple(out)


def enumerate_graphs(n: int, connected_only: bool = False,
                     up_to_iso: bool = True) -> Iterator[Graph]:
    """Stream the graphs of order n, optionally connected only.

    With ``up_to_iso`` one representative per isomorphism class is
    produced (deterministic discovery order); otherwise every labeled
    graph is produced in ascending edge-mask order.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"order must be between 1 and {MAX_ENUMERATION_ORDER}, got {n}"
        )
    if up_to_iso:
        for g in _iso_classes(n):
            if not connected_only or g.is_connected():
                yield g
        return
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, (pairs[i] for i in bits(mask)))
        if not connected_only or g.is_connected():
            yield g

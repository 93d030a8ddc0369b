"""Property suites: documented facts checked over enumerated graphs.

Each suite expands one statement into per-graph cases.  A case is a
picklable ``(case_id, runner_name, payload)`` triple so a worker pool
can execute cases in any order; payloads carry graphs as graph6 text.
Failing records always include a witness precise enough to replay the
violation with the ``compute`` command.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Optional

from .graph import Graph, VertexSet, bits, mask_components
from .graphio import format_graph6, parse_graph6
from .families import MAX_ENUMERATION_ORDER, enumerate_graphs
from .forcing import (
    INFINITY,
    Rule,
    _psd_step,
    _pt,
    _standard_step,
    forcing_number,
)
from .domination import (
    domination_number,
    edge_maximum_dominating_sets,
    external_private_neighbors,
    optimal_dominating_sets,
)
from .throttling import (
    ThrottleKind,
    is_matched_sum,
    one_step_forcing_number,
    throttling_number,
)
from .constructive import power_domination_certificate

Case = tuple[str, str, dict]

_PD = Rule.POWER_DOMINATION
_PSD = Rule.PSD
_ZF = Rule.STANDARD
_SUM = ThrottleKind.SUM
_X = ThrottleKind.PRODUCT_INITIAL_COST
_STAR = ThrottleKind.PRODUCT_NO_INITIAL_COST

# Violations beyond this many are counted but not spelled out.
_WITNESS_CAP = 4

# Guard for the choice-function product in the isolation check; the
# private neighborhoods are disjoint, so for n <= 9 the true product
# never comes close.
_CHOICE_CAP = 4096


def _fmt(mask: int) -> str:
    return "{" + ",".join(str(v) for v in bits(mask)) + "}"


def _record(case_id: str, g6: str, check: str, violations: list[str],
            computed: Optional[str] = None) -> dict:
    passed = not violations
    if computed is None:
        computed = "ok" if passed else f"{len(violations)} violation(s)"
    return {
        "id": case_id,
        "graph6": g6,
        "check": check,
        "expected": "no violation",
        "computed": computed,
        "passed": passed,
        "witness": None if passed else "; ".join(violations[:_WITNESS_CAP]),
    }


def _th(cache: dict, g: Graph, rule: Rule, kind: ThrottleKind) -> Optional[int]:
    """Throttling value, or None where the quantity is undefined."""
    key = (g, rule, kind)
    if key not in cache:
        try:
            cache[key] = throttling_number(rule, kind, g).value
        except ValueError:
            cache[key] = None
    return cache[key]


# --- runners -----------------------------------------------------------

def _run_half_order_domination(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    gamma, d = domination_number(g)
    violations = []
    if 2 * gamma > g.n:
        violations.append(f"gamma={gamma} > n/2 with n={g.n}, "
                          f"minimum set {_fmt(d.mask)}")
    return _record(case_id, payload["graph6"],
                   "graphs without isolated vertices satisfy 2*gamma <= n",
                   violations, computed=f"gamma={gamma}")


def _run_edge_max_epn(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    violations = []
    for d in edge_maximum_dominating_sets(g):
        for v in d:
            if not external_private_neighbors(g, d, v):
                violations.append(f"D={_fmt(d.mask)}: member {v} has no "
                                  "external private neighbor")
    return _record(case_id, payload["graph6"],
                   "every edge-maximum minimum dominating set keeps an "
                   "external private neighbor per member", violations)


def _run_epn_removal(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    violations = []
    for d in optimal_dominating_sets(g):
        options = []
        for v in d:
            epn = external_private_neighbors(g, d, v).members
            if not epn:
                options = None
                violations.append(f"optimal D={_fmt(d.mask)}: member {v} "
                                  "has no external private neighbor")
                break
            options.append(epn)
        if options is None:
            continue
        for choice in itertools.islice(itertools.product(*options),
                                       _CHOICE_CAP):
            kept = g.vertex_set(choice).complement()
            sub, vmap = g.induced_subgraph(kept)
            iso = sub.isolated_vertices()
            if iso:
                back = vmap.preimage_set(iso)
                violations.append(f"D={_fmt(d.mask)}, removing {choice} "
                                  f"isolates {_fmt(back.mask)}")
    return _record(case_id, payload["graph6"],
                   "removing one external private neighbor per member of an "
                   "optimal dominating set isolates nothing", violations)


def _run_product_six_sevenths(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    n = g.n
    violations = []
    cert = power_domination_certificate(g, _X)
    if cert.propagation_time > 2:
        violations.append(f"certificate propagation time "
                          f"{cert.propagation_time} > 2 "
                          f"(branch {cert.branch})")
    if 7 * cert.value > 6 * n:
        violations.append(f"certificate value {cert.value} > 6n/7, n={n}, "
                          f"set {_fmt(cert.power_set.mask)}")
    exact = throttling_number(_PD, _X, g)
    if exact.value > cert.value:
        violations.append(f"exhaustive value {exact.value} exceeds "
                          f"certificate value {cert.value}")
    if 7 * exact.value > 6 * n:
        violations.append(f"exhaustive value {exact.value} > 6n/7, n={n}, "
                          f"witness {_fmt(exact.witness.mask)}")
    if 7 * exact.value == 6 * n:
        gamma, _ = domination_number(g)
        if 7 * gamma != 3 * n:
            violations.append(f"value 6n/7 attained but gamma={gamma} "
                              f"!= 3n/7, n={n}")
    return _record(case_id, payload["graph6"],
                   "power domination initial-cost product stays within 6n/7 "
                   "and the two-step certificate covers the exact value",
                   violations,
                   computed=f"certificate={cert.value} ({cert.branch}), "
                            f"exact={exact.value}")


def _run_sum_third_plus_two(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    n = g.n
    bound = n // 3 + 2
    violations = []
    cert = power_domination_certificate(g, _SUM)
    if cert.value > bound:
        violations.append(f"certificate value {cert.value} > floor(n/3)+2="
                          f"{bound}, set {_fmt(cert.power_set.mask)}")
    exact = throttling_number(_PD, _SUM, g)
    if exact.value > cert.value:
        violations.append(f"exhaustive value {exact.value} exceeds "
                          f"certificate value {cert.value}")
    if exact.value > bound:
        violations.append(f"exhaustive value {exact.value} > {bound}, "
                          f"witness {_fmt(exact.witness.mask)}")
    return _record(case_id, payload["graph6"],
                   "power domination sum throttling stays within "
                   "floor(n/3)+2 and the certificate covers the exact value",
                   violations,
                   computed=f"certificate={cert.value} ({cert.branch}), "
                            f"exact={exact.value}")


def _run_transfer(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    rule = Rule(payload["rule"])
    item = payload["item"]
    n, adj = g.n, g.adjacency
    violations = []

    if item == 1:
        # A completing set of G-e completes G after adding one endpoint.
        for u, v in g.edges():
            h = g.delete_edge(u, v)
            for bmask in range(1 << n):
                pth = _pt(rule, h.adjacency, n, bmask)
                if pth == INFINITY:
                    continue
                best = min(_pt(rule, adj, n, bmask | (1 << u)),
                           _pt(rule, adj, n, bmask | (1 << v)))
                if best > pth:
                    violations.append(f"e=({u},{v}), B'={_fmt(bmask)}: "
                                      f"best on G {best} > {pth} on G-e")
    elif item == 2:
        # A completing set of G completes G-e after adding one endpoint.
        for u, v in g.edges():
            h = g.delete_edge(u, v)
            for bmask in range(1 << n):
                ptg = _pt(rule, adj, n, bmask)
                if ptg == INFINITY:
                    continue
                best = min(_pt(rule, h.adjacency, n, bmask | (1 << u)),
                           _pt(rule, h.adjacency, n, bmask | (1 << v)))
                if best > ptg:
                    violations.append(f"e=({u},{v}), B={_fmt(bmask)}: "
                                      f"best on G-e {best} > {ptg} on G")
    elif item == 3:
        # A completing set of G-x completes G once x is put back.
        for x in range(n):
            h, vmap = g.delete_vertex(x)
            hn = h.n
            for bmask in range(1 << hn):
                pth = _pt(rule, h.adjacency, hn, bmask)
                if pth == INFINITY:
                    continue
                back = vmap.preimage_set(VertexSet.from_mask(hn, bmask)).mask
                ptg = _pt(rule, adj, n, back | (1 << x))
                if ptg > pth:
                    violations.append(f"x={x}, B'={_fmt(bmask)}: "
                                      f"{ptg} on G > {pth} on G-x")
    elif item == 4:
        # A completing set of G/e lifts back to G, splitting the merged
        # vertex or adding one endpoint.
        for u, v in g.edges():
            h, vmap = g.contract_edge(u, v)
            y = vmap.image(u)
            hn = h.n
            for bmask in range(1 << hn):
                pth = _pt(rule, h.adjacency, hn, bmask)
                if pth == INFINITY:
                    continue
                pre = vmap.preimage_set(VertexSet.from_mask(hn, bmask)).mask
                if bmask >> y & 1:
                    ptg = _pt(rule, adj, n, pre)
                else:
                    ptg = min(_pt(rule, adj, n, pre | (1 << u)),
                              _pt(rule, adj, n, pre | (1 << v)))
                if ptg > pth:
                    violations.append(f"e=({u},{v}), B'={_fmt(bmask)}: "
                                      f"{ptg} on G > {pth} on G/e")
    elif item == 5:
        # Power domination only: a completing set of G pushes forward
        # through a contraction at no time cost.
        for u, v in g.edges():
            h, vmap = g.contract_edge(u, v)
            y = vmap.image(u)
            hn = h.n
            for bmask in range(1 << n):
                ptg = _pt(rule, adj, n, bmask)
                if ptg == INFINITY:
                    continue
                img = vmap.map_set(VertexSet.from_mask(n, bmask)).mask
                pth = _pt(rule, h.adjacency, hn, img | (1 << y))
                if pth > ptg:
                    violations.append(f"e=({u},{v}), B={_fmt(bmask)}: "
                                      f"{pth} on G/e > {ptg} on G")
    elif item == 6:
        # A completing set of the subdivision pulls back to G, trading
        # the new vertex for one endpoint.
        for u, v in g.edges():
            h, vmap = g.subdivide_edge(u, v)
            z = vmap.new_vertex
            hn = h.n
            for bmask in range(1 << hn):
                pth = _pt(rule, h.adjacency, hn, bmask)
                if pth == INFINITY:
                    continue
                if bmask >> z & 1:
                    base = bmask & ~(1 << z)
                    ptg = min(_pt(rule, adj, n, base | (1 << u)),
                              _pt(rule, adj, n, base | (1 << v)))
                else:
                    ptg = _pt(rule, adj, n, bmask)
                if ptg > pth:
                    violations.append(f"e=({u},{v}), B'={_fmt(bmask)}: "
                                      f"{ptg} on G > {pth} on subdivision")
    elif item == 7:
        # A completing set of G completes the subdivision after adding
        # the new vertex, which can perform the force its edge carried.
        for u, v in g.edges():
            h, vmap = g.subdivide_edge(u, v)
            z = vmap.new_vertex
            hn = h.n
            for bmask in range(1 << n):
                ptg = _pt(rule, adj, n, bmask)
                if ptg == INFINITY:
                    continue
                pth = _pt(rule, h.adjacency, hn, bmask | (1 << z))
                if pth > ptg:
                    violations.append(f"e=({u},{v}), B={_fmt(bmask)}: "
                                      f"{pth} on subdivision > {ptg} on G")
    else:
        raise ValueError(f"unknown transfer item {item}")

    return _record(case_id, payload["graph6"],
                   f"propagation-time transfer, operation item {item}, "
                   f"rule {rule.value}", violations)


def _run_product_stability(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    cache: dict = {}
    violations = []
    edges = list(g.edges())
    kinds = ((_STAR, "no-cost"), (_X, "initial-cost"))

    for rule in (_PD, _PSD):
        rn = rule.value
        for kind, kn in kinds:
            a = _th(cache, g, rule, kind)
            if a is None:
                continue
            for u, v in edges:
                b = _th(cache, g.delete_edge(u, v), rule, kind)
                if b is not None and not (a <= 2 * b and b <= 2 * a):
                    violations.append(f"(1) {rn} {kn}: deleting ({u},{v}) "
                                      f"gives {b}, original {a}")
                c = _th(cache, g.contract_edge(u, v)[0], rule, kind)
                if c is not None:
                    if rule is _PD and not (a <= 2 * c and c <= 2 * a):
                        violations.append(f"(3) {rn} {kn}: contracting "
                                          f"({u},{v}) gives {c}, original {a}")
                    if rule is _PSD and not a <= 2 * c:
                        violations.append(f"(4) {rn} {kn}: contracting "
                                          f"({u},{v}) gives {c}, original {a}")
                s = _th(cache, g.subdivide_edge(u, v)[0], rule, kind)
                if s is not None:
                    if kind is _STAR and not a <= s <= 2 * a:
                        violations.append(f"(5) {rn} {kn}: subdividing "
                                          f"({u},{v}) gives {s}, original {a}")
                    if kind is _X:
                        if rule is _PD and not a <= s <= 2 * a:
                            violations.append(f"(6) {rn} {kn}: subdividing "
                                              f"({u},{v}) gives {s}, "
                                              f"original {a}")
                        if rule is _PSD and not (a <= s and 2 * s <= 3 * a):
                            violations.append(f"(6) {rn} {kn}: subdividing "
                                              f"({u},{v}) gives {s}, "
                                              f"original {a}")
            for x in range(g.n):
                if g.n < 2:
                    break
                b = _th(cache, g.delete_vertex(x)[0], rule, kind)
                if b is not None and not a <= 2 * b:
                    violations.append(f"(2) {rn} {kn}: deleting vertex {x} "
                                      f"gives {b}, original {a}")
    return _record(case_id, payload["graph6"],
                   "product throttling moves by bounded factors under edge "
                   "deletion, vertex deletion, contraction, and subdivision",
                   violations)


def _run_one_step_stability(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    cache: dict = {}
    t = _th(cache, g, _ZF, _STAR)
    violations = []
    if g.n >= 2:
        for x in range(g.n):
            b = _th(cache, g.delete_vertex(x)[0], _ZF, _STAR)
            if b is not None and not t - 1 <= b <= t:
                violations.append(f"(1) deleting vertex {x} gives {b}, "
                                  f"allowed [{t - 1},{t}]")
    for u, v in g.edges():
        b = _th(cache, g.delete_edge(u, v), _ZF, _STAR)
        if b is not None and not t - 1 <= b <= t + 1:
            violations.append(f"(2) deleting ({u},{v}) gives {b}, "
                              f"allowed [{t - 1},{t + 1}]")
        b = _th(cache, g.contract_edge(u, v)[0], _ZF, _STAR)
        if b is not None and not t - 1 <= b <= t:
            violations.append(f"(3) contracting ({u},{v}) gives {b}, "
                              f"allowed [{t - 1},{t}]")
        b = _th(cache, g.subdivide_edge(u, v)[0], _ZF, _STAR)
        if not t <= b <= t + 1:
            violations.append(f"(4) subdividing ({u},{v}) gives {b}, "
                              f"allowed [{t},{t + 1}]")
    return _record(case_id, payload["graph6"],
                   "standard-rule no-cost product throttling moves by at "
                   "most one under local operations", violations,
                   computed=f"value={t}")


def _run_one_step_identity(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    value = throttling_number(_ZF, _STAR, g).value
    k1, witness = one_step_forcing_number(g)
    violations = []
    if value != k1:
        violations.append(f"no-cost product value {value} differs from "
                          f"least one-step size {k1} ({_fmt(witness.mask)})")
    if 2 * value < g.n:
        violations.append(f"value {value} below half the order {g.n}")
    return _record(case_id, payload["graph6"],
                   "standard-rule no-cost product throttling equals the "
                   "least one-step completing size and is at least n/2",
                   violations, computed=f"value={value}, one-step={k1}")


def _run_half_order_characterization(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    value = throttling_number(_ZF, _STAR, g).value
    matched, half = is_matched_sum(g)
    violations = []
    if (2 * value == g.n) != matched:
        detail = f"half {_fmt(half.mask)}" if half is not None else "no half"
        violations.append(f"value {value} on order {g.n} but matched-sum "
                          f"test says {matched} ({detail})")
    return _record(case_id, payload["graph6"],
                   "half-order no-cost product throttling happens exactly "
                   "on matched-sum graphs", violations,
                   computed=f"value={value}, matched={matched}")


def _run_product_equals_order(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    value = throttling_number(_ZF, _X, g).value
    violations = []
    if value != g.n:
        violations.append(f"initial-cost product {value} != order {g.n}")
    return _record(case_id, payload["graph6"],
                   "standard-rule initial-cost product throttling equals "
                   "the order", violations, computed=f"value={value}")


def _run_bounds_chain(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    rule = Rule(payload["rule"])
    n = g.n
    y, _ = forcing_number(rule, g)
    th_sum = throttling_number(rule, _SUM, g).value
    th_x = throttling_number(rule, _X, g).value
    th_star = throttling_number(rule, _STAR, g).value
    violations = []
    if not 1 <= y < n:
        violations.append(f"completing number {y} outside [1,{n - 1}]")
    if not y + 1 <= th_x <= n:
        violations.append(f"initial-cost product {th_x} outside "
                          f"[{y + 1},{n}]")
    if not y + 1 <= th_sum <= n:
        violations.append(f"sum value {th_sum} outside [{y + 1},{n}]")
    if not 1 <= th_star <= n - 1:
        violations.append(f"no-cost product {th_star} outside [1,{n - 1}]")
    return _record(case_id, payload["graph6"],
                   f"order bounds on all throttling kinds, rule {rule.value}",
                   violations,
                   computed=f"number={y}, sum={th_sum}, x={th_x}, "
                            f"star={th_star}")


def _run_universal_vertex(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    star_one = throttling_number(_PD, _STAR, g).value == 1
    x_two = throttling_number(_PD, _X, g).value == 2
    universal = g.has_universal_vertex()
    violations = []
    if not star_one == universal == x_two:
        violations.append(f"no-cost==1 is {star_one}, universal is "
                          f"{universal}, initial-cost==2 is {x_two}")
    return _record(case_id, payload["graph6"],
                   "unit no-cost product, a universal vertex, and "
                   "initial-cost product two coincide under power "
                   "domination", violations)


def _run_pt_superset(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    rule = Rule(payload["rule"])
    n, adj, full = g.n, g.adjacency, g.full_mask
    violations = []
    for bmask in range(1 << n):
        base = _pt(rule, adj, n, bmask)
        rest = full & ~bmask
        while rest:
            bit = rest & -rest
            rest ^= bit
            bigger = _pt(rule, adj, n, bmask | bit)
            if bigger > base:
                violations.append(f"B={_fmt(bmask)} + vertex "
                                  f"{bit.bit_length() - 1}: {bigger} > {base}")
    return _record(case_id, payload["graph6"],
                   f"enlarging the initial set never slows propagation, "
                   f"rule {rule.value}", violations)


def _run_component_step(case_id: str, payload: dict) -> dict:
    g = parse_graph6(payload["graph6"])
    n, adj, full = g.n, g.adjacency, g.full_mask
    violations = []
    for bmask in range(1 << n):
        direct = _psd_step(adj, bmask, full)
        pieced = 0
        for comp in mask_components(adj, full & ~bmask):
            sub, vmap = g.induced_subgraph(VertexSet.from_mask(n, comp | bmask))
            inner = vmap.map_set(VertexSet.from_mask(n, bmask))
            newly = _standard_step(sub.adjacency, inner.mask, sub.full_mask)
            pieced |= vmap.preimage_set(VertexSet.from_mask(sub.n, newly)).mask
        if direct != pieced:
            violations.append(f"B={_fmt(bmask)}: direct {_fmt(direct)}, "
                              f"per-component {_fmt(pieced)}")
    return _record(case_id, payload["graph6"],
                   "the PSD step matches the standard step run inside each "
                   "unfilled component", violations)


RUNNERS: dict[str, Callable[[str, dict], dict]] = {
    "half_order_domination": _run_half_order_domination,
    "edge_max_epn": _run_edge_max_epn,
    "epn_removal": _run_epn_removal,
    "product_six_sevenths": _run_product_six_sevenths,
    "sum_third_plus_two": _run_sum_third_plus_two,
    "transfer": _run_transfer,
    "product_stability": _run_product_stability,
    "one_step_stability": _run_one_step_stability,
    "one_step_identity": _run_one_step_identity,
    "half_order_characterization": _run_half_order_characterization,
    "product_equals_order": _run_product_equals_order,
    "bounds_chain": _run_bounds_chain,
    "universal_vertex": _run_universal_vertex,
    "pt_superset": _run_pt_superset,
    "component_step": _run_component_step,
}


def run_case(case: Case) -> dict:
    """Execute one case; unexpected errors become failing records."""
    case_id, runner_name, payload = case
    try:
        return RUNNERS[runner_name](case_id, payload)
    except Exception as exc:  # pragma: no cover - indicates a bug
        return {
            "id": case_id,
            "graph6": payload.get("graph6", ""),
            "check": runner_name,
            "expected": "no violation",
            "computed": f"error: {exc!r}",
            "passed": False,
            "witness": repr(exc),
        }


# --- case builders -----------------------------------------------------

def _graph_cases(name: str, runner: str, nmax: int, *, nmin: int = 1,
                 connected: bool = False, even_only: bool = False,
                 keep: Optional[Callable[[Graph], bool]] = None,
                 rules: Optional[tuple[str, ...]] = None) -> list[Case]:
    cases: list[Case] = []
    for n in range(nmin, nmax + 1):
        if even_only and n % 2:
            continue
        for idx, g in enumerate(enumerate_graphs(n, connected_only=connected)):
            if keep is not None and not keep(g):
                continue
            payload = {"graph6": format_graph6(g)}
            if rules is None:
                cases.append((f"{name}-n{n}-g{idx}", runner, payload))
            else:
                for r in rules:
                    cases.append((f"{name}-n{n}-g{idx}-{r}", runner,
                                  dict(payload, rule=r)))
    return cases


def _has_edge(g: Graph) -> bool:
    return g.edge_count > 0


def _no_isolated(g: Graph) -> bool:
    return not g.isolated_vertices()


def _transfer_cases(nmax: int) -> list[Case]:
    cases: list[Case] = []
    for n in range(2, nmax + 1):
        for idx, g in enumerate(enumerate_graphs(n, connected_only=True)):
            payload = {"graph6": format_graph6(g)}
            for item in range(1, 8):
                rules = ("pd",) if item == 5 else ("zf", "psd", "pd")
                for r in rules:
                    cases.append((f"lemma3.1-n{n}-g{idx}-i{item}-{r}",
                                  "transfer",
                                  dict(payload, rule=r, item=item)))
    return cases


@dataclass(frozen=True)
class SuiteSpec:
    name: str
    description: str
    default_nmax: int
    build: Callable[[int], list[Case]]


SUITES: dict[str, SuiteSpec] = {}


def _suite(name: str, description: str, default_nmax: int,
           build: Callable[[int], list[Case]]) -> None:
    SUITES[name] = SuiteSpec(name, description, default_nmax, build)


_suite("ore",
       "Graphs without isolated vertices have dominating sets of size "
       "at most half the order.",
       8,
       lambda nmax: _graph_cases("ore", "half_order_domination", nmax,
                                 keep=_no_isolated))

_suite("lemma2.2",
       "Edge-maximum minimum dominating sets keep an external private "
       "neighbor for every member (connected graphs).",
       7,
       lambda nmax: _graph_cases("lemma2.2", "edge_max_epn", nmax,
                                 nmin=2, connected=True))

_suite("lemma2.3",
       "Removing one external private neighbor per member of an optimal "
       "dominating set never isolates a vertex (connected graphs).",
       7,
       lambda nmax: _graph_cases("lemma2.3", "epn_removal", nmax,
                                 nmin=3, connected=True))

_suite("thm2.4",
       "Power domination initial-cost product throttling is at most 6n/7 "
       "on connected graphs, witnessed by a two-step certificate, with "
       "extremal graphs dominating at exactly 3n/7.",
       8,
       lambda nmax: _graph_cases("thm2.4", "product_six_sevenths", nmax,
                                 nmin=3, connected=True))

_suite("thm2.7",
       "Power domination sum throttling is at most floor(n/3)+2 on "
       "connected graphs, witnessed by a certificate.",
       8,
       lambda nmax: _graph_cases("thm2.7", "sum_third_plus_two", nmax,
                                 nmin=1, connected=True))

_suite("lemma3.1",
       "Completing sets transfer across edge deletion, vertex deletion, "
       "contraction, and subdivision with controlled growth, for all "
       "three rules (items 1-7, exhaustive over initial sets).",
       6,
       _transfer_cases)

_suite("prop3.2",
       "Product throttling under power domination and PSD moves by a "
       "factor of at most two (three halves for the PSD initial-cost "
       "subdivision) under local operations.",
       7,
       lambda nmax: _graph_cases("prop3.2", "product_stability", nmax,
                                 nmin=2, connected=True))

_suite("prop3.12",
       "Standard-rule no-cost product throttling moves by at most one "
       "under local operations.",
       7,
       lambda nmax: _graph_cases("prop3.12", "one_step_stability", nmax,
                                 nmin=2, keep=_has_edge))

_suite("thm3.10",
       "Standard-rule no-cost product throttling equals the least size "
       "completing in one step and is at least half the order "
       "(connected graphs with an edge).",
       7,
       lambda nmax: _graph_cases("thm3.10", "one_step_identity", nmax,
                                 nmin=2, connected=True))

_suite("thm3.11",
       "Connected even-order graphs reach half-order no-cost product "
       "throttling exactly when they are matched-sum graphs.",
       8,
       lambda nmax: _graph_cases("thm3.11", "half_order_characterization",
                                 nmax, nmin=2, connected=True,
                                 even_only=True))

_suite("thzx",
       "Standard-rule initial-cost product throttling equals the order "
       "on every graph.",
       7,
       lambda nmax: _graph_cases("thzx", "product_equals_order", nmax))

_suite("remark1.1",
       "Completing numbers and all three throttling kinds sit inside "
       "their order bounds on every graph with an edge, for all rules.",
       7,
       lambda nmax: _graph_cases("remark1.1", "bounds_chain", nmax,
                                 nmin=2, keep=_has_edge,
                                 rules=("zf", "psd", "pd")))

_suite("universal-vertex",
       "Unit no-cost product, a universal vertex, and initial-cost "
       "product two coincide under power domination (graphs with an "
       "edge).",
       7,
       lambda nmax: _graph_cases("universal-vertex", "universal_vertex",
                                 nmax, nmin=2, keep=_has_edge))

_suite("pt-monotone",
       "Adding a vertex to the initial set never increases propagation "
       "time, for all rules.",
       6,
       lambda nmax: _graph_cases("pt-monotone", "pt_superset", nmax,
                                 rules=("zf", "psd", "pd")))

_suite("psd-step",
       "The PSD step agrees with the standard step applied inside each "
       "component of the unfilled subgraph.",
       5,
       lambda nmax: _graph_cases("psd-step", "component_step", nmax))


def build_cases(name: str, nmax: Optional[int] = None,
                budget: Optional[int] = None, seed: int = 0) -> list[Case]:
    """Expand a suite into cases, optionally sampling down to a budget."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    spec = SUITES[name]
    limit = spec.default_nmax if nmax is None else nmax
    if not 1 <= limit <= MAX_ENUMERATION_ORDER:
        raise ValueError(
            f"nmax must be between 1 and {MAX_ENUMERATION_ORDER}")
    cases = spec.build(limit)
    if budget is not None and 0 <= budget < len(cases):
        rng = random.Random(seed)
        picks = sorted(rng.sample(range(len(cases)), budget))
        cases = [cases[i] for i in picks]
    return cases

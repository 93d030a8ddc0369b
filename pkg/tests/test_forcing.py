"""The fast engine against a plain-set oracle, plus step semantics."""

from itertools import combinations
from math import inf

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from throttlekit.families import (
    complete,
    cycle,
    enumerate_graphs,
    fixture,
    path,
    star,
)
from throttlekit.forcing import (
    INFINITY,
    Rule,
    forcing_number,
    graph_propagation_time,
    is_forcing_set,
    k_propagation_time,
    propagate,
    propagation_time,
    step,
)
from throttlekit.graph import Graph

from . import oracles
from .strategies import graphs

RULES = [Rule.STANDARD, Rule.PSD, Rule.POWER_DOMINATION]


def oracle_pt(rule: Rule, g: Graph, members) -> float:
    return oracles.naive_pt(rule.value if rule is not Rule.STANDARD else "zf",
                            g, members)


def as_oracle_rule(rule: Rule) -> str:
    return {Rule.STANDARD: "zf", Rule.PSD: "psd", Rule.POWER_DOMINATION: "pd"}[rule]


@pytest.mark.parametrize("rule", RULES)
def test_engine_matches_oracle_exhaustively(rule):
    # Every iso class up to order 5, every start set.
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            for k in range(n + 1):
                for combo in combinations(range(n), k):
                    expected = oracles.naive_pt(as_oracle_rule(rule), g, combo)
                    got = propagation_time(rule, g, g.vertex_set(combo))
                    assert got == (INFINITY if expected is inf else expected), (
                        f"{rule} disagrees on {g!r} from {combo}"
                    )


@given(graphs(max_n=7), st.data())
def test_engine_matches_oracle_sampled(g, data):
    rule = data.draw(st.sampled_from(RULES))
    members = data.draw(st.sets(st.integers(0, g.n - 1)))
    expected = oracles.naive_pt(as_oracle_rule(rule), g, members)
    got = propagation_time(rule, g, g.vertex_set(members))
    assert got == (INFINITY if expected is inf else expected)


def test_empty_start_on_nonempty_graph_stalls():
    g = path(3)
    for rule in RULES:
        assert propagation_time(rule, g, g.vertex_set(())) == INFINITY


def test_full_start_takes_no_steps():
    g = path(3)
    for rule in RULES:
        assert propagation_time(rule, g, g.vertex_set()) == 0


def test_standard_step_needs_unique_unfilled_neighbor():
    g = path(4)
    got = step(Rule.STANDARD, g, g.vertex_set([1]))
    # Vertex 1 sees two unfilled neighbors, so nothing moves.
    assert got.members == ()
    assert step(Rule.STANDARD, g, g.vertex_set([0, 1])).members == (2,)


def test_psd_step_splits_components():
    # Deleting the filled set separates the leaves of a star.
    g = star(4)
    got = step(Rule.PSD, g, g.vertex_set([0]))
    assert got.members == (1, 2, 3)
    assert step(Rule.STANDARD, g, g.vertex_set([0])).members == ()


def test_power_domination_first_step_dominates():
    g = star(4)
    assert step(Rule.POWER_DOMINATION, g, g.vertex_set([0])).members == (1, 2, 3)
    # From time index 2 on it behaves like the standard rule.
    assert step(Rule.POWER_DOMINATION, g, g.vertex_set([0]),
                time_index=2).members == ()


def test_power_domination_later_steps_are_standard():
    g = fixture("fig4_twin").graph
    c = fixture("fig4_twin").vertices["c"]
    first = step(Rule.POWER_DOMINATION, g, g.vertex_set([c]), time_index=1)
    assert len(first) == g.degree(c)
    after = g.vertex_set([c]) | first
    # The twin branches block the standard rule immediately afterwards.
    assert step(Rule.POWER_DOMINATION, g, after, time_index=2).members == ()
    assert propagation_time(Rule.POWER_DOMINATION, g, g.vertex_set([c])) == INFINITY


def test_step_validates_inputs():
    g = path(3)
    with pytest.raises(ValueError):
        step(Rule.STANDARD, g, g.vertex_set([0]), time_index=0)
    with pytest.raises(ValueError):
        step(Rule.STANDARD, g, Graph(4).vertex_set([0]))


def test_trace_records_each_round():
    g = path(5)
    trace = propagate(Rule.STANDARD, g, g.vertex_set([0]))
    assert trace.completed
    assert trace.propagation_time == 4
    assert [s.members for s in trace.steps] == [(1,), (2,), (3,), (4,)]
    assert trace.filled_after(0).members == (0,)
    assert trace.filled_after(2).members == (0, 1, 2)
    assert trace.final.members == (0, 1, 2, 3, 4)
    with pytest.raises(ValueError):
        trace.filled_after(5)


def test_trace_on_stall():
    g = path(4)
    trace = propagate(Rule.STANDARD, g, g.vertex_set([1]))
    assert not trace.completed
    assert trace.steps == ()
    assert trace.propagation_time == INFINITY
    assert trace.to_dict()["propagation_time"] is None


def test_trace_dict_shape():
    g = cycle(4)
    d = propagate(Rule.PSD, g, g.vertex_set([0, 2])).to_dict()
    assert d["rule"] == "psd"
    assert d["order"] == 4
    assert d["initial"] == [0, 2]
    assert d["completed"] is True
    # The two unfilled vertices sit in separate components, so one round
    # finishes even though each filled vertex has two unfilled neighbors.
    assert d["steps"] == [[1, 3]]


def test_psd_trace_can_record_components():
    g = path(5)
    trace = propagate(Rule.PSD, g, g.vertex_set([2]), record_components=True)
    assert trace.completed
    first_round = trace.components_per_step[0]
    assert [c.members for c in first_round] == [(0, 1), (3, 4)]


@pytest.mark.parametrize("rule", RULES)
def test_forcing_number_matches_oracle(rule):
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            k, wit = forcing_number(rule, g)
            assert k == oracles.naive_forcing_number(as_oracle_rule(rule), g)
            assert len(wit) == k
            assert is_forcing_set(rule, g, wit)


def test_forcing_number_known_values():
    assert forcing_number(Rule.STANDARD, path(6))[0] == 1
    assert forcing_number(Rule.STANDARD, cycle(6))[0] == 2
    assert forcing_number(Rule.STANDARD, complete(5))[0] == 4
    assert forcing_number(Rule.PSD, path(6))[0] == 1
    assert forcing_number(Rule.PSD, cycle(6))[0] == 2
    # One measurement unit placed anywhere solves a path.
    assert forcing_number(Rule.POWER_DOMINATION, path(6))[0] == 1
    assert forcing_number(Rule.POWER_DOMINATION, star(7))[0] == 1


@pytest.mark.parametrize("rule", RULES)
def test_k_propagation_time_matches_oracle(rule):
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            for k in range(n + 1):
                expected = oracles.naive_kpt(as_oracle_rule(rule), g, k)
                t, wit = k_propagation_time(rule, g, k)
                assert t == (INFINITY if expected is inf else expected)
                if t != INFINITY:
                    assert propagation_time(rule, g, wit) == t


def test_k_propagation_time_bounds_check():
    g = path(3)
    with pytest.raises(ValueError):
        k_propagation_time(Rule.STANDARD, g, 4)


def test_graph_propagation_time_uses_minimum_sets():
    t, wit = graph_propagation_time(Rule.STANDARD, path(7))
    assert t == 6 and len(wit) == 1
    t, wit = graph_propagation_time(Rule.STANDARD, cycle(6))
    assert t == 2 and len(wit) == 2


def test_rule_values_are_cli_names():
    assert Rule("zf") is Rule.STANDARD
    assert Rule("psd") is Rule.PSD
    assert Rule("pd") is Rule.POWER_DOMINATION

"""Watch the three propagation processes color the same graph.

Run:  python3 demos/propagation_walkthrough.py
"""

from throttlekit import Rule, fixture, propagate


def show(rule: Rule, g, start, label: str) -> None:
    trace = propagate(rule, g, g.vertex_set(start), record_components=True)
    print(f"\n{rule.value} from {sorted(start)} on {label}")
    filled = set(start)
    for t, newly in enumerate(trace.steps, start=1):
        filled |= set(newly.members)
        print(f"  t={t}: forced {sorted(newly.members)}  "
              f"(now {len(filled)}/{g.n})")
    if trace.completed:
        print(f"  done in {trace.propagation_time} steps")
    else:
        stuck = sorted(set(range(g.n)) - filled)
        print(f"  stalled; never reached {stuck}")


def main() -> None:
    fx = fixture("fig5_K2corona")
    g = fx.graph
    print(f"{fx.meta['name']}: n={g.n}, edges={g.edges()}")

    # The standard rule needs a filled vertex with a unique unfilled
    # neighbor, so a single leaf-heavy vertex gets stuck immediately.
    show(Rule.STANDARD, g, [0], "the left spine vertex")

    # The positive-semidefinite rule looks one component of the unfilled
    # part at a time and walks away from the same start.
    show(Rule.PSD, g, [0], "the left spine vertex")

    # Power domination first grabs the whole closed neighborhood, then
    # continues with the standard rule.
    show(Rule.POWER_DOMINATION, g, [0], "the left spine vertex")

    # The standard rule does finish from three of the four leaves: each
    # leaf hands its spine vertex a unique unfilled neighbor.
    show(Rule.STANDARD, g, [2, 3, 4], "three leaves")


if __name__ == "__main__":
    main()

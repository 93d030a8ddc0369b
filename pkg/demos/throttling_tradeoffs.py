"""Size-versus-speed trade-offs on paths and a six-legged spider.

Run:  python3 demos/throttling_tradeoffs.py
"""

from throttlekit import (
    Rule,
    ThrottleKind,
    parse_graph_expression,
    throttling_number,
)


def tour(expr: str, rule: Rule) -> None:
    g = parse_graph_expression(expr).graph
    print(f"\n{expr} under {rule.value} (n={g.n})")
    result = throttling_number(rule, ThrottleKind.SUM, g, with_table=True)
    print("  size  fastest pt  size+pt")
    for k, (value, witness) in result.table.items():
        if witness is None:
            print(f"  {k:>4}  unreachable")
            continue
        pt = value - k
        marker = "  <- optimum" if value == result.value else ""
        print(f"  {k:>4}  {pt:>10}  {value:>7}{marker}")
    for kind in ThrottleKind:
        res = throttling_number(rule, kind, g)
        print(f"  {kind.value:9} optimum {res.value:>3}  "
              f"witness {sorted(res.witness.members)} (pt {res.propagation_time})")


def main() -> None:
    # On a path the sum optimum balances evenly spaced seeds against the
    # sweep time; every third vertex is the classic layout.
    tour("path:10", Rule.STANDARD)

    # Power domination covers neighborhoods first, so the same path
    # needs far fewer seeds.
    tour("path:10", Rule.POWER_DOMINATION)

    # The long-legged spider is the standard small example where the
    # no-initial-cost product and the initial-cost product optima pick
    # different start sets.
    tour("spider:3,3,3,3,3,3", Rule.POWER_DOMINATION)


if __name__ == "__main__":
    main()

"""Dominating sets, private neighbors, and checkable order bounds.

Run:  python3 demos/domination_certificates.py
"""

from throttlekit import (
    ThrottleKind,
    extremal_product_throttling_report,
    optimal_dominating_set,
    parse_graph_expression,
    power_domination_certificate,
)


def main() -> None:
    # The distinguished minimum dominating set maximizes internal edges,
    # which is exactly what the two-step constructions below want.
    g = parse_graph_expression("corona:C4,1").graph
    cert = optimal_dominating_set(g)
    print(f"leafed 4-cycle: gamma={len(cert.vertices)}, "
          f"set={sorted(cert.vertices.members)}")
    for v, private in sorted(cert.private_neighbors.items()):
        print(f"  dominator {v} keeps private neighbors {list(private)}")

    # The certificate for the 6n/7 product bound: either the dominating
    # set is already small, or one private neighbor per dominator is
    # removed and the remainder re-dominated.
    for expr in ["path:7", "corona:C3,1", "family_6n7:P4"]:
        g = parse_graph_expression(expr).graph
        c = power_domination_certificate(g, ThrottleKind.PRODUCT_INITIAL_COST)
        c.validate()
        print(f"\n{expr}: n={g.n}, branch={c.branch}")
        print(f"  start set {sorted(c.power_set.members)} colors everything "
              f"in {c.propagation_time} steps")
        print(f"  cost {c.value} <= {c.bound_numerator}/{c.bound_denominator}")

    # Equality in the bound forces the dominating number to 3n/7.
    print("\nwhere the 6n/7 bound is tight:")
    for expr in ["family_6n7:K2", "family_6n7:C6", "path:7"]:
        report = extremal_product_throttling_report(
            parse_graph_expression(expr).graph)
        print(f"  {expr:16} value={report['value']:>2} "
              f"tight={report['attains_bound']} "
              f"gamma3n7={report['domination_at_three_sevenths']}")


if __name__ == "__main__":
    main()

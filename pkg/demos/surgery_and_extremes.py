"""How throttling reacts to vertex/edge surgery, and the extremal families.

Run:  python3 demos/surgery_and_extremes.py
"""

from throttlekit import Rule, ThrottleKind, parse_graph_expression, throttling_number

PD = Rule.POWER_DOMINATION
PSD = Rule.PSD


def both_products(expr: str, rule: Rule) -> tuple[int, int]:
    g = parse_graph_expression(expr).graph
    star = throttling_number(rule, ThrottleKind.PRODUCT_NO_INITIAL_COST, g)
    cross = throttling_number(rule, ThrottleKind.PRODUCT_INITIAL_COST, g)
    return star.value, cross.value


def main() -> None:
    # Removing one well-chosen vertex can halve the product cost, and
    # subdividing one edge can double it. None of these moves is
    # monotone in general.
    print("deleting the dominating twin x from a leafed twin pair:")
    for expr in ["fig4_twin", "fig4_twin/dv:x"]:
        s, c = both_products(expr, PD)
        print(f"  {expr:18} th*={s}  thx={c}")

    print("\ncontracting the spine edge of a leafed pair:")
    for expr in ["fig5_K2corona", "fig5_K2corona/ce:e"]:
        s, c = both_products(expr, PD)
        print(f"  {expr:20} th*={s}  thx={c}")

    print("\nsubdivision growing a leaf-heavy host:")
    for expr in ["fig7_subdiv", "fig7_subdiv/se:e"]:
        s, c = both_products(expr, PD)
        print(f"  {expr:18} th*={s}  thx={c}")

    # Stars are the cheapest possible hosts: one center observes all,
    # so th* stays 1 while subdividing every edge breaks the shortcut.
    print("\nstars before and after subdividing every edge:")
    for leaves in [5, 6, 7]:
        expr = "star:%d" % leaves
        g = parse_graph_expression(expr).graph
        sub = expr
        for u, v in sorted(g.edges()):
            sub += f"/se:{u}-{v}"
        s0, c0 = both_products(expr, PSD)
        s1, c1 = both_products(sub, PSD)
        print(f"  star:{leaves}  th*={s0} thx={c0}   subdivided: th*={s1} thx={c1}")

    # Long paths are the expensive end: cost grows linearly with order.
    print("\npaths under power domination:")
    for n in range(4, 11):
        s, c = both_products(f"path:{n}", PD)
        print(f"  path:{n:<2} th*={s}  thx={c}")


if __name__ == "__main__":
    main()

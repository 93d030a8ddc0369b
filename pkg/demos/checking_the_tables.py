"""Replay the recorded claims and the exhaustive small-order checks.

Run:  python3 demos/checking_the_tables.py
"""

import json

from throttlekit.claims import claims_matching, evaluate_claim
from throttlekit.report import resolve_workers, run_suite
from throttlekit.suites import SUITES


def main() -> None:
    # Every recorded value about path graphs, recomputed from scratch.
    path_claims = claims_matching({"family": "path"})
    failures = [r for c in path_claims if not (r := evaluate_claim(c))["passed"]]
    print(f"path claims: {len(path_claims)} recomputed, "
          f"{len(failures)} disagreements")

    # One claim record in full, the same shape the CLI emits.
    sample = evaluate_claim(claims_matching({"figure": "4"})[0])
    print(json.dumps(sample, indent=2))

    # The suites sweep every connected graph up to a cutoff and look
    # for counterexamples to an inequality. Empty lists are the point.
    workers = resolve_workers(None)
    for name, nmax in [("universal-vertex", 6), ("pt-monotone", 5)]:
        report = run_suite(name, nmax=nmax, workers=workers)
        bad = [r for r in report.records if not r["passed"]]
        print(f"suite {name}: {len(report.records)} graphs checked "
              f"through n={nmax}, {len(bad)} violations")
        print(f"  {SUITES[name].description}")


if __name__ == "__main__":
    main()

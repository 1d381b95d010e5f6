#!/usr/bin/env python3
"""Run every check suite over the generator/norm catalog cross product.

Prints one row per (generator, planar norm, suite) and a final summary.
Exits 1 when any suite reports a genuine violation; hypothesis-not-met
rows are expected for the gated combinations (flat generators, the max
norm, and so on) and do not fail the run.
"""
import argparse
import sys
import time

from orlnorm import catalog_orlicz_functions, catalog_planar_norms, unit_weights
from orlnorm.verify import SUITE_IDS, run_suites


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=int, default=80)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--atoms", type=int, default=6)
    args = ap.parse_args()

    space = unit_weights(args.atoms)
    phis = catalog_orlicz_functions()
    ps = catalog_planar_norms()
    counts = {"passed": 0, "failed": 0, "hypothesis-not-met": 0, "empty-feasible": 0}
    t0 = time.monotonic()
    failed_rows = []
    for phi_name, phi in phis.items():
        for p_name, p in ps.items():
            reports = run_suites(list(SUITE_IDS), phi, p, space,
                                 seed=args.seed, budget=args.budget)
            for rep in reports:
                counts[rep.status] = counts.get(rep.status, 0) + 1
                mark = "" if rep.status != "failed" else "   <-- violation"
                print(f"{phi_name:20s} {p_name:8s} {rep.theorem_id:3s} "
                      f"{rep.status:20s} trials={rep.trials:6d}{mark}")
                if rep.status == "failed":
                    failed_rows.append((phi_name, p_name, rep.theorem_id))
    dt = time.monotonic() - t0
    print(f"\nsummary: {counts} in {dt:.1f}s")
    if failed_rows:
        print("violations:", failed_rows)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Emit monotonicity-modulus tables for every catalog planar norm as CSV.

Each file has columns epsilon,delta,refinement_bound; the closed forms
(identity for the sum norm, zero for the max norm, 1 - sqrt(1 - eps^2) for
the quadratic mean) make quick eyeball checks easy.
"""
import argparse
import os

import numpy as np

from orlnorm import catalog_planar_norms, modulus_diagnostics


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", default="modulus_tables")
    ap.add_argument("--resolution", type=float, default=1e-3)
    ap.add_argument("--step", type=float, default=0.05)
    args = ap.parse_args()

    os.makedirs(args.out_dir, exist_ok=True)
    eps_grid = np.arange(args.step, 1.0 - args.step / 2, args.step)
    for name, p in catalog_planar_norms().items():
        rows = ["epsilon,delta,refinement_bound"]
        for eps in eps_grid:
            d = modulus_diagnostics(p, float(eps), args.resolution)
            rows.append(f"{eps:.12g},{d.value:.12g},{d.refinement_bound:.12g}")
        path = os.path.join(args.out_dir, f"modulus_{name.replace(':', '_')}.csv")
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(rows) + "\n")
        print(f"wrote {path} ({len(eps_grid)} rows)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

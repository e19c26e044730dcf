"""Run the law suite over several seeds and scales and tabulate the results.

    python3 scripts/run_selftest_grid.py --seeds 0 1 2 --scales 0.25 1.0 --jobs 4
    python3 scripts/run_selftest_grid.py --out grid.csv

Every cell should read PASS; timings show how the sampled laws scale.
"""

import argparse
import csv
import sys

from linfield.laws import LAWS, SuiteConfig, run_suite


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--scales", type=float, nargs="+", default=[0.25, 1.0])
    ap.add_argument("--laws", nargs="+", default=list(LAWS))
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", help="optional CSV path")
    args = ap.parse_args(argv)

    rows = []
    for scale in args.scales:
        for seed in args.seeds:
            config = SuiteConfig(seed=seed, scale=scale, laws=tuple(args.laws), jobs=args.jobs)
            for res in run_suite(config):
                rows.append((scale, seed, res.name, res.passed, res.cases, round(res.seconds, 3)))
                print(f"scale={scale:<5} seed={seed:<3} {res.line()}", flush=True)

    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["scale", "seed", "law", "passed", "cases", "seconds"])
            w.writerows(rows)
    failed = sum(not r[3] for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} law runs passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

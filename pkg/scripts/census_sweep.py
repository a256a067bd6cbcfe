#!/usr/bin/env python
"""Census of januarials over a prime range for every realisable l.

Prints, per l, how many januarials were built, how many came out
disconnected, and the genus distribution. Optionally writes all rows as CSV.

    python scripts/census_sweep.py --pmax 199 --lmax 12 --csv census.csv
"""

import argparse
import csv
from collections import Counter, defaultdict

from januarials.construct import solve_generators, valid_ls
from januarials.diagram import CSV_HEADER, build_diagram, genus_breakdown
from januarials.fieldcore import euler_phi, is_prime
from januarials.gk import januarial_thetas


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pmin", type=int, default=5)
    ap.add_argument("--pmax", type=int, default=97)
    ap.add_argument("--lmax", type=int, default=12)
    ap.add_argument("--csv")
    args = ap.parse_args()

    rows = []
    stats = defaultdict(lambda: {"built": 0, "disconnected": 0, "genus": Counter()})
    mismatches = []
    for p in range(max(args.pmin, 5), args.pmax + 1):
        if not is_prime(p):
            continue
        thetas = januarial_thetas(p)
        if len(thetas) != euler_phi((p + 1) // 2) // 2:
            mismatches.append(p)
        for l in valid_ls(p, args.lmax):
            for theta in thetas:
                d = build_diagram(solve_generators(p, l, theta))
                g = genus_breakdown(d)
                s = stats[l]
                s["built"] += 1
                if d.connected:
                    s["genus"][g.genus] += 1
                else:
                    s["disconnected"] += 1
                rows.append((p, l, theta, d.eta_x, d.eta_y, g.genus))

    for l in sorted(stats):
        s = stats[l]
        dist = ", ".join(f"g={g}:{n}" for g, n in sorted(s["genus"].items()))
        print(f"l={l:>3}  built={s['built']:>5}  disconnected={s['disconnected']:>3}  {dist}")
    print(f"count mismatches: {mismatches or 'none'}")

    if args.csv:
        rows.sort()
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_HEADER)
            w.writerows([["" if v is None else v for v in r] for r in rows])


if __name__ == "__main__":
    main()

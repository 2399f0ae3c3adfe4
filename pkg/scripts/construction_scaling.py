"""Construction statistics across n: per-n means and log-log slopes, as CSV."""

import argparse
import csv
import sys

from cliquelb.lbgraph import SUMMARY_FIELDS, construction_statistics, loglog_slope


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-list", default="64,128,256,512")
    ap.add_argument("--seeds", type=int, default=10)
    ap.add_argument("--first-seed", type=int, default=1)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    ns = [int(t) for t in args.n_list.split(",")]
    seeds = list(range(args.first_seed, args.first_seed + args.seeds))
    means = {}
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n"] + [f"mean_{f}" for f in SUMMARY_FIELDS])
    for n in ns:
        s = construction_statistics(n, seeds, threads=args.threads).summary
        means[n] = {f: s[f].mean for f in SUMMARY_FIELDS}
        w.writerow([n] + [f"{means[n][f]:.2f}" for f in SUMMARY_FIELDS])
    if len(ns) > 1:
        for f in ("k_total", "h_size", "edge_count"):
            slope = loglog_slope(ns, [means[n][f] for n in ns])
            print(f"# slope {f}: {slope:.3f}", file=sys.stderr)


if __name__ == "__main__":
    main()

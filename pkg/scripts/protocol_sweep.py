"""Run the two-party protocol on the seeded random sweep and report bits vs budget."""

import argparse
import csv
import sys

from cliquelb.experiments import large_cut_witness, protocol_sweep
from cliquelb.twoparty import run_protocol, verify_protocol


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    cases = protocol_sweep(args.count, seed=args.seed) + [(1.0, large_cut_witness())]
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "q", "cut", "case", "total_bits", "budget", "correct"])
    bad = 0
    for q, pg in cases:
        res = run_protocol(pg)
        chk = verify_protocol(pg, res)
        bad += not (chk.correct and chk.within_budget)
        w.writerow([pg.n, q, len(pg.cut_edges), res.case_taken.value,
                    res.ledger.total_bits, chk.budget, chk.correct])
    print(f"# {len(cases)} instances, {bad} failing", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

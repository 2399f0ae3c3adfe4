"""Folklore CONGEST detection on the seeded sweep: rounds and cut traffic per direction."""

import argparse
import csv
import sys

from cliquelb.congest import CongestNetwork, measure_cut_traffic_by_direction, run_folklore_detection
from cliquelb.experiments import congest_sweep
from cliquelb.graph import contains_clique
from cliquelb.reduction import PartitionedGraph


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random", type=int, default=50)
    ap.add_argument("--planted", type=int, default=10)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "ell", "b", "detected", "oracle", "rounds", "cut",
                "bits_a_to_b", "bits_b_to_a", "r_m_b"])
    for case in congest_sweep(args.random, args.planted, seed=args.seed):
        trace = run_folklore_detection(CongestNetwork(case.graph, case.bandwidth), case.ell)
        pg = PartitionedGraph.from_partition(case.graph, case.side_a)
        d = measure_cut_traffic_by_direction(trace, pg)
        w.writerow([pg.n, case.ell, case.bandwidth, bool(trace.detecting_nodes),
                    contains_clique(case.graph, case.ell), trace.rounds_used, len(pg.cut_edges),
                    d["AliceToBob"], d["BobToAlice"], trace.rounds_used * len(pg.cut_edges) * case.bandwidth])


if __name__ == "__main__":
    main()

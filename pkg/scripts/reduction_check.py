"""Build a lower-bound graph and check clique detection against DISJ on sampled inputs."""

import argparse
import json

from cliquelb.lbgraph import construct_lower_bound_graph, verify_lower_bound_graph
from cliquelb.reduction import check_reduction


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=32)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--ell", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--samples", type=int, default=500)
    args = ap.parse_args()

    lbg, stats = construct_lower_bound_graph(args.n, args.seed)
    verified = verify_lower_bound_graph(lbg, len(lbg.base.edges)).passed
    out = {"n": args.n, "seed": args.seed, "k": lbg.k, "edges": stats.edge_count, "verified": verified}
    for ell in args.ell:
        rep = check_reduction(lbg, ell, samples=args.samples, seed=args.seed)
        out[f"ell_{ell}"] = {"checked": rep.instances_checked, "mismatches": len(rep.mismatches),
                             "cut_size": rep.cut_size}
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()

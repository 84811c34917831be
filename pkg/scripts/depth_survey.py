#!/usr/bin/env python3
"""Survey invariant statistics over random squarefree quotients.

Prints how often maximal depth, Cohen-Macaulayness and sequential
Cohen-Macaulayness occur, and the joint depth/mdepth/dim histogram.
"""
import argparse
import collections
import random

from maxdepth.complexes import to_ideal
from maxdepth.filtration import is_sequentially_cm
from maxdepth.invariants import profile
from maxdepth.random_instances import random_complex


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--min-vertices", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    counts = collections.Counter()
    triples = collections.Counter()
    for _ in range(args.samples):
        n = rng.randint(args.min_vertices, args.max_vertices)
        I = to_ideal(random_complex(rng, n))
        prof = profile(I)
        counts["maximal_depth"] += prof.maximal_depth
        counts["cohen_macaulay"] += prof.cohen_macaulay
        counts["generalized_cm"] += prof.generalized_cm
        counts["seq_cm"] += is_sequentially_cm(I).status == "true"
        triples[(prof.depth, prof.mdepth, prof.dim)] += 1

    total = args.samples
    print(f"samples: {total}")
    for key in ("maximal_depth", "cohen_macaulay", "generalized_cm", "seq_cm"):
        print(f"{key}: {counts[key]} ({100.0 * counts[key] / total:.1f}%)")
    print("depth/mdepth/dim histogram:")
    for (d, md, dim), k in sorted(triples.items()):
        print(f"  depth={d} mdepth={md} dim={dim}: {k}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Random search for a maximal-depth quotient whose nonzero local cohomology
has finite length.  An empty hit list means no counterexample at this size."""
import argparse
import json

from maxdepth.cli import probe_json
from maxdepth.filtration import ProbeConfig, probe_open_question


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--min-vertices", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rep = probe_open_question(
        ProbeConfig(
            samples=args.samples,
            max_vertices=args.max_vertices,
            min_vertices=args.min_vertices,
            seed=args.seed,
        )
    )
    print(json.dumps(probe_json(rep), sort_keys=True, indent=2))


if __name__ == "__main__":
    main()

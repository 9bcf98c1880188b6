#!/usr/bin/env python3
"""Resolve the class-2 nilpotent enveloping algebra's augmentation ideal
and print the table, the shifts, and wall-clock timings per level.

This is the instance everything else in the repo is tuned against:
3 letters, 8 cubic relations, global dimension 6, regularity 3.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from helpers import augmentation_module, nilpotent_enveloping
from ncres.resolver import (ResolutionRequest, betti_summary,
                            render_betti_text, resolve)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--length", type=int, default=7)
    ap.add_argument("--degree-bound", type=int, default=9)
    ap.add_argument("--no-tshift", action="store_true")
    args = ap.parse_args()

    mod = augmentation_module(nilpotent_enveloping())
    t0 = time.perf_counter()
    res = resolve(ResolutionRequest(mod, degree_bound=args.degree_bound,
                                    length_bound=args.length,
                                    trust_finite=True,
                                    tshift=not args.no_tshift))
    elapsed = time.perf_counter() - t0

    print(f"status: {res.status}   ({elapsed:.2f}s, "
          f"tshift={'off' if args.no_tshift else 'on'})")
    summary = betti_summary(res.table)
    print(f"regularity {summary['regularity']}, "
          f"global dimension {summary['global_dimension']}")
    for lev in sorted(res.level_shifts):
        degs = res.level_shifts[lev]
        print(f"  level {lev}: {len(degs)} generators at degrees "
              f"{sorted(set(degs))}")
    print()
    print(render_betti_text(res.table))
    for step in res.steps:
        print(f"step {step.index}: window {step.window} "
              f"(offset {step.offset}), "
              f"block {sum(step.betti_block.values())}, "
              f"kept {sum(step.betti.values())}")


if __name__ == "__main__":
    main()

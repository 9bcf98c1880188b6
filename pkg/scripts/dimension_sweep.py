#!/usr/bin/env python3
"""Dimension bookkeeping across random presentations.

For each instance and each degree d the graded dimension of the
relation ideal (direct noncommutative linear algebra) is compared with
the count of length-d words whose place-encoded image is reducible
modulo the truncated commutative basis, and likewise for the module
quotient.  These equalities are what make the places encoding usable
as a computational substitute for the free algebra.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from helpers import random_module, random_presentation
from ncres.checks import check_dimension_equalities


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=40)
    ap.add_argument("--dmax", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    bad = 0
    t0 = time.perf_counter()
    for k in range(args.instances):
        alg = random_presentation(rng)
        mod = random_module(rng, alg)
        failures = check_dimension_equalities(mod, dmax=args.dmax)
        tag = "ok" if not failures else "FAIL"
        print(f"[{k:3d}] n={alg.n_letters} rels={len(alg.relations)} "
              f"rank={mod.rank} gens={len(mod.generators)} {tag}")
        for f in failures:
            bad += 1
            print(f"      {f}")
    checked = 2 * args.dmax * args.instances
    print(f"\n{checked} equalities checked, {bad} failures, "
          f"{time.perf_counter() - t0:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())

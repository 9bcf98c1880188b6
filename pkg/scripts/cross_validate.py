#!/usr/bin/env python3
"""Randomized cross-validation of the two resolution pipelines.

Draws monomial instances (algebra relations and module generators all
single words), resolves each with the letterplace pipeline at a
certifying degree bound and with the colon-ideal recursion, and demands
entry-for-entry equality of the Betti tables.  Prints a running line
per instance and a summary at the end.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ncres.field import rationals
from ncres.freealg import AlgebraPresentation, ModulePresentation
from ncres.monores import (MonomialModule, in_ideal, monomial_ideal,
                           monomial_resolution)
from ncres.resolver import (ResolutionRequest, monomial_degree_bound,
                            resolve)

QQ = rationals()


def random_instance(rng):
    n = rng.randint(1, 3)
    rels = [tuple(rng.randrange(n) for _ in range(rng.randint(2, 4)))
            for _ in range(rng.randint(0, 4))]
    ideal = monomial_ideal(rels)
    r = rng.randint(1, 2)
    shifts = tuple(rng.randint(0, 2) for _ in range(r))
    gens = []
    for _ in range(rng.randint(1, 3)):
        for _ in range(20):
            w = tuple(rng.randrange(n) for _ in range(rng.randint(1, 3)))
            if not in_ideal(ideal, w):
                gens.append((rng.randrange(r), w))
                break
    return n, ideal, shifts, gens


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=50)
    ap.add_argument("--length", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    done = 0
    mismatches = 0
    t0 = time.perf_counter()
    while done < args.instances:
        n, ideal, shifts, gens = random_instance(rng)
        if not gens:
            continue
        base = max(shifts[c] + len(w) for c, w in gens)
        D = monomial_degree_bound(base, max(ideal.max_degree, 2),
                                  args.length)
        oracle = monomial_resolution(ideal, MonomialModule(shifts, gens),
                                     args.length)
        alg = AlgebraPresentation(QQ, tuple("abc"[:n]),
                                  [{v: QQ.one} for v in ideal.basis])
        mod = ModulePresentation(alg, shifts, [{g: QQ.one} for g in gens])
        res = resolve(ResolutionRequest(mod, degree_bound=D,
                                        length_bound=args.length))
        ok = oracle.entries == res.table.entries
        done += 1
        total = sum(oracle.entries.values())
        print(f"[{done:3d}] n={n} rels={len(ideal.basis)} "
              f"gens={len(gens)} D={D} entries={total} "
              f"{'ok' if ok else 'MISMATCH'}")
        if not ok:
            mismatches += 1
            print(f"      ideal {ideal.basis}")
            print(f"      gens  {gens} shifts {shifts}")
            print(f"      oracle   {sorted(oracle.entries.items())}")
            print(f"      resolver {sorted(res.table.entries.items())}")
    print(f"\n{done} instances, {mismatches} mismatches, "
          f"{time.perf_counter() - t0:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())

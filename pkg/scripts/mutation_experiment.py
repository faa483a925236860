#!/usr/bin/env python3
"""Tampering-detection experiment.

Perturbs one random constant at a time and reports which checks catch
each perturbation.  Usage: mutation_experiment.py [N_MUTATIONS] [SEED].
"""

import random
import sys
import time

from fano22 import PaperConstants, SuiteConfig, random_mutation, run_all


def main(argv: list[str]) -> int:
    count = int(argv[0]) if argv else 20
    seed = int(argv[1]) if len(argv) > 1 else 20260823
    rng = random.Random(seed)
    missed = 0
    start = time.perf_counter()
    for i in range(count):
        key, raw = random_mutation(rng)
        reports = run_all(SuiteConfig(constants=PaperConstants(raw=raw)))
        caught = [f"{r.suite}/{c.id}[{c.status}]"
                  for r in reports for c in r.checks if c.status != "pass"]
        if caught:
            print(f"#{i:02d} {key}: detected by {len(caught)} checks, "
                  f"first: {caught[0]}")
        else:
            missed += 1
            print(f"#{i:02d} {key}: NOT DETECTED")
    elapsed = time.perf_counter() - start
    print(f"{count - missed}/{count} mutations detected in {elapsed:.1f}s")
    return 0 if missed == 0 else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))

#!/usr/bin/env python3
"""Compare the compiled and pure-Python checker backends.

Verifies the chained-group proof for a range of sizes with each backend and
prints per-size wall clocks plus the speedup.  The two must always agree.

Usage: python benchmarks/compare_backends.py [n_max] [--style ours|cook]
"""

import argparse
import sys
import time

from pigeonproof import php_standard, verify
from pigeonproof.checker import HAVE_NATIVE
from pigeonproof import proof_cook, proof_ours


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("n_max", type=int, nargs="?", default=16)
    parser.add_argument("--n-min", type=int, default=6)
    parser.add_argument("--style", choices=("ours", "cook"), default="ours")
    args = parser.parse_args()

    module = proof_ours if args.style == "ours" else proof_cook
    backends = ["python"] + (["native"] if HAVE_NATIVE else [])
    if not HAVE_NATIVE:
        print("note: compiled backend not built; timing pure Python only")

    header = f"{'n':>4} " + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for n in range(args.n_min, args.n_max + 1, 2):
        formula = php_standard(n)
        times = {}
        for backend in backends:
            start = time.perf_counter()
            verdict = verify(formula, module.iter_proof_lines(n), backend=backend)
            times[backend] = time.perf_counter() - start
            if not verdict.accepted:
                print(f"FAILED: n={n} backend={backend}: {verdict}")
                return 1
        row = f"{n:>4} " + "".join(f"{times[b]:>11.3f}s" for b in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['native']:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())

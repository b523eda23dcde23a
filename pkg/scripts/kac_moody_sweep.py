#!/usr/bin/env python3
"""Sweep the loop-cocycle checks over catalog algebras and window sizes.

For each semisimple catalog algebra and each degree window, runs the full
connection-cocycle pipeline (connection law, beta properties, closedness,
residue identification, non-coboundary certificate) and reports timings.

Usage: python scripts/kac_moody_sweep.py [max_window]
"""

import sys
import time

from univext import liealg as la
from univext.cli import run_loop_checks


def main():
    max_window = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for name in ("sl2", "so3", "sl3"):
        g = la.catalog(name)
        for window in range(1, max_window + 1):
            start = time.monotonic()
            results = run_loop_checks(g, window)
            elapsed = time.monotonic() - start
            ok = sum(1 for r in results if r["pass"])
            sign = next((r["detail"] for r in results
                         if "residue" in r["name"]), "")
            print(f"{name:<5} window {window}: {ok}/{len(results)} checks "
                  f"in {elapsed:.2f}s  {sign}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Tabulate dim V_g, invariant-form counts and H^2 for the catalog.

Usage: python scripts/universal_form_table.py
"""

import time

from univext import cohom as ch
from univext import invforms as iv
from univext import liealg as la


def main():
    print(f"{'algebra':<16}{'dim':>4}{'dim V':>7}{'inv forms':>11}"
          f"{'H^2':>5}{'time':>8}")
    for name in la.CATALOG_NAMES:
        g = la.catalog(name)
        start = time.monotonic()
        u = iv.universal_form(g)
        forms = iv.invariant_forms(g)
        h2 = ch.CohomologySpace(g, 1).dim_h2
        elapsed = time.monotonic() - start
        print(f"{name:<16}{g.dim:>4}{u.dim_v:>7}{len(forms):>11}"
              f"{h2:>5}{elapsed:>7.2f}s")


if __name__ == "__main__":
    main()

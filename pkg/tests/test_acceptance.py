"""Acceptance gate: one test (and one pass/fail line) per criterion.

Every criterion is verified in exact rational arithmetic; the runtime
budgets are asserted alongside the mathematical content.  The underlying
checks live in the `univext.cli` verification suites so that
`univext verify all` exercises exactly the same assertions.
"""

import random
import time
from fractions import Fraction

from univext import bundles as bn
from univext import calg as ca
from univext import cli
from univext import cohom as ch
from univext import current as cu
from univext import invforms as iv
from univext import liealg as la
from univext.linalg import Mat


def _run(items, budget, label):
    start = time.monotonic()
    failures = [r for r in items() if not r["pass"]]
    elapsed = time.monotonic() - start
    status = "PASS" if not failures and elapsed < budget else "FAIL"
    print(f"{status}  {label}  ({elapsed:.1f}s of {budget}s budget)")
    assert not failures, failures
    assert elapsed < budget, f"{elapsed:.1f}s exceeds {budget}s"


def test_criterion_1_universal_forms():
    def items():
        res = cli.suite_invforms()
        return [r for r in res if "dim V" in r["name"]
                or "round-trips" in r["name"] or "spans" in r["name"]]
    _run(items, 5, "criterion 1: universal-form correctness")


def test_criterion_2_whitehead():
    def items():
        return [{"name": f"H^2({n})", "pass":
                 ch.CohomologySpace(la.catalog(n), 1).dim_h2 == 0}
                for n in ("sl2", "sl3")]
    _run(items, 10, "criterion 2: H^2(sl2) = H^2(sl3) = 0")


def test_criterion_3_maier_universality():
    def items():
        res = cli.suite_calg_extension()
        return [r for r in res
                if "maier" in r["name"] or "delta_W" in r["name"]
                or "dim H^2" in r["name"]]
    _run(items, 30, "criterion 3: current-algebra cocycle universality")


def test_criterion_4_extension_chains():
    def items():
        res = cli.suite_calg_extension()
        return [r for r in res
                if "extensions closed" in r["name"]
                or "induced H^2" in r["name"]]
    _run(items, 60, "criterion 4: semidirect extension chains")


def test_criterion_5_chooser_independence():
    def items():
        res = cli.suite_calg_extension(seed=0)
        more = cli.suite_calg_extension(seed=101)
        return [r for r in res + more if "chooser" in r["name"]]
    _run(items, 60, "criterion 5: neutral-triple independence, 100 pairs")


def test_criterion_6_kac_moody_pipeline():
    _run(lambda: cli.suite_kac_moody(window=3), 60,
         "criterion 6: Kac-Moody pipeline on the algebraic circle")


def test_criterion_7_bundle_gluing():
    # 10 seeded forms per bundle = 20 forms, two partitions each
    _run(lambda: cli.suite_bundles(seed=7), 60,
         "criterion 7: bundle gluing with partitions of unity")


def test_criterion_8_structural_sanity():
    def items():
        res = cli.suite_calg_extension()
        picked = [r for r in res if "unitalisation iso" in r["name"]
                  or "semidirect Jacobi" in r["name"]]
        picked += [r for r in cli.suite_invforms()
                   if "centroid identity" in r["name"]]
        return picked
    _run(items, 60, "criterion 8: structural sanity")

"""
Reproduction walkthrough for numaxis.

This script:
1. Re-checks the zeta golden values zeta(0) = -1/2 and zeta(-1) = -1/12
2. Cross-checks the Euler-Maclaurin continuation against the reflection formula
3. Assigns values to Grandi's series and 1 + 2 + 3 + ... by each method
4. Follows a radial geodesic from rest at x = 0 to the horizon
5. Rebuilds the embedding figure as fig1.svg and fig1.csv

Usage:
    python reproduce.py [output_dir]
"""

import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "src"))

from numaxis import (  # noqa: E402
    MetricParams,
    SeriesSpec,
    assign,
    figure1_curves,
    init_state,
    integrate,
    partial_sum,
    partial_sum_kinematics,
    zeta_continued,
    zeta_reflected,
)
from numaxis.emitters import emit_svg, read_curves_csv, write_curves_csv  # noqa: E402

GOLDEN = {0: Fraction(-1, 2), -1: Fraction(-1, 12)}
GOLDEN_TOL = 1e-10
AGREEMENT_TOL = 1e-9


def check(label, ok):
    print(f"   {'✓' if ok else '✗'} {label}")
    return ok


def main():
    """Main reproduction workflow."""
    print("=" * 80)
    print("NUMAXIS - Reproduction")
    print("=" * 80)
    print()

    out_dir = sys.argv[1] if len(sys.argv) > 1 else "."
    results = []

    # Step 1: golden zeta values
    print("📐 Step 1: Zeta golden values...")
    for s, exact in GOLDEN.items():
        value = zeta_continued(s).real
        results.append(check(f"zeta({s}) = {value:.15g} (exact {exact})", abs(value - float(exact)) < GOLDEN_TOL))
    print()

    # Step 2: method agreement
    print("🔁 Step 2: Euler-Maclaurin vs reflection formula...")
    for s in (-1, -2, -3, -0.5):
        em = zeta_continued(s).real
        reflected = zeta_reflected(s).real
        results.append(check(f"s = {s}: {em:.15g} vs {reflected:.15g}", abs(em - reflected) < AGREEMENT_TOL))
    print()

    # Step 3: summation methods
    print("➕ Step 3: Summation methods...")
    grandi = SeriesSpec.grandi()
    naturals = SeriesSpec.naturals()
    for method in ("cesaro", "abel"):
        result = assign(grandi, method)
        results.append(check(f"{method}: 1 - 1 + 1 - ... = {result.value}", result.assigned and abs(result.value - 0.5) < 1e-6))
        result = assign(naturals, method)
        results.append(check(f"{method}: 1 + 2 + 3 + ... left unassigned", not result.assigned))
    reg = assign(naturals, "zeta-reg")
    results.append(check(f"zeta-reg: 1 + 2 + 3 + ... = {reg.value:.12g}", abs(reg.value + 1 / 12) < GOLDEN_TOL))
    print(f"   partial sum of the first 4 naturals: {partial_sum(naturals, 4)}")
    results.append(check("s(n) = n/2 + n^2/2 matches 1 + ... + n for n = 10^6", partial_sum_kinematics(10**6) == partial_sum(naturals, 10**6)))
    print()

    # Step 4: geodesic
    print("🚀 Step 4: Radial geodesic from rest at x = 0 (x_c = 1)...")
    p = MetricParams()
    trajectory = integrate(init_state(0.0, 0.0, p), 3.0, 1e-4, p)
    final = trajectory.final
    print(f"   Stopped at tau = {final.tau:.6f} ({trajectory.termination.value}), t = {final.t:.3f}")
    results.append(check("coordinate time exceeds 20 before the horizon", final.t > 20.0))
    print()

    # Step 5: figure
    print("🖼  Step 5: Embedding figure...")
    curves = figure1_curves()
    svg_path = emit_svg(curves, os.path.join(out_dir, "fig1.svg"))
    csv_path = write_curves_csv(curves, os.path.join(out_dir, "fig1.csv"))
    reread = read_curves_csv(csv_path)
    print(f"   Wrote {svg_path} and {csv_path}")
    results.append(check(f"{len(reread)} branches re-read from CSV", len(reread) == 6))
    print()

    print("=" * 80)
    if all(results):
        print(f"✅ ALL {len(results)} CHECKS PASSED")
    else:
        print(f"❌ {results.count(False)} OF {len(results)} CHECKS FAILED")
    print("=" * 80)
    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())

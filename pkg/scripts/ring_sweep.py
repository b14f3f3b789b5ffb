"""Ring-level checks over every K: orbit products, c-coefficients, phi kernel and degree-2 image.

    python3 scripts/ring_sweep.py [--max-a 4] [--max-bcd 3] [--families ABCD]
"""
import argparse
import time

from partpoly import cohomcheck as cc
from partpoly.facecount import h_polynomial_faces
from partpoly.rootsys import RSType
from partpoly.weyl import all_K


def suites(pk):
    yield cc.verify_orbit_products(pk)
    yield cc.verify_c_coefficients(pk)
    yield cc.verify_c_vanishing(pk)
    yield from cc.verify_phi_kernel(pk)
    yield cc.verify_deg2_surjectivity(pk, h_polynomial_faces(pk)[1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-a", type=int, default=4)
    ap.add_argument("--max-bcd", type=int, default=3)
    ap.add_argument("--families", default="ABCD")
    args = ap.parse_args()
    jobs = []
    for fam in args.families:
        top = args.max_a if fam == "A" else args.max_bcd
        jobs += [(fam, n) for n in range(2, top + 1)]
    start = time.perf_counter()
    failures = 0
    for fam, n in jobs:
        rt = RSType(fam, n)
        counts = {}
        for pk in all_K(rt):
            for c in suites(pk):
                checked, bad = counts.get(c.name, (0, 0))
                counts[c.name] = (checked + c.checked, bad + len(c.violations))
                for v in c.violations[:3]:
                    print("   ", v)
        failures += sum(bad for _, bad in counts.values())
        print(f"{rt.label:<5} " + "  ".join(f"{k}={b}/{c}" for k, (c, b) in counts.items()))
    print(f"violations {failures}; {time.perf_counter() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Compare facet sets, intersection graphs and f-vectors with exact geometry under two anchors.

    python3 scripts/geometry_sweep.py [--max-a 4] [--max-bcd 3]
"""
import argparse
import time

from partpoly.geomoracle import verify_combinatorics_against_geometry
from partpoly.rootsys import RSType
from partpoly.weyl import all_K


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-a", type=int, default=4)
    ap.add_argument("--max-bcd", type=int, default=3)
    args = ap.parse_args()
    jobs = [("A", n) for n in range(2, args.max_a + 1)]
    jobs += [(f, n) for f in "BCD" for n in range(2, args.max_bcd + 1)]
    start = time.perf_counter()
    failures = 0
    for fam, n in jobs:
        rt = RSType(fam, n)
        counts = {}
        for pk in all_K(rt):
            for c in verify_combinatorics_against_geometry(pk):
                checked, bad = counts.get(c.name, (0, 0))
                counts[c.name] = (checked + c.checked, bad + len(c.violations))
                for v in c.violations[:3]:
                    print("   ", v)
        summary = "  ".join(f"{name.split(':')[1]}={bad}/{checked}" for name, (checked, bad) in counts.items())
        failures += sum(bad for _, bad in counts.values())
        print(f"{rt.label:<5} {summary}")
    print(f"violations {failures}; {time.perf_counter() - start:.1f}s")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())

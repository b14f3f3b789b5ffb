"""Faces vs Precup (vs characters in type A) over every K, with a summary table.

    python3 scripts/sweep_methods.py [--max-a 6] [--max-bcd 4] [--workers N]
"""
import argparse
import time
from concurrent.futures import ProcessPoolExecutor

from partpoly.facecount import h_polynomial_faces
from partpoly.hesspoly import h_via_characters_A, h_via_precup
from partpoly.rootsys import RSType
from partpoly.weyl import all_K


def check_type(fam, n):
    rt = RSType(fam, n)
    rows, bad = 0, []
    for pk in all_K(rt):
        polys = [h_polynomial_faces(pk), h_via_precup(pk)]
        if fam == "A":
            polys.append(h_via_characters_A(pk))
        rows += 1
        if any(p != polys[0] for p in polys):
            bad.append((pk.K, [p.to_list() for p in polys]))
    return fam, n, rows, bad


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-a", type=int, default=6)
    ap.add_argument("--max-bcd", type=int, default=4)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    jobs = [("A", n) for n in range(2, args.max_a + 1)]
    jobs += [(f, n) for f in "BCD" for n in range(2, args.max_bcd + 1)]
    start = time.perf_counter()
    with ProcessPoolExecutor(args.workers) as pool:
        results = list(pool.map(check_type, *zip(*jobs)))
    total_bad = 0
    for fam, n, rows, bad in results:
        total_bad += len(bad)
        print(f"{RSType(fam, n).label:<6} {rows:>4} subsets K   mismatches: {len(bad)}")
        for item in bad:
            print("   ", item)
    print(f"total mismatches {total_bad}; {time.perf_counter() - start:.1f}s")
    return 1 if total_bad else 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Freeze reference f-vectors / h-polynomials computed by methods independent of clique counting.

Small ranks use the exact geometric oracle (vertex enumeration + face lattice);
larger ones fall back to Precup's formula. The output is checked into
tests/data/golden.json and the test-suite compares the clique-count layer to it.

    python3 scripts/freeze_golden.py [--out tests/data/golden.json]
"""
import argparse
import json
import time

from partpoly.geomoracle import geometric_f_vector, h_representation
from partpoly.hesspoly import h_via_precup
from partpoly.rootsys import RSType
from partpoly.weyl import all_K

GEOMETRIC = {"A": range(2, 5), "B": range(2, 4), "C": range(2, 4), "D": range(2, 4)}
PRECUP = {"A": range(5, 7), "B": range(4, 5), "C": range(4, 5), "D": range(4, 5)}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="tests/data/golden.json")
    args = ap.parse_args()
    entries = []
    start = time.perf_counter()
    for fam in "ABCD":
        for n in GEOMETRIC[fam]:
            rt = RSType(fam, n)
            for pk in all_K(rt):
                fv = geometric_f_vector(h_representation(pk))
                entries.append({
                    "type": fam, "n": n, "K": list(pk.K), "source": "geometry",
                    "f_vector": fv.to_list(), "h": fv.h_polynomial().to_list(),
                })
        for n in PRECUP[fam]:
            rt = RSType(fam, n)
            for pk in all_K(rt):
                entries.append({
                    "type": fam, "n": n, "K": list(pk.K), "source": "precup",
                    "h": h_via_precup(pk).to_list(),
                })
        print(f"{fam}: done at {time.perf_counter() - start:.1f}s")
    with open(args.out, "w") as fh:
        json.dump(entries, fh, indent=1, sort_keys=True)
        fh.write("\n")
    print(f"wrote {len(entries)} entries to {args.out}")


if __name__ == "__main__":
    main()

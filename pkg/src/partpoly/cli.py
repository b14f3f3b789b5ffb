"""Command-line interface.

    partpoly hpoly A 5 --K 1,2,4 --method all
    partpoly verify cross-method B 3 --all-K
    partpoly export D 3 --K 3 --out d3.json

Exit codes: 0 success, 1 usage or budget error, 2 a verification failed.
"""
import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .facecount import f_vector
from .facetcomb import describe_family
from .geomoracle import (
    AnchorPoint,
    OracleBudgetError,
    enumerate_vertices,
    h_representation,
    hrep_to_dict,
    verify_combinatorics_against_geometry,
)
from .hesspoly import ConsistencyError, h_via_characters_A, precup_set
from .polynomial import IntPoly
from .report import Check
from .rootsys import RootSystemError, RSType
from .weyl import BudgetExceeded, ParabolicK, all_K, format_element

log = logging.getLogger("partpoly")

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2
METHODS = ("faces", "precup", "characters")
SUITES = (
    "orbit-product",
    "c-coeffs",
    "c-vanishing",
    "phi-kernel",
    "deg2-surjectivity",
    "geometry",
    "cross-method",
)


class UsageError(Exception):
    pass


@dataclass
class JobSpec:
    command: str
    rstype: RSType
    Ks: list  # list of K tuples
    method: str = "faces"
    fmt: str = "text"
    out: str = None
    anchor: tuple = None
    budget: int = None
    workers: int = 1
    suite: str = None
    timing: bool = False
    all_K: bool = False

    def methods(self):
        if self.method == "all":
            return [m for m in METHODS if m != "characters" or self.rstype.family == "A"]
        return [self.method]

    def echo(self):
        out = {
            "command": self.command,
            "type": self.rstype.family,
            "n": self.rstype.n,
            "label": self.rstype.label,
        }
        if self.suite:
            out["suite"] = self.suite
        if self.all_K:
            out["K"] = "all"
        else:
            out["K"] = list(self.Ks[0])
        if self.command in ("hpoly", "sweep"):
            out["method"] = self.method
        if self.anchor is not None:
            out["anchor"] = [str(a) for a in self.anchor]
        if self.budget is not None:
            out["budget"] = self.budget
        return out


@dataclass
class Report:
    job: dict
    results: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    timing: float = None
    pretty: list = field(default_factory=list)  # human-readable polynomials, text output only

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self):
        out = {"job": self.job}
        if len(self.results) == 1 and not self.job.get("K") == "all":
            out.update(self.results[0])
        elif self.results:
            out["results"] = self.results
        out["checks"] = [c.to_dict() for c in self.checks]
        if self.timing is not None:
            out["timing"] = round(self.timing, 3)
        out["version"] = __version__
        return out


def parse_K(text):
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(sorted({int(tok) for tok in text.split(",") if tok.strip()}))
    except ValueError:
        raise UsageError(f"--K expects a comma-separated list of integers, got {text!r}")


def parse_anchor(text):
    if text is None:
        return None
    try:
        return tuple(Fraction(tok.strip()) for tok in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--anchor expects comma-separated rationals, got {text!r}")


def element_string(w, rstype):
    """One-line notation: digits for type A (n <= 9), a signed list otherwise."""
    imgs = w.one_line(rstype.n)
    if rstype.family == "A" and rstype.n <= 9:
        return "".join(str(i) for i in imgs)
    return "[" + ",".join(format_element(i, rstype) for i in imgs) + "]"


def _merge_checks(groups):
    """Merge per-K check lists by name, keeping first-seen order."""
    merged = {}
    for checks in groups:
        for c in checks:
            m = merged.setdefault(c.name, Check(c.name))
            m.checked += c.checked
            m.violations.extend(c.violations)
            for key, val in c.detail.items():
                if isinstance(val, bool) or not isinstance(val, int):
                    continue
                m.detail[key] = m.detail.get(key, 0) + val
    return list(merged.values())


def _hpoly_one(rstype, K, methods, budget):
    pk = ParabolicK(rstype, K)
    result = {"K": list(pk.K), "h_polynomial": {}}
    checks = []
    polys = {}
    if "faces" in methods:
        fv = f_vector(pk)
        polys["faces"] = fv.h_polynomial()
        result["f_vector"] = fv.to_list()
    if "precup" in methods:
        pairs = precup_set(pk, budget)
        coeffs = [0] * (rstype.rank + 1)
        for _, d in pairs:
            coeffs[d] += 1
        polys["precup"] = IntPoly(coeffs)
        result["precup_set"] = {
            "size": len(pairs),
            "elements": [element_string(w, rstype) for w, _ in pairs],
        }
    if "characters" in methods:
        if rstype.family != "A":
            raise UsageError("the characters method is only available in type A")
        polys["characters"] = h_via_characters_A(pk, budget)
    for name in METHODS:
        if name in polys:
            result["h_polynomial"][name] = polys[name].to_list()
    if len(polys) > 1:
        agree = Check("methods-agree")
        values = list(polys.values())
        agree.record(
            all(p == values[0] for p in values),
            f"{pk}: " + ", ".join(f"{k}={v.to_list()}" for k, v in polys.items()),
        )
        checks.append(agree)
    props = Check("h-properties")
    for name, h in polys.items():
        props.record(
            h.is_palindromic() and h[0] == 1 and h[h.degree] == 1 and h.degree == rstype.dim,
            f"{pk}: {name} polynomial {h.to_list()} is not a palindromic monic-ended degree-{rstype.dim} polynomial",
        )
    if "f_vector" in result:
        fv = result["f_vector"]
        props.record(polys["faces"](1) == fv[0], f"{pk}: h(1) != vertex count")
        props.record(
            sum((-1) ** i * f for i, f in enumerate(fv)) == 1,
            f"{pk}: Euler relation fails for {fv}",
        )
    checks.append(props)
    return result, checks, {k: str(v) for k, v in polys.items()}


def _verify_one(suite, rstype, K, anchor, budget):
    from . import cohomcheck as cc
    from .facecount import h_polynomial_faces

    pk = ParabolicK(rstype, K)
    if suite == "orbit-product":
        checks = [cc.verify_orbit_products(pk)]
        if rstype == RSType("A", 3) and pk.K == (1, 2):
            checks.append(_alternating_control(pk))
        return checks
    if suite == "c-coeffs":
        return [cc.verify_c_coefficients(pk)]
    if suite == "c-vanishing":
        return [cc.verify_c_vanishing(pk)]
    if suite == "phi-kernel":
        return cc.verify_phi_kernel(pk)
    if suite == "deg2-surjectivity":
        return [cc.verify_deg2_surjectivity(pk, h_polynomial_faces(pk)[1])]
    if suite == "geometry":
        first = AnchorPoint(rstype, anchor) if anchor is not None else None
        return verify_combinatorics_against_geometry(pk, first)
    if suite == "cross-method":
        methods = ["faces", "precup"] + (["characters"] if rstype.family == "A" else [])
        return _hpoly_one(rstype, K, methods, budget)[1]
    raise UsageError(f"unknown suite {suite!r}")


def _alternating_control(pk):
    """Negative control: the rotation subgroup of S_3 must break the orbit-product identity."""
    from . import cohomcheck as cc

    group = cc.alternating_subgroup_A2()
    prod_side, direct = cc.orbit_product_sides(pk, (0b001, 0b011), (1, 1), group)
    check = Check("orbit-product:alternating-control")
    check.record(
        prod_side != direct and len(direct) == 3 and len(prod_side) == 6,
        "rotation subgroup did not produce the expected mismatch",
    )
    check.detail["direct"] = direct.format(pk.rstype)
    check.detail["product"] = prod_side.format(pk.rstype)
    return check


def _run_parallel(fn, args_list, workers):
    if workers <= 1 or len(args_list) <= 1:
        return [fn(*a) for a in args_list]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *a) for a in args_list]
        return [f.result() for f in futures]


def run(job):
    """Execute a job and return its Report."""
    rstype = job.rstype
    report = Report(job.echo())
    if job.command in ("hpoly", "sweep"):
        methods = job.methods()
        if "characters" in methods and rstype.family != "A":
            raise UsageError("the characters method is only available in type A")
        outs = _run_parallel(_hpoly_one, [(rstype, K, methods, job.budget) for K in job.Ks], job.workers)
        report.results = [r for r, _, _ in outs]
        report.checks = _merge_checks([c for _, c, _ in outs])
        report.pretty = [p for _, _, p in outs]
    elif job.command == "fvector":
        for K in job.Ks:
            fv = f_vector(ParabolicK(rstype, K))
            report.results.append({"K": list(K), "f_vector": fv.to_list()})
    elif job.command == "facets":
        for K in job.Ks:
            report.results.append({"K": list(K), "facets": describe_family(ParabolicK(rstype, K))})
    elif job.command == "verify":
        outs = _run_parallel(
            _verify_one, [(job.suite, rstype, K, job.anchor, job.budget) for K in job.Ks], job.workers
        )
        report.checks = _merge_checks(outs)
    elif job.command == "export":
        pk = ParabolicK(rstype, job.Ks[0])
        anchor = AnchorPoint(rstype, job.anchor) if job.anchor is not None else None
        hrep = h_representation(pk, anchor)
        report.results.append({"hrep": hrep_to_dict(hrep, enumerate_vertices(hrep))})
    else:
        raise UsageError(f"unknown command {job.command!r}")
    return report


def render_text(report, job):
    lines = []
    j = report.job
    header = f"{j['label']}"
    if job.suite:
        header = f"{job.suite} {header}"
    lines.append(header)
    pretty = report.pretty
    for idx, res in enumerate(report.results):
        if "K" in res:
            lines.append(f"K={{{','.join(map(str, res['K']))}}}")
        for name, coeffs in res.get("h_polynomial", {}).items():
            poly = pretty[idx][name] if pretty else ""
            lines.append(f"  {name + ':':<12}{coeffs}  {poly}")
        if "f_vector" in res:
            lines.append(f"  {'f-vector:':<12}{res['f_vector']}")
        if "precup_set" in res:
            lines.append(f"  {'|W(K)|:':<12}{res['precup_set']['size']}")
        if "facets" in res:
            lines.append(f"  {'facets:':<12}{len(res['facets'])}")
            lines.extend(f"    {lab}" for lab in res["facets"])
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        extra = ", ".join(f"{k}={v}" for k, v in c.detail.items() if not isinstance(v, (list, dict)))
        lines.append(f"[{status}] {c.name}: {c.checked} checked" + (f", {extra}" if extra else ""))
        for v in c.violations[:10]:
            lines.append(f"    {v}")
    if report.timing is not None:
        lines.append(f"elapsed {report.timing:.3f}s")
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="partpoly", description="Partitioned weight polytopes: h-polynomials and checks.")
    parser.add_argument("--version", action="version", version=f"partpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, multi_k=True):
        p.add_argument("type", choices=["A", "B", "C", "D"], type=str.upper)
        p.add_argument("n", type=int, help="number of coordinates (rank n-1 in type A)")
        p.add_argument("--K", default="", help="comma-separated simple-root indices, 1-based")
        if multi_k:
            p.add_argument("--all-K", action="store_true", help="iterate over every subset K")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--budget", type=int, help="refuse to enumerate groups larger than this")
        p.add_argument("--workers", type=int, default=1, help="worker processes across K")
        p.add_argument("--timing", action="store_true", help="include elapsed time in the report")
        p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("hpoly", help="h-polynomial by one or all methods")
    common(p)
    p.add_argument("--method", choices=list(METHODS) + ["all"], default="faces")
    p = sub.add_parser("fvector", help="f-vector by clique counting")
    common(p)
    p = sub.add_parser("facets", help="list the facet labels")
    common(p)
    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    common(p)
    p.add_argument("--anchor", help="first anchor for the geometry suite, a1,a2,...")
    p = sub.add_parser("sweep", help="all K, all applicable methods, cross-checked")
    common(p, multi_k=False)
    p.add_argument("--method", choices=list(METHODS) + ["all"], default="all")
    p = sub.add_parser("export", help="H-representation and vertices as JSON")
    common(p, multi_k=False)
    p.add_argument("--anchor", help="anchor a1,a2,... (default: a small integral one)")
    return parser


def job_from_args(args):
    try:
        rstype = RSType(args.type, args.n)
    except (RootSystemError, ValueError) as exc:
        raise UsageError(str(exc))
    if args.command == "sweep" or getattr(args, "all_K", False):
        Ks = [pk.K for pk in all_K(rstype)]
        every = True
    else:
        K = parse_K(args.K)
        try:
            ParabolicK(rstype, K)
        except ValueError as exc:
            raise UsageError(str(exc))
        Ks, every = [K], False
    method = getattr(args, "method", "faces")
    if method == "characters" and rstype.family != "A":
        raise UsageError("the characters method is only available in type A")
    if args.workers < 1:
        raise UsageError("--workers must be positive")
    return JobSpec(
        command=args.command,
        rstype=rstype,
        Ks=Ks,
        method=method,
        fmt=args.format,
        out=args.out,
        anchor=parse_anchor(getattr(args, "anchor", None)),
        budget=args.budget,
        workers=args.workers,
        suite=getattr(args, "suite", None),
        timing=args.timing,
        all_K=every,
    )


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors (and --help) by exiting
        return exc.code
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        job = job_from_args(args)
        start = time.perf_counter()
        report = run(job)
        elapsed = time.perf_counter() - start
    except (UsageError, BudgetExceeded, OracleBudgetError, ValueError) as exc:
        print(f"partpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"partpoly: verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    log.info("%s finished in %.3fs", job.command, elapsed)
    if job.timing:
        report.timing = elapsed
    if job.fmt == "json" or job.command == "export":
        payload = report.to_dict()
        if job.command == "export":
            payload = report.results[0]["hrep"]
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = render_text(report, job)
    if job.out:
        with open(job.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())

"""Brute-force exact geometry of P_W(K) at small rank.

This is the ground truth the combinatorial layer is checked against: an
H-representation built from the facet equations, H-to-V by solving every
square subsystem, and face enumeration from vertex-constraint incidences.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .facecount import FVector, iter_cliques
from .facetcomb import FacetLabel, base_family, facet_family, intersection_graph
from .report import Check, frac_str, parse_frac
from .rootsys import RSType, build_root_system
from .weyl import ParabolicK, bar, elements_of, parse_element, popcount

ORACLE_MAX_N = {"A": 5, "B": 4, "C": 4, "D": 4}


class OracleBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class AnchorPoint:
    """Strictly increasing ``a_1 < ... < a_n`` (sum zero in type A, ``a_n < 0`` otherwise)."""

    rstype: RSType
    a: tuple

    def __post_init__(self):
        a = tuple(Fraction(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if len(a) != self.rstype.n:
            raise ValueError(f"anchor needs {self.rstype.n} coordinates, got {len(a)}")
        if any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError(f"anchor must be strictly increasing: {a}")
        if self.rstype.family == "A" and sum(a) != 0:
            raise ValueError("type A anchor must have coordinate sum 0")
        if self.rstype.signed and a[-1] >= 0:
            raise ValueError("anchor must satisfy a_n < 0 in types B/C/D")

    def value(self, i):
        """``a_i`` for a ground element, with ``a_{bar i} = -a_i``."""
        n = self.rstype.n
        return self.a[i - 1] if i <= n else -self.a[bar(i, n) - 1]


def default_anchor(rstype):
    n = rstype.n
    if rstype.family == "A":
        if n % 2 == 0:
            return AnchorPoint(rstype, [2 * i - (n + 1) for i in range(1, n + 1)])
        return AnchorPoint(rstype, [i - (n + 1) // 2 for i in range(1, n + 1)])
    return AnchorPoint(rstype, [i - n - 1 for i in range(1, n + 1)])


def alternate_anchor(rstype):
    """A second generic anchor with unevenly spaced coordinates."""
    n = rstype.n
    if rstype.family == "A":
        sq = [Fraction(i * i) for i in range(1, n + 1)]
        mean = sum(sq) / n
        return AnchorPoint(rstype, [x - mean for x in sq])
    return AnchorPoint(rstype, [-((n + 1 - i) ** 2) for i in range(1, n + 1)])


@dataclass(frozen=True)
class HalfSpace:
    """``normal . x >= bound``; the normal is an inward dual vector."""

    normal: tuple
    bound: Fraction
    tag: FacetLabel


@dataclass(frozen=True)
class HRep:
    pk: ParabolicK
    anchor: AnchorPoint
    halfspaces: tuple


def subset_normal(mask, n):
    v = [0] * n
    for i in elements_of(mask):
        if i <= n:
            v[i - 1] += 1
        else:
            v[bar(i, n) - 1] -= 1
    return tuple(Fraction(x) for x in v)


def bound_index_set(mask, rstype):
    """Ground elements whose anchor values sum to the facet's bound."""
    n, size = rstype.n, popcount(mask)
    if rstype.family == "D" and size == n and sum(1 for i in elements_of(mask) if i > n) % 2:
        return list(range(1, n)) + [bar(n, n)]
    return list(range(1, size + 1))


def h_representation(pk, anchor=None):
    rstype = pk.rstype
    if rstype.n > ORACLE_MAX_N[rstype.family]:
        raise OracleBudgetError(
            f"geometric oracle is capped at n <= {ORACLE_MAX_N[rstype.family]} for type {rstype.family}"
        )
    anchor = default_anchor(rstype) if anchor is None else anchor
    rs = build_root_system(rstype)
    hs = []
    for mask in base_family(rstype):
        bound = sum((anchor.value(i) for i in bound_index_set(mask, rstype)), Fraction(0))
        hs.append(HalfSpace(subset_normal(mask, rstype.n), bound, FacetLabel.subset(mask)))
    for k in pk.K:
        hs.append(HalfSpace(tuple(-x for x in rs.coroots[k - 1]), Fraction(0), FacetLabel.hyperplane(k)))
    return HRep(pk, anchor, tuple(hs))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _solve_square(rows, rhs):
    """Unique solution of a square system, or None if singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = m[i][n] - sum(m[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / m[i][i]
    return tuple(x)


def enumerate_vertices(hrep):
    """Vertices of the H-polytope, sorted, by solving every square subsystem on E."""
    rstype = hrep.pk.rstype
    n, d = rstype.n, rstype.dim
    hs = hrep.halfspaces
    extra_rows, extra_rhs = [], []
    if rstype.family == "A":
        extra_rows, extra_rhs = [tuple([Fraction(1)] * n)], [Fraction(0)]
    found = set()
    for combo in combinations(range(len(hs)), d):
        rows = [hs[i].normal for i in combo] + extra_rows
        rhs = [hs[i].bound for i in combo] + extra_rhs
        x = _solve_square(rows, rhs)
        if x is None or x in found:
            continue
        if all(_dot(h.normal, x) >= h.bound for h in hs):
            found.add(x)
    return tuple(sorted(found))


@dataclass
class Geometry:
    """Vertices, their tight constraints, and the full face list of an H-polytope."""

    hrep: HRep
    vertices: tuple
    tight: tuple  # per vertex: bitmask over halfspace indices
    faces: dict  # vertex-index bitmask -> dimension

    @property
    def dim(self):
        return self.hrep.pk.rstype.dim

    def facet_constraints(self):
        """Indices of half-spaces whose equality face has codimension one."""
        out = []
        for j in range(len(self.hrep.halfspaces)):
            vmask = self.vertices_on(1 << j)
            if vmask and self.faces.get(vmask) == self.dim - 1:
                out.append(j)
        return out

    def vertices_on(self, cmask):
        out = 0
        for idx, t in enumerate(self.tight):
            if t & cmask == cmask:
                out |= 1 << idx
        return out

    def f_vector(self):
        counts = [0] * (self.dim + 1)
        for dim in self.faces.values():
            counts[dim] += 1
        return FVector(tuple(counts))


def _affine_dim(points):
    if len(points) <= 1:
        return 0
    base = points[0]
    return linalg.rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


def analyze(hrep):
    verts = enumerate_vertices(hrep)
    hs = hrep.halfspaces
    tight = tuple(
        sum(1 << j for j, h in enumerate(hs) if _dot(h.normal, v) == h.bound) for v in verts
    )
    # close the vertex tight-sets under intersection; each closed set cuts out a face
    closed = set(tight)
    frontier = list(closed)
    while frontier:
        nxt = []
        for s in frontier:
            for t in tight:
                u = s & t
                if u not in closed:
                    closed.add(u)
                    nxt.append(u)
        frontier = nxt
    closed.add(0)
    faces = {}
    for s in closed:
        vmask = 0
        for idx, t in enumerate(tight):
            if t & s == s:
                vmask |= 1 << idx
        if vmask and vmask not in faces:
            faces[vmask] = _affine_dim([verts[i - 1] for i in elements_of(vmask)])
    return Geometry(hrep, verts, tight, faces)


def geometric_f_vector(hrep):
    return analyze(hrep).f_vector()


def _incidence_signature(geom):
    hs = geom.hrep.halfspaces
    facets = geom.facet_constraints()
    fmask = sum(1 << j for j in facets)
    sig = []
    for t in geom.tight:
        sig.append(tuple(sorted(hs[j].tag for j in range(len(hs)) if (t & fmask) >> j & 1)))
    return sorted(sig)


def _check_one_anchor(pk, anchor, checks, tagname):
    rstype = pk.rstype
    geom = analyze(h_representation(pk, anchor))
    hs = geom.hrep.halfspaces
    family = facet_family(pk)
    graph = intersection_graph(pk)

    facets = geom.facet_constraints()
    geo_labels = sorted(hs[j].tag for j in facets)
    ok = geo_labels == sorted(family.labels)
    checks["facets"].record(
        ok,
        f"{pk} [{tagname}]: geometric facets {[lab.format(rstype) for lab in geo_labels]} "
        f"!= combinatorial {[lab.format(rstype) for lab in family.labels]}",
    )
    if not ok:
        return geom

    label_vertices = {hs[j].tag: geom.vertices_on(1 << j) for j in facets}
    labels = family.labels
    for x in range(len(labels)):
        for y in range(x + 1, len(labels)):
            a, b = labels[x], labels[y]
            geo = bool(label_vertices[a] & label_vertices[b])
            checks["adjacency"].record(
                geo == graph.adjacent(a, b),
                f"{pk} [{tagname}]: {a.format(rstype)} & {b.format(rstype)} geometric={geo}",
            )

    fmask = sum(1 << j for j in facets)
    for v, t in zip(geom.vertices, geom.tight):
        count = popcount(t & fmask)
        checks["simple"].record(
            count == geom.dim, f"{pk} [{tagname}]: vertex {v} lies on {count} facets"
        )

    for clique in iter_cliques(graph):
        if not clique:
            continue
        common = -1
        for lab in clique:
            common &= label_vertices[lab]
        checks["flag"].record(
            common != 0,
            f"{pk} [{tagname}]: clique {[lab.format(rstype) for lab in clique]} has no common vertex",
        )

    from .facecount import f_vector

    geo_f = geom.f_vector()
    comb_f = f_vector(pk)
    checks["f-vector"].record(
        geo_f == comb_f, f"{pk} [{tagname}]: geometric {geo_f.entries} vs cliques {comb_f.entries}"
    )
    return geom


def verify_combinatorics_against_geometry(pk, anchor=None, second=None):
    """Six geometric checks against the combinatorial layer; returns a list of Checks."""
    anchor = default_anchor(pk.rstype) if anchor is None else anchor
    second = alternate_anchor(pk.rstype) if second is None else second
    names = ["facets", "adjacency", "simple", "flag", "f-vector"]
    checks = {name: Check(f"geometry:{name}") for name in names}
    g1 = _check_one_anchor(pk, anchor, checks, "anchor 1")
    g2 = _check_one_anchor(pk, second, checks, "anchor 2")
    indep = Check("geometry:anchor-independence")
    indep.record(
        _incidence_signature(g1) == _incidence_signature(g2)
        and g1.f_vector() == g2.f_vector(),
        f"{pk}: incidence combinatorics differ between anchors",
    )
    return [checks[name] for name in names] + [indep]


def label_to_dict(label, rstype):
    if label.is_subset:
        from .weyl import format_element

        return {"kind": "subset", "elements": [format_element(i, rstype) for i in elements_of(label.mask)]}
    return {"kind": "hyperplane", "k": label.k}


def label_from_dict(d, rstype):
    if d["kind"] == "subset":
        from .weyl import mask_of

        return FacetLabel.subset(mask_of(parse_element(str(e), rstype) for e in d["elements"]))
    return FacetLabel.hyperplane(int(d["k"]))


def hrep_to_dict(hrep, vertices=None):
    pk = hrep.pk
    out = {
        "type": pk.rstype.family,
        "n": pk.rstype.n,
        "K": list(pk.K),
        "anchor": [frac_str(x) for x in hrep.anchor.a],
        "halfspaces": [
            {
                "normal": [frac_str(x) for x in h.normal],
                "bound": frac_str(h.bound),
                "tag": label_to_dict(h.tag, pk.rstype),
            }
            for h in hrep.halfspaces
        ],
    }
    if vertices is not None:
        out["vertices"] = [[frac_str(x) for x in v] for v in vertices]
    return out


def hrep_from_dict(d):
    rstype = RSType(d["type"], int(d["n"]))
    pk = ParabolicK(rstype, tuple(d["K"]))
    anchor = AnchorPoint(rstype, [parse_frac(x) for x in d["anchor"]])
    hs = tuple(
        HalfSpace(
            tuple(parse_frac(x) for x in h["normal"]),
            parse_frac(h["bound"]),
            label_from_dict(h["tag"], rstype),
        )
        for h in d["halfspaces"]
    )
    return HRep(pk, anchor, hs)

"""Stanley-Reisner-type presentations, orbit sums and the map phi.

Polynomials in the facet generators are stored as ``MonomialCombination``
objects. A monomial is a sorted tuple of ``(FacetLabel, exponent)`` pairs; each
generator has degree 1, so polynomial degree equals the t-exponent of h.
Because the polytopes are flag, a monomial vanishes modulo the quadratic
ideal exactly when its support is not a clique of the intersection graph.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import linalg
from .facetcomb import (
    FacetLabel,
    base_family,
    build_graph,
    facet_family,
    intersection_graph,
    subset_is_sk_invariant,
)
from .geomoracle import subset_normal
from .report import Check
from .rootsys import build_root_system, coroot_span_expand, normalize_dual, pair
from .weyl import (
    SignedPermutation,
    bar,
    bar_mask,
    closure,
    enumerate_parabolic,
    identity,
    mask_of,
    orbit_decomposition,
    popcount,
)


class InvariantViolation(RuntimeError):
    """A quantity the theory says is a nonnegative integer turned out not to be."""


def monomial(*pairs):
    """Build a monomial from ``(label, exponent)`` pairs, merging repeated labels."""
    exps = {}
    for lab, e in pairs:
        if e:
            exps[lab] = exps.get(lab, 0) + e
    return tuple(sorted(exps.items()))


def mono_mul(a, b):
    return monomial(*a, *b)


def mono_degree(m):
    return sum(e for _, e in m)


class MonomialCombination:
    """Finite rational combination of monomials; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[m] = c

    @classmethod
    def generator(cls, label, coeff=1):
        return cls({monomial((label, 1)): coeff})

    @classmethod
    def one(cls):
        return cls({(): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, MonomialCombination) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MonomialCombination(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return MonomialCombination({m: c * v for m, v in self.terms.items()})

    def mul(self, other, graph=None):
        """Product; with ``graph`` given, terms with non-clique support are dropped on the fly."""
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                if graph is not None and not graph.is_clique([lab for lab, _ in m]):
                    continue
                out[m] = out.get(m, 0) + c1 * c2
        return MonomialCombination(out)

    def __mul__(self, other):
        return self.mul(other)

    def power(self, e, graph=None):
        out = MonomialCombination.one()
        for _ in range(e):
            out = out.mul(self, graph)
        return out

    def items(self):
        return sorted(self.terms.items())

    def format(self, rstype):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.items():
            body = "*".join(
                "t" + lab.format(rstype)[1:] + (f"^{e}" if e > 1 else "") if lab.is_subset
                else f"t_s{lab.k}" + (f"^{e}" if e > 1 else "")
                for lab, e in m
            ) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


@dataclass(frozen=True)
class Presentation:
    """Generators, inward normals, non-face pairs and linear relations of a toric presentation."""

    rstype: object
    generators: tuple
    normals: dict
    graph: object
    nonface_pairs: tuple
    linear_relation_matrix: tuple  # rows: simple roots u; columns: generators

    def index(self, label):
        return self.graph.index(label)

    def linear_form(self, row):
        return MonomialCombination(
            {monomial((g, 1)): c for g, c in zip(self.generators, row) if c}
        )


def label_normal(label, rstype):
    if label.is_subset:
        return subset_normal(label.mask, rstype.n)
    rs = build_root_system(rstype)
    return tuple(-x for x in rs.coroots[label.k - 1])


def _presentation(rstype, labels, graph):
    rs = build_root_system(rstype)
    normals = {lab: label_normal(lab, rstype) for lab in labels}
    nonfaces = tuple(
        (a, b) for a, b in combinations(labels, 2) if not graph.adjacent(a, b)
    )
    rows = tuple(tuple(pair(u, normals[g]) for g in labels) for u in rs.simple_roots)
    return Presentation(rstype, tuple(labels), normals, graph, nonfaces, rows)


@lru_cache(maxsize=None)
def presentation_full(rstype):
    labels = tuple(FacetLabel.subset(m) for m in base_family(rstype))
    return _presentation(rstype, labels, build_graph(labels, rstype))


@lru_cache(maxsize=None)
def presentation_partitioned(pk):
    return _presentation(pk.rstype, facet_family(pk).labels, intersection_graph(pk))


def reduce_by_nonfaces(x, p):
    graph = p.graph if isinstance(p, Presentation) else p
    return MonomialCombination(
        {m: c for m, c in x.terms.items() if graph.is_clique([lab for lab, _ in m])}
    )


def _group(pk, group):
    return enumerate_parabolic(pk) if group is None else group


def orbit_masks(mask, group):
    return sorted({w.act_on_subset(mask) for w in group}, key=lambda m: (popcount(m), m))


def orbit_sum(I, pk, group=None, power=1):
    """``sum of tau_J^power`` over the distinct images J of I (a mask or subset label)."""
    mask = I.mask if isinstance(I, FacetLabel) else I
    return MonomialCombination(
        {monomial((FacetLabel.subset(j), power)): 1 for j in orbit_masks(mask, _group(pk, group))}
    )


def chain_orbit_sum(chain, m, pk, group=None):
    """Orbit sum of the chain monomial ``prod tau_{I_i}^{m_i}``, one term per distinct image."""
    terms = set()
    for w in _group(pk, group):
        terms.add(monomial(*((FacetLabel.subset(w.act_on_subset(i)), e) for i, e in zip(chain, m))))
    return MonomialCombination({t: 1 for t in terms})


def orbit_product_sides(pk, chain, m, group=None):
    """``(product of orbit sums, orbit sum of the chain monomial)``, both reduced in the full ring."""
    graph = presentation_full(pk.rstype).graph
    prod_side = MonomialCombination.one()
    for i, e in zip(chain, m):
        prod_side = prod_side.mul(orbit_sum(i, pk, group).power(e, graph), graph)
    direct = reduce_by_nonfaces(chain_orbit_sum(chain, m, pk, group), graph)
    return prod_side, direct


def verify_orbit_product(pk, chain, m, group=None):
    for a, b in zip(chain, chain[1:]):
        if a & b != a or a == b:
            raise ValueError("chain must be strictly nested")
    prod_side, direct = orbit_product_sides(pk, chain, m, group)
    return prod_side == direct


def alternating_subgroup_A2():
    """The rotation subgroup of S_3 (not parabolic), as signed-permutation objects of type A."""
    from .rootsys import RSType

    rt = RSType("A", 3)
    return closure([SignedPermutation((2, 3, 1))], identity(rt))


def nested_chains(rstype, max_len=3):
    masks = base_family(rstype)
    out = []

    def extend(chain):
        out.append(tuple(chain))
        if len(chain) == max_len:
            return
        last = chain[-1]
        for mk in masks:
            if mk != last and mk & last == last:
                extend(chain + [mk])

    for mk in masks:
        extend([mk])
    return out


def verify_orbit_products(pk, max_len=3, max_exp=2):
    check = Check("orbit-product")
    for chain in nested_chains(pk.rstype, max_len):
        for m in product(range(1, max_exp + 1), repeat=len(chain)):
            prod_side, direct = orbit_product_sides(pk, chain, m)
            check.record(
                prod_side == direct,
                f"{pk}: chain {[FacetLabel.subset(c).format(pk.rstype) for c in chain]} m={m}",
            )
    return check


def e_vector(mask, rstype):
    return subset_normal(mask, rstype.n)


def c_coefficients(I, v, pk):
    """Coefficients of ``e_I - e_{v(I)}`` on the coroots ``alpha_k^vee``, k in K."""
    rstype = pk.rstype
    mask = I.mask if isinstance(I, FacetLabel) else I
    rs = build_root_system(rstype)
    diff = tuple(a - b for a, b in zip(e_vector(mask, rstype), e_vector(v.act_on_subset(mask), rstype)))
    coeffs = coroot_span_expand(normalize_dual(diff, rstype), pk.K, rs)
    if coeffs is None:
        raise InvariantViolation(f"{pk}: e_I - e_v(I) not in the K-coroot span for I={mask:b}, v={v.images}")
    out = {}
    for k, c in coeffs.items():
        if c.denominator != 1 or c < 0:
            raise InvariantViolation(f"{pk}: coefficient c_{k} = {c} for I={mask:b}, v={v.images}")
        out[k] = int(c)
    return out


def verify_c_coefficients(pk):
    """Nonnegativity, integrality and representative independence of every c_k^{I,v}."""
    check = Check("c-coeffs")
    rstype = pk.rstype
    group = enumerate_parabolic(pk)
    for mask in facet_family(pk).subsets():
        seen = {}
        for v in group:
            tag = f"{pk}: I={FacetLabel.subset(mask).format(rstype)} v={v.images}"
            try:
                c = c_coefficients(mask, v, pk)
            except InvariantViolation as exc:
                check.record(False, str(exc))
                continue
            check.record(True, tag)
            img = v.act_on_subset(mask)
            if img in seen:
                check.record(seen[img] == c, f"{tag}: depends on the representative")
            else:
                seen[img] = c
    return check


def _contained_either_way(x, y):
    return x & y == x or x & y == y


def _first_n(k):
    return (1 << k) - 1


def _hat(k, n):
    """Mask of ``{bar n, ..., bar k}`` (empty when k > n)."""
    return mask_of(bar(i, n) for i in range(k, n + 1))


def vanishing_hypothesis(vi, k, pk):
    """Whether the per-type sufficient condition for ``c_k^{I,v} = 0`` holds at ``v(I) = vi``."""
    rstype = pk.rstype
    n, fam = rstype.n, rstype.family
    decomp = orbit_decomposition(pk)
    part = decomp.part_of(k)
    N = part.mask

    def cond(region, target):
        return _contained_either_way(vi & region, target & region)

    if fam == "A":
        return cond(N, _first_n(k))
    Nbar = bar_mask(N, n)
    if part.kind == "N":
        return cond(N, _first_n(k)) and cond(Nbar, _hat(k + 1, n))
    if fam in ("B", "C"):
        # k lies in the self-mirrored orbit
        return cond(N, _first_n(k))
    if part.kind == "N'":
        target = (_hat(k + 1, n) & ~(1 << (bar(n, n) - 1))) | (1 << (n - 1))
        return cond(N, _first_n(k)) and cond(Nbar, target)
    if part.kind == "N'bar":
        # k = n; N' is the mirror of this orbit
        Np = Nbar
        return cond(Np, _first_n(n - 1)) and cond(N, 1 << (n - 1))
    # self-mirrored orbit in type D
    x = vi & N
    nbar_bit = 1 << (bar(n, n) - 1)
    if k <= n - 2:
        return cond(N, _first_n(k))
    lower = _first_n(n - 1) & N
    if k == n - 1:
        if x & ~((_first_n(n - 1) | nbar_bit) & N) == 0 or x & lower == lower:
            return True
        base = _first_n(n - 1) | nbar_bit
    else:
        if x & ~(_first_n(n) & N) == 0 or x & lower == lower:
            return True
        base = _first_n(n)
    for i in range(1, n):
        if not N >> (i - 1) & 1:
            continue
        swapped = (base & ~(1 << (i - 1))) | (1 << (bar(i, n) - 1))
        if x == swapped & N:
            return True
    return False


def verify_c_vanishing(pk):
    check = Check("c-vanishing")
    rstype = pk.rstype
    group = enumerate_parabolic(pk)
    applicable = 0
    for mask in facet_family(pk).subsets():
        for v in group:
            vi = v.act_on_subset(mask)
            coeffs = None
            for k in pk.K:
                if not vanishing_hypothesis(vi, k, pk):
                    continue
                applicable += 1
                if coeffs is None:
                    try:
                        coeffs = c_coefficients(mask, v, pk)
                    except InvariantViolation as exc:
                        check.record(False, str(exc))
                        break
                check.record(
                    coeffs[k] == 0,
                    f"{pk}: I={FacetLabel.subset(mask).format(rstype)} v={v.images} k={k}: c={coeffs[k]}",
                )
    check.detail["hypotheses_met"] = applicable
    return check


def _orbit_reps(mask, group):
    """First group element (in enumeration order) reaching each image of the mask."""
    reps = {}
    for v in group:
        reps.setdefault(v.act_on_subset(mask), v)
    return reps


def phi_of_generator(g, pk):
    if g.is_subset:
        return orbit_sum(g.mask, pk)
    k = g.k
    group = enumerate_parabolic(pk)
    out = {}
    for mask in facet_family(pk).subsets():
        for img, v in sorted(_orbit_reps(mask, group).items()):
            c = c_coefficients(mask, v, pk)[k]
            if c:
                m = monomial((FacetLabel.subset(img), 1))
                out[m] = out.get(m, 0) + c
    return MonomialCombination(out)


@lru_cache(maxsize=None)
def _phi_generators_cached(pk):
    return {g: phi_of_generator(g, pk) for g in facet_family(pk).labels}


def phi(x, pk, graph=None):
    """Ring map extended multiplicatively; terms are reduced on the fly when ``graph`` is given."""
    images = _phi_generators_cached(pk)
    out = MonomialCombination()
    for m, c in x.items():
        term = MonomialCombination.one()
        for lab, e in m:
            term = term.mul(images[lab].power(e, graph), graph)
        out = out + term.scale(c)
    return out


def degree1_vector(x, p):
    v = [Fraction(0)] * len(p.generators)
    for m, c in x.terms.items():
        if mono_degree(m) != 1:
            raise ValueError("expected a linear combination")
        v[p.index(m[0][0])] += c
    return v


@lru_cache(maxsize=None)
def linear_space(rstype):
    p = presentation_full(rstype)
    return linalg.RowSpace(list(p.linear_relation_matrix), len(p.generators))


class QuadraticIdeal:
    """Degree-2 part of the full ideal, in coordinates of the quadratic face monomials."""

    def __init__(self, rstype):
        p = presentation_full(rstype)
        self.presentation = p
        gens = p.generators
        basis = [monomial((g, 2)) for g in gens]
        basis += [monomial((a, 1), (b, 1)) for a, b in combinations(gens, 2) if p.graph.adjacent(a, b)]
        self.basis = sorted(basis)
        self.pos = {m: i for i, m in enumerate(self.basis)}
        rows = []
        for row in p.linear_relation_matrix:
            ell = p.linear_form(row)
            for g in gens:
                rows.append(self.vector(ell.mul(MonomialCombination.generator(g), p.graph)))
        self.space = linalg.RowSpace(rows, len(self.basis))

    def vector(self, x):
        v = [Fraction(0)] * len(self.basis)
        for m, c in reduce_by_nonfaces(x, self.presentation).terms.items():
            v[self.pos[m]] += c
        return v

    def contains(self, x):
        return self.space.contains(self.vector(x))


@lru_cache(maxsize=None)
def quadratic_ideal(rstype):
    return QuadraticIdeal(rstype)


def permute_generators(x, w):
    out = {}
    for m, c in x.terms.items():
        mm = monomial(*((FacetLabel.subset(w.act_on_subset(lab.mask)), e) for lab, e in m))
        out[mm] = out.get(mm, 0) + c
    return MonomialCombination(out)


def verify_phi_kernel(pk):
    """phi kills the linear and quadratic relations; also the s_k-invariance and weight identities.

    Returns a list of Checks: linear, quadratic, sk-invariance, fundamental-weight.
    """
    rstype = pk.rstype
    rs = build_root_system(rstype)
    full = presentation_full(rstype)
    part = presentation_partitioned(pk)
    lin = linear_space(rstype)
    graph = full.graph

    linear = Check("phi-kernel:linear")
    for u, row in zip(rs.simple_roots, part.linear_relation_matrix):
        image = phi(part.linear_form(row), pk)
        linear.record(lin.contains(degree1_vector(image, full)), f"{pk}: linear relation for u={u}")

    quad = Check("phi-kernel:quadratic")
    by_nonfaces = 0
    ideal = None
    for a, b in part.nonface_pairs:
        x = phi(MonomialCombination({monomial((a, 1), (b, 1)): 1}), pk, graph)
        if not x:
            by_nonfaces += 1
            quad.record(True, "")
            continue
        ideal = ideal or quadratic_ideal(rstype)
        quad.record(ideal.contains(x), f"{pk}: {a.format(rstype)}*{b.format(rstype)} -> {x.format(rstype)}")
    quad.detail["zero_by_nonfaces"] = by_nonfaces
    quad.detail["zero_mod_linear"] = quad.checked - by_nonfaces - len(quad.violations)

    inv = Check("phi-kernel:sk-invariance")
    fw = Check("phi-kernel:fundamental-weight")
    gens = pk.generators()
    for k in pk.K:
        image = phi_of_generator(FacetLabel.hyperplane(k), pk)
        vec = degree1_vector(image, full)
        for g in gens:
            moved = degree1_vector(permute_generators(image, g), full)
            inv.record(lin.contains([a - b for a, b in zip(moved, vec)]), f"{pk}: phi(t_s{k}) moved by {g.images}")
        expected = MonomialCombination()
        for mask in facet_family(pk).subsets():
            c = pair(rs.fundamental_weights[k - 1], subset_normal(mask, rstype.n))
            if c:
                expected = expected + orbit_sum(mask, pk).scale(c)
        diff = degree1_vector(image - expected, full)
        fw.record(lin.contains(diff), f"{pk}: phi(t_s{k}) differs from the weight expansion")
    return [linear, quad, inv, fw]


def fixed_space_dimension(pk):
    """Dimension of the W_K-fixed part of the degree-1 quotient (span of generators)/(linear relations)."""
    full = presentation_full(pk.rstype)
    m = len(full.generators)
    ell = [list(r) for r in full.linear_relation_matrix]
    r = len(ell)
    gens = pk.generators()
    if not gens:
        return m - linalg.rank(ell, m)
    idx = {lab.mask: i for i, lab in enumerate(full.generators)}
    # unknowns: x (m entries) then one block of r multipliers per generator
    ncols = m + r * len(gens)
    rows = []
    for gi, g in enumerate(gens):
        for j in range(m):
            rows.append([Fraction(0)] * ncols)
        base = len(rows) - m
        for j, lab in enumerate(full.generators):
            # ((P_g - 1) x)_i: coordinate i receives x_j when g(J_j) = J_i
            rows[base + idx[g.act_on_subset(lab.mask)]][j] += 1
            rows[base + j][j] -= 1
        for u in range(r):
            for j in range(m):
                rows[base + j][m + gi * r + u] -= ell[u][j]
    null = linalg.nullspace(rows, ncols)
    projected = [v[:m] for v in null]
    return linalg.rank(projected, m) - linalg.rank(ell, m)


def verify_deg2_surjectivity(pk, expected_h1=None):
    full = presentation_full(pk.rstype)
    m = len(full.generators)
    ell = [list(r) for r in full.linear_relation_matrix]
    dim_l = linalg.rank(ell, m)
    fixed = fixed_space_dimension(pk)
    images = [degree1_vector(orbit_sum(mask, pk), full) for mask in facet_family(pk).subsets()]
    spanned = linalg.rank(images + ell, m) - dim_l
    check = Check("deg2-surjectivity")
    check.record(spanned == fixed, f"{pk}: phi images span {spanned} of fixed dimension {fixed}")
    if expected_h1 is not None:
        check.record(fixed == expected_h1, f"{pk}: fixed dimension {fixed} != h_1 = {expected_h1}")
    check.detail.update({"fixed_dim": fixed, "image_dim": spanned})
    if expected_h1 is not None:
        check.detail["h1"] = expected_h1
    return check

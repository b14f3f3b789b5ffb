"""Facet labels of partitioned weight polytopes and their intersection graph."""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .weyl import (
    ParabolicK,
    bar,
    format_subset,
    orbit_decomposition,
    popcount,
    simple_reflection,
)


@dataclass(frozen=True, order=True)
class FacetLabel:
    """Either a subset facet ``F(I)`` or a hyperplane facet ``H(k)``.

    Field order gives the canonical ordering: subsets before hyperplanes,
    subsets by size then bitmask value, hyperplanes by k.
    """

    kind: int  # 0 = subset, 1 = hyperplane
    size: int
    value: int

    @classmethod
    def subset(cls, mask):
        return cls(0, popcount(mask), mask)

    @classmethod
    def hyperplane(cls, k):
        return cls(1, 0, k)

    @property
    def is_subset(self):
        return self.kind == 0

    @property
    def mask(self):
        assert self.kind == 0
        return self.value

    @property
    def k(self):
        assert self.kind == 1
        return self.value

    def format(self, rstype):
        if self.is_subset:
            return "F" + format_subset(self.value, rstype)
        return f"H({self.value})"


def subset_order_key(mask):
    return (popcount(mask), mask)


@lru_cache(maxsize=None)
def base_family(rstype):
    """Facet labels of the full weight polytope, as bitmasks in canonical order.

    A: nonempty proper subsets of [n]. B/C: nonempty signed subsets.
    D: signed subsets whose size is not n-1.
    """
    n = rstype.n
    if rstype.family == "A":
        masks = range(1, (1 << n) - 1)
    else:
        masks = []
        # each i in [n] is absent, present, or present as bar i
        for choice in product((0, 1, 2), repeat=n):
            m = 0
            for i, c in enumerate(choice, start=1):
                if c == 1:
                    m |= 1 << (i - 1)
                elif c == 2:
                    m |= 1 << (bar(i, n) - 1)
            if m == 0:
                continue
            if rstype.family == "D" and popcount(m) == n - 1:
                continue
            masks.append(m)
    return tuple(sorted(masks, key=subset_order_key))


def _precedes(x, y, rstype):
    """Strict component order on ground elements (``x < y``)."""
    if rstype.family == "D":
        n = rstype.n
        # n and bar n (= n + 1) are incomparable
        if {x, y} == {n, n + 1}:
            return False
    return x < y


def is_lower(mask, pk):
    """True when ``I`` meets every W_K-orbit in a downward-closed set.

    The orders are: natural order (A); 1 < ... < n < bar n < ... < bar 1 (B, C);
    the same with n and bar n incomparable (D). In the encoding ``bar i = 2n+1-i``
    the B order is just integer order.
    """
    rstype = pk.rstype
    for part in orbit_decomposition(pk).parts:
        inside = mask & part.mask
        if not inside:
            continue
        members = [i for i in range(1, rstype.ground_size + 1) if part.mask >> (i - 1) & 1]
        for y in members:
            if not inside >> (y - 1) & 1:
                continue
            for x in members:
                if _precedes(x, y, rstype) and not inside >> (x - 1) & 1:
                    return False
    return True


@dataclass(frozen=True)
class FacetFamily:
    pk: ParabolicK
    labels: tuple

    def subsets(self):
        return [lab.mask for lab in self.labels if lab.is_subset]


@lru_cache(maxsize=None)
def facet_family(pk):
    """Facet labels of P_W(K): lower subsets of the base family, then the hyperplanes in K."""
    subs = [FacetLabel.subset(m) for m in base_family(pk.rstype) if is_lower(m, pk)]
    hyps = [FacetLabel.hyperplane(k) for k in pk.K]
    return FacetFamily(pk, tuple(subs + hyps))


def subsets_intersect(i_mask, j_mask, rstype):
    """Whether facets F(I) and F(J) of the full weight polytope meet."""
    nested = (i_mask & j_mask) in (i_mask, j_mask)
    if nested or rstype.family != "D":
        return nested
    return popcount(i_mask & j_mask) > rstype.n - 2


def subset_is_sk_invariant(mask, k, rstype):
    return simple_reflection(rstype, k).act_on_subset(mask) == mask


def subset_in_open_halfspace(mask, k, rstype):
    """Whether F(I) lies in the open half-space ``alpha_k^vee < 0``."""

    def has(i):
        return bool(mask >> (i - 1) & 1)

    n = rstype.n
    if rstype.family == "A":
        return has(k) and not has(k + 1)
    if k < n:
        return (has(k) and not has(k + 1)) or (has(bar(k + 1, n)) and not has(bar(k, n)))
    if rstype.family in ("B", "C"):
        return has(n) and not has(bar(n, n))
    return (has(n) and not has(bar(n - 1, n))) or (has(n - 1) and not has(bar(n, n)))


def subset_in_opposite_halfspace(mask, k, rstype):
    return subset_in_open_halfspace(simple_reflection(rstype, k).act_on_subset(mask), k, rstype)


@dataclass(frozen=True)
class IntersectionGraph:
    """Facet labels with adjacency rows as bitmasks over label indices."""

    labels: tuple
    rows: tuple

    def __len__(self):
        return len(self.labels)

    def index(self, label):
        return self._index()[label]

    def _index(self):
        cache = self.__dict__.get("_idx")
        if cache is None:
            cache = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_idx", cache)
        return cache

    def adjacent(self, a, b):
        ia, ib = self.index(a), self.index(b)
        return bool(self.rows[ia] >> ib & 1)

    def matrix(self):
        size = len(self.labels)
        return [[bool(self.rows[i] >> j & 1) for j in range(size)] for i in range(size)]

    def is_clique(self, labels):
        idx = [self.index(lab) for lab in labels]
        return all(self.rows[a] >> b & 1 for x, a in enumerate(idx) for b in idx[x + 1:])


def labels_intersect(a, b, rstype):
    if a.is_subset and b.is_subset:
        return subsets_intersect(a.mask, b.mask, rstype)
    if a.is_subset:
        return subset_is_sk_invariant(a.mask, b.k, rstype)
    if b.is_subset:
        return subset_is_sk_invariant(b.mask, a.k, rstype)
    return True


def build_graph(labels, rstype):
    labels = tuple(labels)
    rows = []
    for i, a in enumerate(labels):
        r = 0
        for j, b in enumerate(labels):
            if i != j and labels_intersect(a, b, rstype):
                r |= 1 << j
        rows.append(r)
    return IntersectionGraph(labels, tuple(rows))


@lru_cache(maxsize=None)
def intersection_graph(pk):
    return build_graph(facet_family(pk).labels, pk.rstype)


def describe_family(pk):
    return [lab.format(pk.rstype) for lab in facet_family(pk).labels]

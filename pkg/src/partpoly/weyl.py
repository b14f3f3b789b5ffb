"""Weyl groups of classical type as (signed) permutations.

The ground set is ``1..2n`` with ``bar(i) = 2n + 1 - i`` in types B, C, D and
``1..n`` in type A. Subsets of the ground set are int bitmasks, element ``i``
living in bit ``i - 1``. Type C shares its group and ground set with type B.
"""
from collections import deque
from dataclasses import dataclass
from math import factorial
from functools import lru_cache

from .rootsys import RSType

DEFAULT_BUDGET = 10**9


class BudgetExceeded(RuntimeError):
    def __init__(self, order, budget):
        super().__init__(f"group of order {order} exceeds enumeration budget {budget}")
        self.order = order
        self.budget = budget


def bar(i, n):
    return 2 * n + 1 - i


def mask_of(elements):
    m = 0
    for i in elements:
        m |= 1 << (i - 1)
    return m


def elements_of(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


def bar_mask(mask, n):
    return mask_of(bar(i, n) for i in elements_of(mask))


def positive_mask(n):
    """Bitmask of ``[n]``."""
    return (1 << n) - 1


def format_element(i, rstype):
    if rstype.signed and i > rstype.n:
        return f"-{bar(i, rstype.n)}"
    return str(i)


def format_subset(mask, rstype):
    return "{" + ",".join(format_element(i, rstype) for i in elements_of(mask)) + "}"


def parse_element(token, rstype):
    """Inverse of ``format_element``: ``'-3'`` is ``bar 3``."""
    token = token.strip()
    if token.startswith("-"):
        if not rstype.signed:
            raise ValueError(f"barred element {token} in type A")
        return bar(int(token[1:]), rstype.n)
    return int(token)


@dataclass(frozen=True)
class SignedPermutation:
    """A bijection of the ground set, stored as its image sequence.

    ``images[i - 1]`` is ``u(i)``. In types B/C/D the sequence has length 2n
    and satisfies ``u(bar i) = bar u(i)``.
    """

    images: tuple

    def __call__(self, i):
        return self.images[i - 1]

    def __len__(self):
        return len(self.images)

    def __mul__(self, other):
        # (self * other)(i) = self(other(i))
        im = self.images
        return SignedPermutation(tuple(im[j - 1] for j in other.images))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return SignedPermutation(tuple(inv))

    def is_identity(self):
        return all(j == i for i, j in enumerate(self.images, start=1))

    def act_on_subset(self, mask):
        out = 0
        im = self.images
        i = 0
        while mask:
            if mask & 1:
                out |= 1 << (im[i] - 1)
            mask >>= 1
            i += 1
        return out

    def act_on_vector(self, x):
        """Action on E in t-coordinates: ``t_i -> t_{u(i)}`` with ``t_{bar j} = -t_j``."""
        n = len(x)
        y = [0] * n
        for i in range(n):
            j = self.images[i]
            if j <= n:
                y[j - 1] += x[i]
            else:
                y[2 * n - j] -= x[i]
        return tuple(y)

    def one_line(self, n=None):
        """First n images (the whole sequence in type A)."""
        if n is None:
            n = len(self.images)
        return self.images[:n]

    def negative_count(self, n):
        return sum(1 for j in self.images[:n] if j > n)


def identity(rstype):
    return SignedPermutation(tuple(range(1, rstype.ground_size + 1)))


def _from_transpositions(rstype, pairs):
    im = list(range(1, rstype.ground_size + 1))
    for a, b in pairs:
        im[a - 1], im[b - 1] = b, a
    return SignedPermutation(tuple(im))


@lru_cache(maxsize=None)
def simple_reflection(rstype, i):
    """Generator ``s_i`` of the Weyl group as a permutation of the ground set."""
    if not 1 <= i <= rstype.rank:
        raise ValueError(f"simple reflection index {i} out of range for {rstype}")
    n = rstype.n
    if rstype.family == "A":
        return _from_transpositions(rstype, [(i, i + 1)])
    if i < n:
        return _from_transpositions(rstype, [(i, i + 1), (bar(i, n), bar(i + 1, n))])
    if rstype.family in ("B", "C"):
        return _from_transpositions(rstype, [(n, bar(n, n))])
    return _from_transpositions(rstype, [(n - 1, bar(n, n)), (bar(n - 1, n), n)])


def group_order(rstype):
    n = rstype.n
    if rstype.family == "A":
        return factorial(n)
    if rstype.family in ("B", "C"):
        return 2**n * factorial(n)
    return 2 ** (n - 1) * factorial(n)


def _check_budget(order, budget):
    cap = DEFAULT_BUDGET if budget is None else min(budget, DEFAULT_BUDGET)
    if order > cap:
        raise BudgetExceeded(order, cap)


def _signed_prefixes(n, pos, used, prefix):
    if pos == n:
        yield tuple(prefix)
        return
    for v in range(1, 2 * n + 1):
        base = v if v <= n else bar(v, n)
        if used & (1 << base):
            continue
        prefix.append(v)
        yield from _signed_prefixes(n, pos + 1, used | (1 << base), prefix)
        prefix.pop()


def _complete(prefix, n):
    im = list(prefix) + [0] * n
    for i in range(1, n + 1):
        im[bar(i, n) - 1] = bar(prefix[i - 1], n)
    return SignedPermutation(tuple(im))


def enumerate_group(rstype, budget=None):
    """Yield every element of W once, lexicographically by image sequence."""
    _check_budget(group_order(rstype), budget)
    n = rstype.n
    if rstype.family == "A":
        from itertools import permutations

        for p in permutations(range(1, n + 1)):
            yield SignedPermutation(p)
        return
    for prefix in _signed_prefixes(n, 0, 0, []):
        if rstype.family == "D" and sum(1 for v in prefix if v > n) % 2:
            continue
        yield _complete(prefix, n)


@dataclass(frozen=True)
class ParabolicK:
    """A type together with a subset K of the simple-root indices."""

    rstype: RSType
    K: tuple = ()

    def __post_init__(self):
        ks = tuple(sorted(set(self.K)))
        for k in ks:
            if not 1 <= k <= self.rstype.rank:
                raise ValueError(f"K element {k} outside [1, {self.rstype.rank}] for {self.rstype}")
        object.__setattr__(self, "K", ks)

    def generators(self):
        return [simple_reflection(self.rstype, k) for k in self.K]

    def __str__(self):
        return f"{self.rstype.label}, K={{{','.join(map(str, self.K))}}}"


def all_K(rstype):
    """Every subset of the simple-root indices, smallest first."""
    from itertools import combinations

    r = rstype.rank
    for size in range(r + 1):
        for ks in combinations(range(1, r + 1), size):
            yield ParabolicK(rstype, ks)


def closure(generators, start):
    """Breadth-first closure of ``{start}`` under left multiplication by ``generators``."""
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for g in generators:
            u = g * w
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return sorted(seen, key=lambda u: u.images)


@lru_cache(maxsize=None)
def _parabolic_cached(pk):
    return tuple(closure(pk.generators(), identity(pk.rstype)))


def enumerate_parabolic(pk, budget=None):
    """All elements of ``W_K`` in lexicographic order (a tuple; its length is ``|W_K|``)."""
    _check_budget(group_order(pk.rstype), budget)
    return _parabolic_cached(pk)


@dataclass(frozen=True)
class OrbitPart:
    """One orbit of W_K on the ground set.

    ``kind`` uses the conventional names ``"N"`` (inside [n]), ``"Nbar"``
    (its mirror), ``"N'"`` / ``"N'bar"`` and ``"N''"``. In type B the
    self-mirrored orbit is ``"N'"``; in type D it is ``"N''"`` and ``"N'"`` is
    the orbit of ``n-1`` when it reaches ``bar n``.
    """

    mask: int
    kind: str


@dataclass(frozen=True)
class OrbitDecomposition:
    pk: ParabolicK
    parts: tuple

    def part_of(self, i):
        bit = 1 << (i - 1)
        for p in self.parts:
            if p.mask & bit:
                return p
        raise KeyError(i)

    def masks(self):
        return [p.mask for p in self.parts]


def _orbits_by_union(pk):
    size = pk.rstype.ground_size
    parent = list(range(size + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in pk.generators():
        for i in range(1, size + 1):
            a, b = find(i), find(g(i))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for i in range(1, size + 1):
        groups.setdefault(find(i), []).append(i)
    return sorted((mask_of(v) for v in groups.values()), key=lambda m: elements_of(m)[0])


@lru_cache(maxsize=None)
def orbit_decomposition(pk):
    """Orbits of W_K on the ground set, classified by how they meet their mirror."""
    rstype = pk.rstype
    n = rstype.n
    parts = []
    for m in _orbits_by_union(pk):
        if not rstype.signed:
            kind = "N"
        else:
            mirrored = bar_mask(m, n)
            pos = m & positive_mask(n)
            if mirrored == m:
                kind = "N''" if rstype.family == "D" else "N'"
            elif pos == m:
                kind = "N"
            elif pos == 0:
                kind = "Nbar"
            elif m & (1 << (n - 2)):
                # contains n-1 together with a barred element (type D, n in K, n-1 not in K)
                kind = "N'"
            else:
                kind = "N'bar"
        parts.append(OrbitPart(m, kind))
    return OrbitDecomposition(pk, tuple(parts))


def act_on_subset(u, mask):
    return u.act_on_subset(mask)


def subset_orbit_and_stabilizer(pk, mask, group=None):
    """Orbit of a subset under W_K (sorted) and the order of its setwise stabilizer."""
    group = enumerate_parabolic(pk) if group is None else group
    orbit = set()
    stab = 0
    for w in group:
        img = w.act_on_subset(mask)
        orbit.add(img)
        if img == mask:
            stab += 1
    return tuple(sorted(orbit, key=lambda m: (popcount(m), m))), stab

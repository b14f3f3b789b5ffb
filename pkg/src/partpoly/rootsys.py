"""Root systems of classical type in exact rational coordinates.

Vectors of ``E`` are stored in the basis ``t_1..t_n`` and dual vectors in the
dual basis ``e_1..e_n``. For types B, C and D the ambient space is really the
subspace of R^{2n} with ``x_i + x_{bar i} = 0``; only the first n coordinates
are stored and the mirrored ones are implied (``e_{bar i} = -e_i``).

Type A duals live in ``(R^n)^* / <e_1 + ... + e_n>``; representatives are
normalized to coordinate sum zero so equality is coordinatewise.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg

FAMILIES = ("A", "B", "C", "D")


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RSType:
    """A classical type; ``n`` counts coordinates (rank is n-1 in type A)."""

    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        if not isinstance(self.n, int) or self.n < 2:
            raise RootSystemError(f"{self.family} needs n >= 2, got {self.n!r}")

    @property
    def rank(self):
        return self.n - 1 if self.family == "A" else self.n

    @property
    def dim(self):
        """Dimension of the weight polytope."""
        return self.rank

    @property
    def signed(self):
        """True when the Weyl group acts by signed permutations of [n] + bar[n]."""
        return self.family != "A"

    @property
    def ground_size(self):
        return 2 * self.n if self.signed else self.n

    @property
    def label(self):
        return f"{self.family}_{self.rank}"

    def __str__(self):
        return self.label


def pair(u, v):
    """Standard pairing of a vector of E with a vector of E^*."""
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _vec(n, entries):
    v = [Fraction(0)] * n
    for i, c in entries:
        v[i - 1] += c
    return tuple(v)


def normalize_dual(v, rstype):
    """Canonical representative of a dual vector (sum zero in type A)."""
    v = tuple(Fraction(x) for x in v)
    if rstype.family == "A":
        shift = sum(v) / len(v)
        return tuple(x - shift for x in v)
    return v


@dataclass(frozen=True)
class RootSystem:
    rstype: RSType
    simple_roots: tuple
    coroots: tuple
    fundamental_coweights: tuple
    fundamental_weights: tuple
    positive_roots: tuple

    @property
    def rank(self):
        return self.rstype.rank

    def cartan_matrix(self):
        """``C[i][j] = <alpha_i, alpha_j^vee>``."""
        return tuple(
            tuple(pair(a, c) for c in self.coroots) for a in self.simple_roots
        )

    def coweight_pairing(self):
        """``<alpha_i, omega_j>``; the identity matrix by construction."""
        return tuple(
            tuple(pair(a, w) for w in self.fundamental_coweights)
            for a in self.simple_roots
        )

    def root_set(self):
        pos = set(self.positive_roots)
        return pos | {tuple(-x for x in r) for r in pos}


def _simple_roots(rstype):
    n, fam = rstype.n, rstype.family
    roots = [_vec(n, [(i, 1), (i + 1, -1)]) for i in range(1, n)]
    if fam == "B":
        roots.append(_vec(n, [(n, 1)]))
    elif fam == "C":
        roots.append(_vec(n, [(n, 2)]))
    elif fam == "D":
        roots.append(_vec(n, [(n - 1, 1), (n, 1)]))
    return roots


def _positive_roots(rstype):
    n, fam = rstype.n, rstype.family
    roots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(_vec(n, [(i, 1), (j, -1)]))
            if fam != "A":
                roots.append(_vec(n, [(i, 1), (j, 1)]))
        if fam == "B":
            roots.append(_vec(n, [(i, 1)]))
        elif fam == "C":
            roots.append(_vec(n, [(i, 2)]))
    return roots


def _dual_basis(rows, rstype):
    """Solve ``<rows[i], x_j> = delta_ij`` for each j (sum-zero in type A)."""
    n = rstype.n
    system = [list(r) for r in rows]
    if rstype.family == "A":
        system.append([1] * n)
    out = []
    for j in range(len(rows)):
        rhs = [1 if i == j else 0 for i in range(len(rows))]
        if rstype.family == "A":
            rhs.append(0)
        x = linalg.solve(system, rhs)
        if x is None:
            raise RootSystemError(f"singular duality system for {rstype}")
        out.append(tuple(x))
    return out


@lru_cache(maxsize=None)
def build_root_system(rstype):
    """Simple roots, coroots, fundamental (co)weights and positive roots of ``rstype``."""
    if not isinstance(rstype, RSType):
        raise RootSystemError(f"expected RSType, got {rstype!r}")
    simple = _simple_roots(rstype)
    coroots = []
    for a in simple:
        norm = sum(x * x for x in a)
        coroots.append(tuple(2 * x / norm for x in a))
    coweights = _dual_basis(simple, rstype)
    weights = _dual_basis(coroots, rstype)
    return RootSystem(
        rstype=rstype,
        simple_roots=tuple(simple),
        coroots=tuple(coroots),
        fundamental_coweights=tuple(coweights),
        fundamental_weights=tuple(weights),
        positive_roots=tuple(_positive_roots(rstype)),
    )


def coroot_span_expand(v, ks, rs):
    """Coefficients ``c`` with ``v = sum_k c[k] * alpha_k^vee`` over ``k in ks``.

    Returns None when ``v`` is not in the rational span; the coroots are
    linearly independent so a solution, when it exists, is unique.
    """
    ks = sorted(ks)
    v = normalize_dual(v, rs.rstype)
    if not ks:
        return {} if not any(v) else None
    cols = [rs.coroots[k - 1] for k in ks]
    a = [[col[i] for col in cols] for i in range(rs.rstype.n)]
    x = linalg.solve(a, list(v))
    if x is None:
        return None
    return {k: c for k, c in zip(ks, x)}


def dynkin_isomorphism(src, dst):
    """A relabeling ``sigma`` of simple-root indices with equal Cartan matrices, or None.

    The Cartan matrices come from the pairing, so ``sigma`` maps ``k`` in ``src``
    to ``sigma[k]`` in ``dst`` with ``C_src[i][j] == C_dst[sigma i][sigma j]``.
    The lexicographically first such relabeling is returned.
    """
    from itertools import permutations

    a = build_root_system(src).cartan_matrix()
    b = build_root_system(dst).cartan_matrix()
    r = len(a)
    if len(b) != r:
        return None
    for perm in permutations(range(r)):
        if all(a[i][j] == b[perm[i]][perm[j]] for i in range(r) for j in range(r)):
            return {i + 1: perm[i] + 1 for i in range(r)}
    return None

"""Formula-based h-polynomials: Precup's Betti numbers and character averaging in type A."""
from functools import lru_cache

from .polynomial import IntPoly
from .rootsys import build_root_system
from .weyl import enumerate_group, enumerate_parabolic


class ConsistencyError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def eulerian(m):
    """Eulerian polynomial E_m(t) via ``A(m,k) = (k+1)A(m-1,k) + (m-k)A(m-1,k-1)``."""
    if m < 1:
        raise ValueError(f"eulerian needs m >= 1, got {m}")
    row = [1]
    for size in range(2, m + 1):
        new = [0] * size
        for k in range(size):
            left = (k + 1) * row[k] if k < len(row) else 0
            right = (size - k) * row[k - 1] if k >= 1 else 0
            new[k] = left + right
        row = new
    return IntPoly(row)


def q_integer(m):
    """``[m]_t = 1 + t + ... + t^(m-1)``."""
    if m < 1:
        raise ValueError(f"q_integer needs m >= 1, got {m}")
    return IntPoly([1] * m)


def cycle_type(w):
    """Cycle lengths of a permutation of [n], weakly decreasing."""
    n = len(w.images)
    seen = [False] * (n + 1)
    lengths = []
    for i in range(1, n + 1):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = w(j)
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def chi_typeA(w):
    """Graded character ``E_l(t) * prod [lambda_j]_t`` at a permutation of cycle type lambda."""
    lam = cycle_type(w)
    out = eulerian(len(lam))
    for part in lam:
        out = out * q_integer(part)
    return out


def h_via_characters_A(pk, budget=None):
    if pk.rstype.family != "A":
        raise ValueError("character averaging is only available in type A")
    group = enumerate_parabolic(pk, budget)
    total = IntPoly()
    cache = {}
    for w in group:
        lam = cycle_type(w)
        if lam not in cache:
            cache[lam] = chi_typeA(w)
        total = total + cache[lam]
    try:
        return total.exact_div(len(group))
    except ValueError as exc:
        raise ConsistencyError(f"{pk}: character average is not integral ({exc})") from exc


def _root_sets(rs):
    positive = set(rs.positive_roots)
    neg_simple = {tuple(-x for x in a) for a in rs.simple_roots}
    return positive, neg_simple


def in_WK_set(w, pk):
    """Whether ``w^{-1}(alpha_k)`` is positive or a negative simple root for all k in K."""
    rs = build_root_system(pk.rstype)
    positive, neg_simple = _root_sets(rs)
    winv = w.inverse()
    for k in pk.K:
        image = winv.act_on_vector(rs.simple_roots[k - 1])
        if image not in positive and image not in neg_simple:
            return False
    return True


def in_WK_set_typeA(w, K):
    """Type A shortcut: ``w^{-1}(i) - w^{-1}(i+1) <= 1`` for every i in K."""
    winv = w.inverse()
    return all(winv(i) - winv(i + 1) <= 1 for i in K)


def d_stat(w, rstype):
    """Number of simple roots sent to negative roots by w."""
    rs = build_root_system(rstype)
    positive, _ = _root_sets(rs)
    return sum(1 for a in rs.simple_roots if w.act_on_vector(a) not in positive)


def descents(w):
    im = w.images
    return sum(1 for i in range(len(im) - 1) if im[i] > im[i + 1])


def precup_set(pk, budget=None):
    """Elements of W(K) with their d-statistic, in enumeration order."""
    rs = build_root_system(pk.rstype)
    positive, neg_simple = _root_sets(rs)
    simple = rs.simple_roots
    out = []
    for w in enumerate_group(pk.rstype, budget):
        winv = w.inverse()
        ok = True
        for k in pk.K:
            image = winv.act_on_vector(simple[k - 1])
            if image not in positive and image not in neg_simple:
                ok = False
                break
        if ok:
            d = sum(1 for a in simple if w.act_on_vector(a) not in positive)
            out.append((w, d))
    return out


def h_via_precup(pk, budget=None):
    coeffs = [0] * (pk.rstype.rank + 1)
    for _, d in precup_set(pk, budget):
        coeffs[d] += 1
    return IntPoly(coeffs)

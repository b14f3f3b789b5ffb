"""Face numbers and h-polynomials of P_W(K) by counting cliques of the facet graph.

The polytopes are simple and flag, so the codimension-d faces are exactly
the d-cliques of the facet intersection graph.
"""
from dataclasses import dataclass

from .facetcomb import intersection_graph
from .polynomial import IntPoly


class NonSimpleError(RuntimeError):
    pass


def _iter_cliques(rows, size):
    """Depth-first over cliques; each clique is visited once, extended by higher indices only."""
    all_mask = (1 << size) - 1

    def extend(clique, candidates):
        yield clique
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            yield from extend(clique + (v,), candidates & rows[v])

    yield from extend((), all_mask)


def clique_counts(graph):
    """``counts[d]`` is the number of d-vertex cliques (``counts[0] == 1``)."""
    counts = [0]
    rows = graph.rows

    def walk(depth, candidates):
        if depth >= len(counts):
            counts.append(0)
        counts[depth] += 1
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            walk(depth + 1, candidates & rows[v])

    walk(0, (1 << len(graph)) - 1)
    return counts


def count_cliques(graph, d):
    counts = clique_counts(graph)
    return counts[d] if d < len(counts) else 0


def iter_cliques(graph):
    """Yield every clique as a tuple of labels (including the empty clique)."""
    for idx in _iter_cliques(graph.rows, len(graph)):
        yield tuple(graph.labels[i] for i in idx)


@dataclass(frozen=True)
class FVector:
    """``entries[i]`` counts i-dimensional faces; the polytope itself is included."""

    entries: tuple

    @property
    def dim(self):
        return len(self.entries) - 1

    def euler(self):
        return sum((-1) ** i * f for i, f in enumerate(self.entries))

    def as_poly(self):
        return IntPoly(self.entries)

    def h_polynomial(self):
        return self.as_poly().shift(-1)

    def to_list(self):
        return list(self.entries)


def f_vector(pk):
    dim = pk.rstype.dim
    counts = clique_counts(intersection_graph(pk))
    if len(counts) - 1 != dim:
        raise NonSimpleError(
            f"{pk}: largest clique has {len(counts) - 1} facets, expected {dim}"
        )
    return FVector(tuple(counts[dim - i] for i in range(dim + 1)))


def h_polynomial_faces(pk):
    return f_vector(pk).h_polynomial()

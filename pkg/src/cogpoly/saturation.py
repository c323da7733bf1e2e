"""The saturation polynomial M of a cog, in its three equivalent forms.

On a generalised gec the polynomial follows the deletion-extraction
recursion M(g) = M(g delete e) + y*M(g extract e) over e-edges, with
base case x^k(g).  Equivalently it is the state sum over subsets A of
e-edges of y^|A| * x^(v-components after extracting A), and directly on
the cog it is the B-segment sum.  The recursion's independence of the
edge order is a theorem; the ``order`` argument exists so tests can
exercise it.
"""

from __future__ import annotations

import itertools

from .model import (Cog, CogError, GeneralisedGec, cog_to_gec, delete_e_edge,
                    extract_e_edge)
from .poly import MultiPoly

_X = MultiPoly.var("x")
_Y = MultiPoly.var("y")


def saturation_recursive(g: GeneralisedGec, order=None) -> MultiPoly:
    """M(g) by deletion-extraction over e-edges in the given label order."""
    if order is None:
        order = sorted(g.e_labels, key=lambda l: (len(l), l))
    order = [str(l) for l in order]
    if sorted(order) != sorted(g.e_labels):
        raise CogError("order must be a permutation of the e-edge labels")

    def rec(g, remaining):
        if not remaining:
            return MultiPoly.var("x", g.k()) if g.k() else MultiPoly.const(1)
        e, rest = remaining[0], remaining[1:]
        return rec(delete_e_edge(g, e), rest) + _Y * rec(extract_e_edge(g, e), rest)

    return rec(g, order)


def saturation_statesum(g: GeneralisedGec) -> MultiPoly:
    """Sum over subsets A of e-edges of y^|A| x^(k_v of g after extracting A)."""
    labels = g.e_labels
    total = MultiPoly.zero()
    for r in range(len(labels) + 1):
        for subset in itertools.combinations(labels, r):
            h = g
            for e in subset:
                h = extract_e_edge(h, e)
            total = total + MultiPoly.var("y", r) * MultiPoly.var("x", h.k_v())
    return total


def seg(c: Cog, v, B) -> int:
    """Number of B-segments at vertex v: maximal cyclic runs of edges in B."""
    B = _edge_set(c, B)
    if not 0 <= v < c.n_vertices:
        raise CogError("unknown vertex %r" % (v,))
    seq = c.vertices[v]
    if not seq:
        return 0
    inside = [h // 2 in B for h in seq]
    if all(inside):
        return 1
    # count out->in transitions around the cycle
    d = len(seq)
    return sum(1 for i in range(d) if inside[i] and not inside[i - 1])


def seg_total(c: Cog, B) -> int:
    return sum(seg(c, v, B) for v in range(c.n_vertices))


def iota(c: Cog) -> int:
    """Number of isolated vertices."""
    return c.isolated_count()


def _edge_set(c: Cog, labels):
    out = set()
    for label in labels:
        out.add(c.label_index(label))
    return out


def saturation_cog(c: Cog) -> MultiPoly:
    """Segment-formula state sum, directly on the cog."""
    m = c.n_edges
    labels = c.edge_labels
    i0 = iota(c)
    total = MultiPoly.zero()
    for r in range(m + 1):
        for B in itertools.combinations(labels, r):
            total = total + (MultiPoly.var("y", m - r)
                             * MultiPoly.var("x", seg_total(c, B) + i0))
    return total


def saturation_regular(c: Cog, degree) -> MultiPoly:
    """Specialised subset sums for 3- and 4-regular cogs.

    degree 3: sum_A y^|A| x^(n - sat(A)); degree 4 additionally counts
    crossing vertices, x^(n + cr(A) - sat(A)).
    """
    if degree not in (3, 4):
        raise CogError("degree must be 3 or 4")
    if any(len(seq) != degree for seq in c.vertices):
        raise CogError("cog is not %d-regular" % degree)
    n = c.n_vertices
    total = MultiPoly.zero()
    for r in range(c.n_edges + 1):
        for A in itertools.combinations(range(c.n_edges), r):
            a = set(A)
            sat = cr = 0
            for seq in c.vertices:
                inside = [h // 2 in a for h in seq]
                if all(inside):
                    sat += 1
                elif degree == 4 and inside[0] != inside[1] and inside[1] != inside[2] \
                        and inside[2] != inside[3]:
                    cr += 1
            total = total + MultiPoly.var("y", r) * MultiPoly.var("x", n + cr - sat)
    return total


def saturation_DX(c: Cog, D, X) -> MultiPoly:
    """The two-subset refinement M(c, D, X).

    D and X are disjoint edge label sets; the sum runs over B inside the
    remaining edges, weighting y^(|E| - |B u D u X|) x^(seg(B u D) + iota).
    Equals the plain polynomial of the gec with D deleted and X extracted.
    """
    d = _edge_set(c, D)
    x = _edge_set(c, X)
    if d & x:
        raise CogError("D and X must be disjoint")
    rest = [c.edge_labels[i] for i in range(c.n_edges) if i not in d | x]
    d_labels = [c.edge_labels[i] for i in sorted(d)]
    m = c.n_edges
    i0 = iota(c)
    total = MultiPoly.zero()
    for r in range(len(rest) + 1):
        for B in itertools.combinations(rest, r):
            union = list(B) + d_labels
            total = total + (MultiPoly.var("y", m - len(union) - len(x))
                             * MultiPoly.var("x", seg_total(c, union) + i0))
    return total


def gec_minor(c: Cog, D, X) -> GeneralisedGec:
    """The gec of c with the e-edges of D deleted and those of X extracted."""
    g = cog_to_gec(c)
    for label in D:
        g = delete_e_edge(g, label)
    for label in X:
        g = extract_e_edge(g, label)
    return g

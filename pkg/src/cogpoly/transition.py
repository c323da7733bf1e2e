"""The transition polynomial Q on pointed-gecs, and its supporting operations.

At an e-edge e = (u, v), both endpoints of degree 3, the two reconnection
operations act on the four v-half-edges adjacent to e:

  split  (one result): reconnect within each side, (u1,u2) and (v1,v2);
  splice (a formal sum of two): reconnect across, (u1,v1)(u2,v2) plus
  (u1,v2)(u2,v1) -- without cyclic orders the two cannot be told apart.

Five degenerate shapes need their own handling: a v-loop at one end, at
both ends, one v-edge parallel to e, two parallel v-edges, and the
generic case.  Q then follows
    Q(g) = alpha Q(g splice e) + beta Q(g split e) + gamma Q(g / e)
with base case t^k(g), where contracting e merges its ends into a
degree-4 "pointed" vertex.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .model import (CogError, GecSum, PointedGec, RotationSystem,
                    SignedRotationSystem, as_pointed, partial_petrial)
from .poly import MultiPoly
from .surface import trace_boundaries

_ALPHA = MultiPoly.var("alpha")
_BETA = MultiPoly.var("beta")
_GAMMA = MultiPoly.var("gamma")


@dataclass(frozen=True)
class SpliceResult:
    """The two summands of g splice e (they may be isomorphic)."""

    summands: tuple

    def __post_init__(self):
        if len(self.summands) != 2:
            raise CogError("a splice always has exactly two summands")


def _stubs(g, vertex):
    """The v-half-edges at a vertex as (edge_index, slot) pairs."""
    out = []
    for i, (a, b) in enumerate(g.v_edges):
        if a == vertex:
            out.append((i, 0))
        if b == vertex:
            out.append((i, 1))
    return out


def _far(g, stub, here):
    i, slot = stub
    a, b = g.v_edges[i]
    return b if slot == 0 else a


def _edge_site(g, label):
    """Classify the five shapes around the e-edge with this label."""
    idx = g.e_index(label)
    u, v = g.e_edges[idx]
    su = _stubs(g, u)
    sv = _stubs(g, v)
    loop_u = su[0][0] == su[1][0]
    loop_v = sv[0][0] == sv[1][0]
    parallel = [i for i, p in enumerate(g.v_edges) if set(p) == {u, v}]
    if loop_u and loop_v:
        case = "iii"
    elif loop_u or loop_v:
        case = "ii"
    elif len(parallel) == 2:
        case = "v"
    elif len(parallel) == 1:
        case = "iv"
    else:
        case = "i"
    return idx, u, v, su, sv, parallel, case


def _rebuild(g, drop_vertices, drop_v_edges, add_v_edges, drop_e_index,
             extra_free_loops=0):
    """Common tail of the reconnection operations: drop, add, compact."""
    keep = [w for w in range(g.n_vertices) if w not in drop_vertices]
    remap = {old: new for new, old in enumerate(keep)}
    v_edges = [p for i, p in enumerate(g.v_edges) if i not in drop_v_edges]
    v_edges = [(remap[a], remap[b]) for a, b in v_edges]
    v_edges += [(remap[a], remap[b]) for a, b in add_v_edges]
    e_edges = [(remap[a], remap[b]) for i, (a, b) in enumerate(g.e_edges)
               if i != drop_e_index]
    labels = tuple(l for i, l in enumerate(g.e_labels) if i != drop_e_index)
    return PointedGec(len(keep), tuple(e_edges), tuple(v_edges),
                      g.free_loops + extra_free_loops, labels)


def split(g, label) -> PointedGec:
    """The one-output reconnection at an e-edge (e leaves the e-edge set)."""
    g = as_pointed(g)
    idx, u, v, su, sv, parallel, case = _edge_site(g, label)
    incident = {i for i, _ in su} | {i for i, _ in sv}
    if case == "i":
        u1, u2 = (_far(g, s, u) for s in su)
        v1, v2 = (_far(g, s, v) for s in sv)
        return _rebuild(g, {u, v}, incident, [(u1, u2), (v1, v2)], idx)
    if case == "ii":
        side = sv if su[0][0] == su[1][0] else su  # stubs at the loopless end
        w = v if side is sv else u
        a, b = (_far(g, s, w) for s in side)
        return _rebuild(g, {u, v}, incident, [(a, b)], idx, extra_free_loops=1)
    if case == "iii":
        return _rebuild(g, {u, v}, incident, [], idx, extra_free_loops=2)
    if case == "iv":
        f = parallel[0]
        gu = next(s for s in su if s[0] != f)
        gv = next(s for s in sv if s[0] != f)
        wu, wv = _far(g, gu, u), _far(g, gv, v)
        return _rebuild(g, {u, v}, incident, [(wu, wv)], idx)
    # case v: three parallel edges
    return _rebuild(g, {u, v}, incident, [], idx, extra_free_loops=1)


def splice(g, label) -> SpliceResult:
    """The two-output reconnection at an e-edge."""
    g = as_pointed(g)
    idx, u, v, su, sv, parallel, case = _edge_site(g, label)
    incident = {i for i, _ in su} | {i for i, _ in sv}
    if case == "i":
        u1, u2 = (_far(g, s, u) for s in su)
        v1, v2 = (_far(g, s, v) for s in sv)
        return SpliceResult((
            _rebuild(g, {u, v}, incident, [(u1, v1), (u2, v2)], idx),
            _rebuild(g, {u, v}, incident, [(u1, v2), (u2, v1)], idx)))
    if case == "ii":
        side = sv if su[0][0] == su[1][0] else su
        w = v if side is sv else u
        a, b = (_far(g, s, w) for s in side)
        out = _rebuild(g, {u, v}, incident, [(a, b)], idx)
        return SpliceResult((out, out))
    if case == "iii":
        out = _rebuild(g, {u, v}, incident, [], idx, extra_free_loops=1)
        return SpliceResult((out, out))
    if case == "iv":
        f = parallel[0]
        gu = next(s for s in su if s[0] != f)
        gv = next(s for s in sv if s[0] != f)
        wu, wv = _far(g, gu, u), _far(g, gv, v)
        base = _rebuild(g, {u, v}, incident, [(wu, wv)], idx)
        bonus = _rebuild(g, {u, v}, incident, [(wu, wv)], idx, extra_free_loops=1)
        return SpliceResult((base, bonus))
    # case v
    one = _rebuild(g, {u, v}, incident, [], idx, extra_free_loops=1)
    two = _rebuild(g, {u, v}, incident, [], idx, extra_free_loops=2)
    return SpliceResult((two, one))


def contract_e(g, label) -> PointedGec:
    """Merge the ends of an e-edge into one pointed (degree-4) vertex."""
    g = as_pointed(g)
    idx = g.e_index(label)
    u, v = g.e_edges[idx]
    lo, hi = min(u, v), max(u, v)
    keep = [w for w in range(g.n_vertices) if w != hi]
    remap = {old: new for new, old in enumerate(keep)}
    remap[hi] = remap[lo]
    v_edges = tuple((remap[a], remap[b]) for a, b in g.v_edges)
    e_edges = tuple((remap[a], remap[b]) for i, (a, b) in enumerate(g.e_edges)
                    if i != idx)
    labels = tuple(l for i, l in enumerate(g.e_labels) if i != idx)
    return PointedGec(g.n_vertices - 1, e_edges, v_edges, g.free_loops, labels)


def splice_sum(g, label) -> GecSum:
    """g splice e as a GecSum (isomorphic summands merge with multiplicity)."""
    return GecSum((1, s) for s in splice(g, label).summands)


def split_sum(g, label) -> GecSum:
    return GecSum([(1, split(g, label))])


def contract_sum(g, label) -> GecSum:
    return GecSum([(1, contract_e(g, label))])


def _order_for(g, order):
    if order is None:
        return sorted(g.e_labels, key=lambda l: (len(l), l))
    order = [str(l) for l in order]
    if sorted(order) != sorted(g.e_labels):
        raise CogError("order must be a permutation of the e-edge labels")
    return order


def transition_recursive(g, order=None) -> MultiPoly:
    """Q(g) by the three-way recursion; linear over GecSum inputs."""
    if isinstance(g, GecSum):
        total = MultiPoly.zero()
        for coeff, rep in g.terms():
            total = total + coeff * transition_recursive(rep, order)
        return total
    g = as_pointed(g)
    order = _order_for(g, order)

    def rec(h, remaining):
        if not remaining:
            return MultiPoly.var("t", h.k())
        e, rest = remaining[0], remaining[1:]
        a, b = splice(h, e).summands
        return (_ALPHA * (rec(a, rest) + rec(b, rest))
                + _BETA * rec(split(h, e), rest)
                + _GAMMA * rec(contract_e(h, e), rest))

    return rec(g, order)


def transition_statesum(g) -> MultiPoly:
    """Q(g) as the sum over ordered 3-partitions (X, Y, Z) of the e-edges.

    Each partition contributes a^|X| b^|Y| g^|Z| times t^k summed over the
    2^|X| summands of ((g split Y) / Z) splice X.
    """
    g = as_pointed(g)
    labels = g.e_labels
    total = MultiPoly.zero()
    for assign in itertools.product((0, 1, 2), repeat=len(labels)):
        X = [l for l, a in zip(labels, assign) if a == 0]
        Y = [l for l, a in zip(labels, assign) if a == 1]
        Z = [l for l, a in zip(labels, assign) if a == 2]
        h = g
        for l in Y:
            h = split(h, l)
        for l in Z:
            h = contract_e(h, l)
        summands = [h]
        for l in X:
            summands = [s for cur in summands for s in splice(cur, l).summands]
        tpart = MultiPoly.zero()
        for s in summands:
            tpart = tpart + MultiPoly.var("t", s.k())
        total = total + (MultiPoly.var("alpha", len(X))
                         * MultiPoly.var("beta", len(Y))
                         * MultiPoly.var("gamma", len(Z)) * tpart)
    return total


def _delete_edges(s: SignedRotationSystem, labels):
    """New signed rotation system with the given edges removed."""
    rot = s.rotation
    drop = {rot.label_index(l) for l in labels}
    kept = [e for e in range(rot.n_edges) if e not in drop]
    new_id = {e: i for i, e in enumerate(kept)}
    vertices = tuple(
        tuple(2 * new_id[h // 2] + (h & 1) for h in seq if h // 2 not in drop)
        for seq in rot.vertices)
    labels_out = tuple(rot.edge_labels[e] for e in kept)
    signs = tuple(s.signs[e] for e in kept)
    return SignedRotationSystem(RotationSystem(vertices, labels_out), signs)


def topological_transition(s: SignedRotationSystem) -> MultiPoly:
    """The ribbon-graph transition polynomial: boundary-count state sum.

    Partitions (X, Y, Z) of the edges contribute a^|X| b^|Y| g^|Z| t^b
    where b counts boundary walks after toggling the signs of Z and
    deleting Y.  At gamma = alpha the result only depends on the
    underlying cog.
    """
    labels = s.rotation.edge_labels
    total = MultiPoly.zero()
    for assign in itertools.product((0, 1, 2), repeat=len(labels)):
        X = [l for l, a in zip(labels, assign) if a == 0]
        Y = [l for l, a in zip(labels, assign) if a == 1]
        Z = [l for l, a in zip(labels, assign) if a == 2]
        cur = partial_petrial(s, Z) if Z else s
        cur = _delete_edges(cur, Y)
        b = trace_boundaries(cur).b
        total = total + (MultiPoly.var("alpha", len(X))
                         * MultiPoly.var("beta", len(Y))
                         * MultiPoly.var("gamma", len(Z))
                         * MultiPoly.var("t", b))
    return total


def k_valuation_sum(g, k) -> MultiPoly:
    """Generating function of k-valuations by e-edge type.

    A k-valuation colours the v-edges (free loops included) with k colours
    so that the four v-half-edge slots at every e-edge carry each colour
    an even number of times, and all v-edges at a pointed vertex agree.
    Each valuation contributes (2a+b+g)^total a^spliced b^split.
    """
    if k < 1:
        raise CogError("k must be at least 1")
    g = as_pointed(g)
    m = len(g.v_edges)
    sites = []
    for u, v in g.e_edges:
        su = [_stub_edge for _stub_edge, _ in _stubs(g, u)]
        sv = [_stub_edge for _stub_edge, _ in _stubs(g, v)]
        sites.append((su, sv))
    pointed_groups = []
    for w in g.pointed_vertices():
        pointed_groups.append(sorted({i for i, _ in _stubs(g, w)}))
    total_weight = 2 * _ALPHA + _BETA + _GAMMA
    total = MultiPoly.zero()
    for phi in itertools.product(range(k), repeat=m):
        if any(len({phi[i] for i in grp}) > 1 for grp in pointed_groups):
            continue
        tot = spl = spc = 0
        ok = True
        for su, sv in sites:
            colours = [phi[su[0]], phi[su[1]], phi[sv[0]], phi[sv[1]]]
            if any(colours.count(c) % 2 for c in set(colours)):
                ok = False
                break
            if colours[0] == colours[1] == colours[2] == colours[3]:
                tot += 1
            elif colours[0] == colours[1]:
                spl += 1
            else:
                spc += 1
        if ok:
            total = total + (total_weight ** tot
                             * MultiPoly.var("alpha", spc)
                             * MultiPoly.var("beta", spl))
    return total * k ** g.free_loops

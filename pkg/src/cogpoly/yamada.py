"""Cog drawings, crossing state sums, and the Yamada-derived invariants.

A drawing places the half-edge endpoints of a rotation representative as
consecutive points on the parabola y = x^2 (one block of consecutive
abscissae per vertex) and draws every edge as a straight segment.  Chords
of a convex curve never dip below it, so contracting each block to a
point yields a plane drawing realising exactly the chosen rotation, and
the only multiple points are transversal segment crossings, found here in
exact rational arithmetic.  Degenerate placements (triple points,
endpoint incidences, collinear overlaps) are retried with fresh
seed-derived abscissae.

A state replaces each crossing by a degree-4 vertex (symbol 0) or one of
the two planar smoothings (symbols +1/-1).  The diagram polynomial is

    R = sum over states of A^w(state) (-1)^k T(state graph; 0, -sigma),

also computable by the crossing skein plus the plane deletion-contraction
rules, which this module implements as an independent second route.  The
exported cog invariants are Y = |R at A=1| and R at A=-1; both are
insensitive to which smoothing is called +1, and the test suite checks
crossing-change invariance explicitly.  Closed curves through no vertex
(free loops) take the value sigma, matching the one-vertex, one-loop
diagram; this convention is validated by the drawing-invariance suite.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .model import Cog, CogError, RotationSystem, vertex_reversal
from .poly import SIGMA, LaurentPoly

MINUS_SIGMA = -SIGMA


class DrawingError(CogError):
    """No valid generic drawing was found (or internal inconsistency)."""


class InvariantMismatchError(AssertionError):
    """Different drawings of one cog disagreed; signals an implementation bug."""


# ---------------------------------------------------------------------------
# plane multigraphs and the Tutte evaluation T(g; 0, y)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Multigraph:
    """Vertices 0..n-1 and an edge multiset; loops allowed."""

    n: int
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "edges",
                           tuple(tuple(sorted(e)) for e in self.edges))
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise CogError("edge endpoint out of range")

    def k(self):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        return len({find(v) for v in range(self.n)})

    def nullity(self):
        return len(self.edges) - self.n + self.k()


def with_free_loops(g: Multigraph, count) -> Multigraph:
    """Append one-vertex-with-loop components standing in for free loops."""
    edges = list(g.edges)
    for i in range(count):
        edges.append((g.n + i, g.n + i))
    return Multigraph(g.n + count, tuple(edges))


def _connected_between(n, edges, a, b):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return find(a) == find(b)


def tutte_at(g: Multigraph, y):
    """T(g; 0, y) by deletion-contraction; y may be an int or a LaurentPoly.

    At x = 0 any bridge kills the value, loops contribute a factor y, and
    the edgeless graph gives 1.
    """

    def rec(n, edges):
        n_loops = sum(1 for u, v in edges if u == v)
        core = [(u, v) for u, v in edges if u != v]
        factor = y ** n_loops if n_loops else 1
        if not core:
            return factor
        for i, (u, v) in enumerate(core):
            if not _connected_between(n, core[:i] + core[i + 1:], u, v):
                return 0  # bridge: factor x = 0
        u, v = core[0]
        rest = core[1:]
        merged = [(u if a == v else a, u if b == v else b) for a, b in rest]
        return factor * (rec(n, rest) + rec(n, merged))

    return rec(g.n, list(g.edges))


# ---------------------------------------------------------------------------
# drawings
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CrossingRec:
    """One transversal crossing of two edge segments.

    The two strands are (edge_a, pos_a) and (edge_b, pos_b) where pos is
    the index of this crossing along that edge's crossing list.  ``ccw``
    records the geometric orientation of (direction_a, direction_b); the
    four arc-ends in rotational order are a-, b-, a+, b+ when ccw else
    a-, b+, a+, b-.  ``over_first`` says strand a passes over strand b
    and fixes which smoothing is written +1.
    """

    edge_a: int
    pos_a: int
    edge_b: int
    pos_b: int
    ccw: bool
    over_first: bool = True


@dataclass(frozen=True)
class Drawing:
    """A planarised cog diagram: segments plus their crossing records."""

    cog: Cog
    rotation: RotationSystem
    edge_crossings: tuple   # per edge: crossing ids ordered along the segment
    crossings: tuple        # CrossingRec per crossing id
    seed: int = 0

    @property
    def n_crossings(self):
        return len(self.crossings)


def flip_crossing(d: Drawing, index) -> Drawing:
    """Toggle the over/under flag of one crossing (a crossing change)."""
    recs = list(d.crossings)
    recs[index] = replace(recs[index], over_first=not recs[index].over_first)
    return replace(d, crossings=tuple(recs))


def _segment_crossing(p1, p2, q1, q2):
    """Proper interior intersection of two segments, exactly.

    Returns (t, u, point) with t, u strictly inside (0, 1), None when
    disjoint, or raises DrawingError on a degenerate contact.
    """
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (q2[0] - q1[0], q2[1] - q1[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    r = (q1[0] - p1[0], q1[1] - p1[1])
    if denom == 0:
        cross_r = r[0] * d1[1] - r[1] * d1[0]
        if cross_r == 0:
            raise DrawingError("collinear segments")
        return None
    t = Fraction(r[0] * d2[1] - r[1] * d2[0], denom)
    u = Fraction(r[0] * d1[1] - r[1] * d1[0], denom)
    if t < 0 or t > 1 or u < 0 or u > 1:
        return None
    if t in (0, 1) or u in (0, 1):
        raise DrawingError("segment endpoint touches another segment")
    point = (p1[0] + t * d1[0], p1[1] + t * d1[1])
    return t, u, point


def _try_draw(c: Cog, rotation: RotationSystem, rng):
    m = c.n_edges
    # The crossing pattern of chords on a convex curve depends only on the
    # endpoint order, so the seed varies the block order of the vertices
    # along the curve and each block's starting offset; the coordinates
    # are random only to dodge degeneracies.
    order = list(range(rotation.n_vertices))
    rng.shuffle(order)
    xs = sorted(rng.sample(range(1, 40 * max(1, m) + 7), 2 * m))
    point = {}
    i = 0
    for v in order:
        seq = rotation.vertices[v]
        if seq:
            off = rng.randrange(len(seq))
            seq = seq[off:] + seq[:off]
        for h in seq:
            x = Fraction(xs[i])
            point[h] = (x, x * x)
            i += 1
    segments = [(point[2 * e], point[2 * e + 1]) for e in range(m)]
    hits = []   # (edge_a, t_a, edge_b, t_b, ccw, point)
    seen_points = set()
    for a, b in itertools.combinations(range(m), 2):
        res = _segment_crossing(*segments[a], *segments[b])
        if res is None:
            continue
        t, u, pt = res
        if pt in seen_points:
            raise DrawingError("three segments through one point")
        seen_points.add(pt)
        d1 = (segments[a][1][0] - segments[a][0][0],
              segments[a][1][1] - segments[a][0][1])
        d2 = (segments[b][1][0] - segments[b][0][0],
              segments[b][1][1] - segments[b][0][1])
        ccw = d1[0] * d2[1] - d1[1] * d2[0] > 0
        hits.append((a, t, b, u, ccw))
    per_edge = [[] for _ in range(m)]
    for cid, (a, t, b, u, ccw) in enumerate(hits):
        per_edge[a].append((t, cid))
        per_edge[b].append((u, cid))
    edge_crossings = tuple(tuple(cid for _, cid in sorted(lst))
                           for lst in per_edge)
    recs = []
    for cid, (a, t, b, u, ccw) in enumerate(hits):
        recs.append(CrossingRec(
            edge_a=a, pos_a=edge_crossings[a].index(cid),
            edge_b=b, pos_b=edge_crossings[b].index(cid),
            ccw=ccw))
    return edge_crossings, tuple(recs)


def draw(c: Cog, seed=0, rotation=None) -> Drawing:
    """A valid generic drawing of the cog, deterministic given the seed."""
    if rotation is None:
        rotation = RotationSystem(c.vertices, c.edge_labels)
    for attempt in range(64):
        rng = random.Random(0xC06 + 1000003 * seed + attempt)
        try:
            edge_crossings, recs = _try_draw(c, rotation, rng)
        except DrawingError:
            continue
        return Drawing(c, rotation, edge_crossings, recs, seed)
    raise DrawingError("no generic drawing found after 64 perturbations")


# ---------------------------------------------------------------------------
# resolving states
# ---------------------------------------------------------------------------

def resolve(d: Drawing, state):
    """Plane graph of one crossing state.

    ``state`` assigns +1, 0 or -1 to every crossing; 0 keeps the crossing
    as a new degree-4 vertex, +1/-1 pick the two planar smoothings (which
    one is +1 follows the over/under flag).  Returns (Multigraph,
    free_loop_count); real cog vertices keep their ids, 0-crossings get
    fresh ones, and smoothed closed curves through no vertex are counted
    as free loops.
    """
    if len(state) != d.n_crossings:
        raise CogError("state must assign every crossing")
    c = d.cog
    where = {}
    for v, seq in enumerate(c.vertices):
        for h in seq:
            where[h] = v
    node_ids = {}
    next_id = c.n_vertices
    for cid, sym in enumerate(state):
        if sym == 0:
            node_ids[cid] = next_id
            next_id += 1

    # arc endpoints: ('v', vertex) | ('j', crossing, port)
    def crossing_end(cid, strand_is_a, entering):
        sym = state[cid]
        if sym == 0:
            return ("v", node_ids[cid])
        positive = (sym == 1) == d.crossings[cid].over_first
        # positive: glue minus-ends together and plus-ends together;
        # negative: glue each minus-end to the other strand's plus-end.
        if positive:
            port = 0 if entering else 1
        else:
            port = (0 if entering else 1) if strand_is_a else (1 if entering else 0)
        return ("j", cid, port)

    arcs = []
    for e in range(c.n_edges):
        chain = [("v", where[2 * e])]
        for cid in d.edge_crossings[e]:
            is_a = d.crossings[cid].edge_a == e
            chain.append(("end", cid, is_a))
        chain.append(("v", where[2 * e + 1]))
        for i in range(len(chain) - 1):
            left = chain[i]
            right = chain[i + 1]
            if left[0] == "end":
                left = crossing_end(left[1], left[2], entering=False)
            if right[0] == "end":
                right = crossing_end(right[1], right[2], entering=True)
            arcs.append((left, right))

    # contract junction nodes (each has exactly two arc-ends)
    incident = {}
    for ai, (x, y) in enumerate(arcs):
        for slot, node in ((0, x), (1, y)):
            if node[0] == "j":
                incident.setdefault(node, []).append((ai, slot))
    for node, ends in incident.items():
        if len(ends) != 2:
            raise DrawingError("junction %r has %d ends" % (node, len(ends)))
    used = [False] * len(arcs)

    def walk(ai, slot):
        # traverse arc ai away from its `slot` end, through junctions,
        # until a terminal node is reached
        while True:
            used[ai] = True
            node = arcs[ai][1 - slot]
            if node[0] == "v":
                return node
            (a1, s1), (a2, s2) = incident[node]
            ai, slot = (a2, s2) if (a1, s1) == (ai, 1 - slot) else (a1, s1)

    edges = []
    free_loops = 0
    for ai, (x, y) in enumerate(arcs):
        if used[ai]:
            continue
        if x[0] == "v":
            edges.append((x[1], walk(ai, 0)[1]))
        elif y[0] == "v":
            edges.append((y[1], walk(ai, 1)[1]))
    for ai in range(len(arcs)):
        if used[ai]:
            continue
        # pure junction cycle: one closed curve through no vertex
        cur, slot = ai, 0
        while not used[cur]:
            used[cur] = True
            node = arcs[cur][1 - slot]
            (a1, s1), (a2, s2) = incident[node]
            cur, slot = (a2, s2) if (a1, s1) == (cur, 1 - slot) else (a1, s1)
        free_loops += 1
    return Multigraph(next_id, tuple(edges)), free_loops


# ---------------------------------------------------------------------------
# the diagram polynomial and the exported invariants
# ---------------------------------------------------------------------------

def _states(n):
    return itertools.product((1, 0, -1), repeat=n)


def yamada_R(d: Drawing) -> LaurentPoly:
    """R of the drawing via the crossing state sum.

    Each state contributes A^(sum of symbols) (-1)^k T(state; 0, -sigma),
    with free loops counted as one-vertex-one-loop components.
    """
    total = LaurentPoly.zero()
    for state in _states(d.n_crossings):
        g, fl = resolve(d, state)
        g = with_free_loops(g, fl)
        t = tutte_at(g, MINUS_SIGMA)
        sign = -1 if g.k() % 2 else 1
        total = total + LaurentPoly.A(sum(state)) * sign * t
    if isinstance(total, int):
        total = LaurentPoly.const(total)
    return total


def _r_plane(g: Multigraph) -> LaurentPoly:
    """R of a plane graph by deletion-contraction alone (independent of tutte_at).

    Non-loop edges satisfy R(g) = R(g delete e) + R(g contract e); once only
    loops remain every component is a bouquet, worth -(-sigma)^loops, and the
    values multiply over components.
    """
    core = [(u, v) for u, v in g.edges if u != v]
    if core:
        u, v = core[0]
        rest = list(g.edges)
        rest.remove((u, v))
        deleted = Multigraph(g.n, tuple(rest))
        # contraction removes vertex v entirely; an isolated leftover would
        # wrongly contribute a factor R(vertex) = -1
        remap = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
        remap[v] = remap[u]
        merged = Multigraph(g.n - 1, tuple(
            (remap[a], remap[b]) for a, b in rest))
        return _r_plane(deleted) + _r_plane(merged)
    loops_at = [0] * g.n
    for u, _ in g.edges:
        loops_at[u] += 1
    out = LaurentPoly.const(1)
    for v in range(g.n):
        out = out * (-(MINUS_SIGMA ** loops_at[v]))
    return out


def yamada_R_skein(d: Drawing) -> LaurentPoly:
    """R by the skein recursion on crossings plus plane deletion-contraction.

    A second, independent route to the same polynomial; free loops take
    the value sigma.
    """

    def rec(assignment):
        i = len(assignment)
        if i == d.n_crossings:
            g, fl = resolve(d, tuple(assignment))
            return SIGMA ** fl * _r_plane(g)
        return (LaurentPoly.A(1) * rec(assignment + [1])
                + LaurentPoly.A(-1) * rec(assignment + [-1])
                + rec(assignment + [0]))

    return rec([])


def _y_of_drawing(d: Drawing) -> int:
    total = 0
    for state in _states(d.n_crossings):
        g, fl = resolve(d, state)
        g = with_free_loops(g, fl)
        sign = -1 if g.k() % 2 else 1
        total += sign * tutte_at(g, -3)
    return abs(total)


def _representatives(c: Cog, count):
    """Rotation representatives that differ by vertex reversals."""
    base = RotationSystem(c.vertices, c.edge_labels)
    reps = []
    for mask in range(count):
        r = base
        for v in range(c.n_vertices):
            if mask >> v & 1:
                r = vertex_reversal(r, v)
        reps.append(r)
        if mask >= 2 ** max(c.n_vertices, 1) - 1:
            break
    return reps


def invariant_Y(c: Cog, drawings=1, seed=0) -> int:
    """Y = |sum over states of (-1)^k T(state; 0, -3)|, from a drawing of c.

    With drawings > 1 the value is recomputed from that many distinct
    seeds and rotation representatives; any disagreement is an internal
    error, since Y is drawing-independent.
    """
    if drawings < 1:
        raise CogError("drawings must be at least 1")
    reps = _representatives(c, drawings)
    values = []
    for i in range(drawings):
        rot = reps[i % len(reps)]
        values.append(_y_of_drawing(draw(c, seed=seed + i, rotation=rot)))
    if len(set(values)) > 1:
        raise InvariantMismatchError(
            "Y differed across drawings: %r" % (values,))
    return values[0]


def invariant_Rm1(c: Cog, seed=0) -> int:
    """R evaluated at A = -1; depends only on the underlying graph."""
    value = yamada_R(draw(c, seed=seed)).evaluate(-1)
    if value.denominator != 1:
        raise AssertionError("R(-1) must be an integer")
    return int(value)


def flow_count(g: Multigraph, k) -> int:
    """Nowhere-zero Z_k-flows of g, by brute force over edge values.

    Fix the stored orientation (u -> v); loops carry any of the k-1
    nonzero values; conservation is checked at every vertex.
    """
    if k < 2:
        raise CogError("flows need k >= 2")
    loops = sum(1 for u, v in g.edges if u == v)
    core = [(u, v) for u, v in g.edges if u != v]
    count = 0
    for values in itertools.product(range(1, k), repeat=len(core)):
        net = [0] * g.n
        for (u, v), val in zip(core, values):
            net[u] += val
            net[v] -= val
        if all(x % k == 0 for x in net):
            count += 1
    return count * (k - 1) ** loops


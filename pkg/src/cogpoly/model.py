"""Core data types: cogs, rotation systems, gecs, and their elementary operations.

A cog is a graph with an undirected cyclic order of half-edges at each
vertex.  Half-edges are dense ints assigned at construction: edge ``i``
owns half-edges ``2*i`` and ``2*i + 1``, so the partner of ``h`` is
``h ^ 1`` and its edge is ``h // 2``.  Edge labels from input files are
kept as metadata for printing; they play no structural role.

Gecs encode cogs as cubic graphs with a perfect matching (the e-edges);
the complementary v-edges form disjoint cycles.  Generalised gecs relax
the v-edges to a subgraph of maximum degree 2, pointed-gecs allow
degree-4 vertices not covered by the matching.  All values here are
immutable; every operation returns a new object.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field


class CogError(ValueError):
    """Invalid cog/gec structure or operation."""


class CogParseError(CogError):
    """Malformed input text; carries 1-based line and column."""

    def __init__(self, message, line, col):
        super().__init__("%s (line %d, column %d)" % (message, line, col))
        self.line = line
        self.col = col


# ---------------------------------------------------------------------------
# cogs and rotation systems
# ---------------------------------------------------------------------------

def _check_vertices(vertices, n_edges, directed):
    seen = set()
    for seq in vertices:
        for h in seq:
            if not 0 <= h < 2 * n_edges:
                raise CogError("half-edge id %r out of range" % (h,))
            if h in seen:
                raise CogError("half-edge %d appears twice" % h)
            seen.add(h)
    if len(seen) != 2 * n_edges:
        raise CogError("every half-edge must appear in exactly one vertex")


@dataclass(frozen=True)
class Cog:
    """Graph with an undirected cyclic order of half-edges at each vertex.

    ``vertices[v]`` is the cyclic sequence at vertex ``v`` (stored as one
    arbitrary rotation; all comparisons go through canonical forms, which
    quotient by rotation and reversal).  An isolated vertex is an empty
    sequence.
    """

    vertices: tuple
    edge_labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(s) for s in self.vertices))
        object.__setattr__(self, "edge_labels", tuple(str(l) for l in self.edge_labels))
        _check_vertices(self.vertices, self.n_edges, directed=False)

    @property
    def n_edges(self):
        return len(self.edge_labels)

    @property
    def n_vertices(self):
        return len(self.vertices)

    def vertex_of(self, h):
        for v, seq in enumerate(self.vertices):
            if h in seq:
                return v
        raise CogError("unknown half-edge %r" % (h,))

    def degree(self, v):
        return len(self.vertices[v])

    def max_degree(self):
        return max((len(s) for s in self.vertices), default=0)

    def label_index(self, label):
        try:
            return self.edge_labels.index(str(label))
        except ValueError:
            raise CogError("unknown edge label %r" % (label,)) from None

    def isolated_count(self):
        return sum(1 for s in self.vertices if not s)


@dataclass(frozen=True)
class RotationSystem:
    """Like a Cog but the cyclic order at each vertex is directed."""

    vertices: tuple
    edge_labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(tuple(s) for s in self.vertices))
        object.__setattr__(self, "edge_labels", tuple(str(l) for l in self.edge_labels))
        _check_vertices(self.vertices, self.n_edges, directed=True)

    @property
    def n_edges(self):
        return len(self.edge_labels)

    @property
    def n_vertices(self):
        return len(self.vertices)

    def label_index(self, label):
        try:
            return self.edge_labels.index(str(label))
        except ValueError:
            raise CogError("unknown edge label %r" % (label,)) from None


@dataclass(frozen=True)
class SignedRotationSystem:
    """Rotation system plus an edge signature (+1/-1 per edge)."""

    rotation: RotationSystem
    signs: tuple

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.signs) != self.rotation.n_edges:
            raise CogError("need one sign per edge")
        if any(s not in (1, -1) for s in self.signs):
            raise CogError("signs must be +1 or -1")

    @property
    def n_edges(self):
        return self.rotation.n_edges


def underlying_cog(r):
    """Forget the direction of every cyclic order."""
    if isinstance(r, SignedRotationSystem):
        r = r.rotation
    return Cog(r.vertices, r.edge_labels)


def vertex_reversal(r: RotationSystem, v) -> RotationSystem:
    """Reverse the cyclic order at vertex v.  Involution."""
    if not 0 <= v < r.n_vertices:
        raise CogError("unknown vertex %r" % (v,))
    vertices = list(r.vertices)
    vertices[v] = tuple(reversed(vertices[v]))
    return RotationSystem(tuple(vertices), r.edge_labels)


def _incident_edges(seq):
    """Map edge -> number of half-edges of that edge in seq (1 or 2)."""
    count = {}
    for h in seq:
        count[h // 2] = count.get(h // 2, 0) + 1
    return count


def vertex_flip(s: SignedRotationSystem, v) -> SignedRotationSystem:
    """Vertex reversal at v combined with toggling signs of non-loop edges at v."""
    rot = vertex_reversal(s.rotation, v)
    signs = list(s.signs)
    for e, mult in _incident_edges(s.rotation.vertices[v]).items():
        if mult == 1:  # loops at v keep their sign
            signs[e] = -signs[e]
    return SignedRotationSystem(rot, tuple(signs))


def partial_petrial(s: SignedRotationSystem, labels) -> SignedRotationSystem:
    """Toggle the signs of the given edges; the rotation is untouched."""
    signs = list(s.signs)
    for label in set(labels):
        signs[s.rotation.label_index(label)] *= -1
    return SignedRotationSystem(s.rotation, tuple(signs))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _strip_comments(text):
    # '#' to end of line becomes spaces, so line/column positions survive
    lines = []
    for line in text.split("\n"):
        i = line.find("#")
        lines.append(line if i < 0 else line[:i] + " " * (len(line) - i))
    return "\n".join(lines)


def _tokenize(text, open_ch, close_ch):
    """Yield (kind, value, line, col) with kind in {'open', 'close', 'word'}."""
    tokens = []
    line, col = 1, 1
    word, word_pos = [], None
    for ch in _strip_comments(text) + "\n":
        if ch == open_ch or ch == close_ch:
            if word:
                tokens.append(("word", "".join(word), *word_pos))
                word = []
            tokens.append(("open" if ch == open_ch else "close", ch, line, col))
        elif ch.isspace():
            if word:
                tokens.append(("word", "".join(word), *word_pos))
                word = []
        else:
            if not word:
                word_pos = (line, col)
            word.append(ch)
        if ch == "\n":
            line += 1
            col = 1
        else:
            col += 1
    return tokens


def _parse_groups(text, open_ch, close_ch):
    """Parse parenthesised groups; returns (groups, trailing_words).

    Each group is a list of (label, line, col).  Words after the last
    group (e.g. an .srs signature section) are returned separately.
    """
    groups = []
    trailing = []
    current = None
    for kind, value, line, col in _tokenize(text, open_ch, close_ch):
        if kind == "open":
            if current is not None:
                raise CogParseError("nested '%s'" % open_ch, line, col)
            if trailing:
                raise CogParseError("unexpected group after trailing words", line, col)
            current = []
        elif kind == "close":
            if current is None:
                raise CogParseError("unmatched '%s'" % close_ch, line, col)
            groups.append(current)
            current = None
        elif kind == "word":
            if current is None:
                trailing.append((value, line, col))
            else:
                current.append((value, line, col))
    if current is not None:
        raise CogParseError("unclosed '%s'" % open_ch, 1, 1)
    return groups, trailing


def _split_compact(groups):
    """Single-character label mode: used when no group has two or more tokens."""
    token_mode = any(len(g) > 1 for g in groups)
    if token_mode:
        return [[(t, l, c) for t, l, c in g] for g in groups]
    out = []
    for g in groups:
        row = []
        for token, line, col in g:
            for i, ch in enumerate(token):
                row.append((ch, line, col + i))
        out.append(row)
    return out


def _label_sort_key(label):
    return (0, int(label), "") if label.isdigit() else (1, 0, label)


def _groups_to_structure(groups):
    """Turn label groups into (vertex half-edge sequences, sorted edge labels)."""
    occurrences = {}
    for gi, g in enumerate(groups):
        for pi, (label, line, col) in enumerate(g):
            occurrences.setdefault(label, []).append((gi, pi, line, col))
    for label, occ in occurrences.items():
        if len(occ) != 2:
            line, col = occ[0][2], occ[0][3]
            raise CogParseError(
                "edge label %r occurs %d times (expected 2)" % (label, len(occ)),
                line, col)
    labels = sorted(occurrences, key=_label_sort_key)
    half_of = {}
    for i, label in enumerate(labels):
        occ = sorted(occurrences[label][:2])
        half_of[occ[0][:2]] = 2 * i
        half_of[occ[1][:2]] = 2 * i + 1
    vertices = tuple(
        tuple(half_of[(gi, pi)] for pi in range(len(g)))
        for gi, g in enumerate(groups))
    return vertices, tuple(labels)


def parse_cog(text) -> Cog:
    """Parse the .cog format: groups like ``(1 3 2 3)(1 2)``.

    The compact form ``(1323)(12)`` (no whitespace inside any group) is
    also accepted, each character then being its own label.  ``()`` is an
    isolated vertex and ``#`` starts a comment.
    """
    groups, trailing = _parse_groups(text, "(", ")")
    if trailing:
        word, line, col = trailing[0]
        raise CogParseError("unexpected %r outside groups" % word, line, col)
    vertices, labels = _groups_to_structure(_split_compact(groups))
    return Cog(vertices, labels)


def parse_rotation(text) -> RotationSystem:
    """Parse directed groups like ``[1 3 2 3][1 2]``."""
    groups, trailing = _parse_groups(text, "[", "]")
    if trailing:
        word, line, col = trailing[0]
        raise CogParseError("unexpected %r outside groups" % word, line, col)
    vertices, labels = _groups_to_structure(_split_compact(groups))
    return RotationSystem(vertices, labels)


def parse_srs(text) -> SignedRotationSystem:
    """Parse the .srs format: rotation groups plus an optional signs line.

    ``[1 3 2 3][1 2]`` followed by ``signs: 1+ 2- 3+``; edges without an
    entry default to +.
    """
    groups, trailing = _parse_groups(text, "[", "]")
    vertices, labels = _groups_to_structure(_split_compact(groups))
    rot = RotationSystem(vertices, labels)
    signs = [1] * rot.n_edges
    if trailing:
        head, line, col = trailing[0]
        if head != "signs:":
            raise CogParseError("expected 'signs:' section, got %r" % head, line, col)
        for word, line, col in trailing[1:]:
            if len(word) < 2 or word[-1] not in "+-":
                raise CogParseError("bad sign entry %r" % word, line, col)
            label, sign = word[:-1], word[-1]
            if label not in labels:
                raise CogParseError("unknown edge label %r in signs" % label, line, col)
            signs[labels.index(label)] = 1 if sign == "+" else -1
    return SignedRotationSystem(rot, tuple(signs))


def format_cog(c: Cog) -> str:
    """Round-trip text form using the stored edge labels."""
    parts = []
    for seq in c.vertices:
        parts.append("(" + " ".join(c.edge_labels[h // 2] for h in seq) + ")")
    return "".join(parts)


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def cog_components(c: Cog):
    """Vertex index sets of the connected components."""
    uf = _UnionFind(c.n_vertices)
    where = {}
    for v, seq in enumerate(c.vertices):
        for h in seq:
            where[h] = v
    for e in range(c.n_edges):
        uf.union(where[2 * e], where[2 * e + 1])
    comps = {}
    for v in range(c.n_vertices):
        comps.setdefault(uf.find(v), []).append(v)
    return sorted(comps.values())


def is_connected(c: Cog) -> bool:
    return len(cog_components(c)) == 1


# ---------------------------------------------------------------------------
# canonical form of a cog
# ---------------------------------------------------------------------------

def _linearizations(seq):
    """All 2d directed readings of an undirected cyclic sequence."""
    d = len(seq)
    fwd = tuple(seq)
    bwd = tuple(reversed(seq))
    out = set()
    for i in range(d):
        out.add(fwd[i:] + fwd[:i])
        out.add(bwd[i:] + bwd[:i])
    return out


def _component_candidates(cog, comp, half_vertex, start, lin0):
    """Yield candidate serializations for one start vertex and linearization.

    Vertices are emitted in discovery order; edges get labels 1,2,... in
    order of first appearance; each discovered vertex is read anchored at
    its discovery half-edge, in either direction (branching).
    """
    n = len(comp)

    def rec(order, lins, rows, edge_label, next_label, idx):
        if idx == len(order):
            if len(order) == n:
                yield tuple(rows)
            return
        v = order[idx]
        for lin in lins[idx]:
            new_order = list(order)
            new_edge_label = dict(edge_label)
            nl = next_label
            row = []
            discovered = set(new_order)
            anchors = []
            for h in lin:
                e = h // 2
                if e not in new_edge_label:
                    new_edge_label[e] = nl
                    nl += 1
                row.append(new_edge_label[e])
                w = half_vertex[h ^ 1]
                if w not in discovered:
                    discovered.add(w)
                    new_order.append(w)
                    anchors.append((w, h ^ 1))
            new_lins = list(lins) + [None] * len(anchors)
            for w, anchor in anchors:
                seq = cog.vertices[w]
                i = seq.index(anchor)
                fwd = seq[i:] + seq[:i]
                bwd = tuple(reversed(seq))
                j = bwd.index(anchor)
                rev = bwd[j:] + bwd[:j]
                pos = new_order.index(w)
                new_lins[pos] = {fwd, rev}
            yield from rec(new_order, new_lins, rows + [tuple(row)],
                           new_edge_label, nl, idx + 1)

    yield from rec([start], [{lin0}], [], {}, 1, 0)


@functools.lru_cache(maxsize=None)
def _component_canonical(cog, comp):
    if len(comp) == 1 and not cog.vertices[comp[0]]:
        return ((),)
    half_vertex = {h: v for v in comp for h in cog.vertices[v]}
    best = None
    for start in comp:
        for lin0 in _linearizations(cog.vertices[start]):
            for cand in _component_candidates(cog, comp, half_vertex, start, lin0):
                if best is None or cand < best:
                    best = cand
    return best


@functools.lru_cache(maxsize=None)
def canonical_key(c: Cog):
    """Nested-tuple canonical form; equal keys iff isomorphic cogs."""
    pieces = sorted(_component_canonical(c, tuple(comp)) for comp in cog_components(c))
    # renumber edge labels globally, in reading order over the sorted pieces
    out = []
    offset = 0
    for piece in pieces:
        rows = tuple(tuple(label + offset for label in row) for row in piece)
        out.append(rows)
        offset += sum(len(row) for row in piece) // 2
    return tuple(out)


def canonical_form(c: Cog) -> str:
    """Canonical string: equal iff the cogs are isomorphic."""
    return "".join(
        "(" + " ".join(str(l) for l in row) + ")"
        for piece in canonical_key(c) for row in piece)


def is_isomorphic(a: Cog, b: Cog) -> bool:
    return canonical_key(a) == canonical_key(b)


def canonical_cog(c: Cog) -> Cog:
    """Relabelled representative whose text form equals canonical_form(c)."""
    return parse_cog(canonical_form(c))


# ---------------------------------------------------------------------------
# gecs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _GecBase:
    """Shared structure: vertices 0..n-1, e-edge matching, v-edge multiset.

    ``e_edges`` and ``v_edges`` hold (u, v) pairs with u <= v; v-loops are
    (u, u); e-edges are never loops.  ``free_loops`` counts vertexless
    circles; each is one component.  ``e_labels`` names the e-edges.
    """

    n_vertices: int
    e_edges: tuple
    v_edges: tuple
    free_loops: int = 0
    e_labels: tuple = ()

    def __post_init__(self):
        norm = lambda pairs: tuple(tuple(sorted(p)) for p in pairs)
        object.__setattr__(self, "e_edges", norm(self.e_edges))
        object.__setattr__(self, "v_edges", norm(self.v_edges))
        if not self.e_labels:
            object.__setattr__(
                self, "e_labels", tuple(str(i + 1) for i in range(len(self.e_edges))))
        object.__setattr__(self, "e_labels", tuple(str(l) for l in self.e_labels))
        if len(self.e_labels) != len(self.e_edges):
            raise CogError("need one label per e-edge")
        if len(set(self.e_labels)) != len(self.e_labels):
            raise CogError("duplicate e-edge labels")
        if self.free_loops < 0:
            raise CogError("negative free loop count")
        for u, v in self.e_edges + self.v_edges:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise CogError("edge endpoint out of range")
        ends = [u for p in self.e_edges for u in p]
        if len(ends) != len(set(ends)):
            raise CogError("e-edges must form a matching")
        if any(u == v for u, v in self.e_edges):
            raise CogError("e-edges cannot be loops")

    def e_degree(self):
        deg = [0] * self.n_vertices
        for u, v in self.e_edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def v_degree(self):
        deg = [0] * self.n_vertices
        for u, v in self.v_edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def e_index(self, label):
        try:
            return self.e_labels.index(str(label))
        except ValueError:
            raise CogError("unknown e-edge label %r" % (label,)) from None

    def k(self) -> int:
        """Number of components, free loops included."""
        uf = _UnionFind(self.n_vertices)
        for u, v in self.e_edges + self.v_edges:
            uf.union(u, v)
        roots = {uf.find(v) for v in range(self.n_vertices)}
        return len(roots) + self.free_loops

    def k_v(self) -> int:
        """Number of v-components (e-edges ignored), free loops included."""
        uf = _UnionFind(self.n_vertices)
        for u, v in self.v_edges:
            uf.union(u, v)
        roots = {uf.find(v) for v in range(self.n_vertices)}
        return len(roots) + self.free_loops


class GeneralisedGec(_GecBase):
    """e-edges form a matching; v-edges a subgraph of maximum degree 2."""

    def __post_init__(self):
        super().__post_init__()
        if any(d > 2 for d in self.v_degree()):
            raise CogError("v-edges must have maximum degree 2")


class Gec(GeneralisedGec):
    """Cubic graph with perfect matching: 1 e-half-edge and 2 v-half-edges everywhere."""

    def __post_init__(self):
        super().__post_init__()
        ed, vd = self.e_degree(), self.v_degree()
        for v in range(self.n_vertices):
            if ed[v] != 1 or vd[v] != 2:
                raise CogError("gec vertex %d is not cubic-with-matching" % v)


class PointedGec(_GecBase):
    """Vertices of degree 3 (matched) or 4 (pointed, no e-edge)."""

    def __post_init__(self):
        super().__post_init__()
        ed, vd = self.e_degree(), self.v_degree()
        for v in range(self.n_vertices):
            if not ((ed[v], vd[v]) == (1, 2) or (ed[v], vd[v]) == (0, 4)):
                raise CogError("pointed-gec vertex %d has bad degrees" % v)

    def pointed_vertices(self):
        ed = self.e_degree()
        return tuple(v for v in range(self.n_vertices) if ed[v] == 0)


def as_pointed(g) -> PointedGec:
    """View a gec (or pointed-gec) as a PointedGec."""
    if isinstance(g, PointedGec):
        return g
    return PointedGec(g.n_vertices, g.e_edges, g.v_edges, g.free_loops, g.e_labels)


def as_generalised(g) -> GeneralisedGec:
    if isinstance(g, GeneralisedGec):
        return g
    return GeneralisedGec(g.n_vertices, g.e_edges, g.v_edges, g.free_loops, g.e_labels)


def _compact(n_vertices, keep, e_edges, v_edges, free_loops, e_labels):
    """Renumber the kept vertices densely and rebuild the field tuple."""
    keep = sorted(keep)
    remap = {old: new for new, old in enumerate(keep)}
    e = tuple((remap[u], remap[v]) for u, v in e_edges)
    v = tuple((remap[a], remap[b]) for a, b in v_edges)
    return len(keep), e, v, free_loops, tuple(e_labels)


def delete_e_edge(g: GeneralisedGec, label) -> GeneralisedGec:
    """Remove the e-edge only; endpoints survive."""
    i = g.e_index(label)
    return GeneralisedGec(
        g.n_vertices,
        g.e_edges[:i] + g.e_edges[i + 1:],
        g.v_edges,
        g.free_loops,
        g.e_labels[:i] + g.e_labels[i + 1:])


def extract_e_edge(g: GeneralisedGec, label) -> GeneralisedGec:
    """Remove the e-edge together with both endpoints and their v-edges."""
    i = g.e_index(label)
    u, v = g.e_edges[i]
    keep = [w for w in range(g.n_vertices) if w not in (u, v)]
    v_edges = [p for p in g.v_edges if u not in p and v not in p]
    e_edges = g.e_edges[:i] + g.e_edges[i + 1:]
    labels = g.e_labels[:i] + g.e_labels[i + 1:]
    return GeneralisedGec(*_compact(g.n_vertices, keep, e_edges, v_edges,
                                    g.free_loops, labels))


def cog_to_gec(c: Cog) -> Gec:
    """Blow each cog vertex up into a v-cycle; isolated vertices become free loops.

    A degree-1 vertex becomes a v-loop on one gec vertex and a degree-2
    vertex a double v-edge, so the result is always genuinely cubic.
    """
    gid = {}
    v_edges = []
    free = 0
    nv = 0
    for seq in c.vertices:
        d = len(seq)
        if d == 0:
            free += 1
            continue
        ids = []
        for h in seq:
            gid[h] = nv
            ids.append(nv)
            nv += 1
        if d == 1:
            v_edges.append((ids[0], ids[0]))
        elif d == 2:
            v_edges.append((ids[0], ids[1]))
            v_edges.append((ids[0], ids[1]))
        else:
            for i in range(d):
                v_edges.append((ids[i], ids[(i + 1) % d]))
    e_edges = tuple((gid[2 * e], gid[2 * e + 1]) for e in range(c.n_edges))
    return Gec(nv, e_edges, tuple(v_edges), free, c.edge_labels)


def _v_cycles(g):
    """The v-cycles of a gec as vertex lists in traversal order."""
    incident = [[] for _ in range(g.n_vertices)]
    for i, (u, v) in enumerate(g.v_edges):
        incident[u].append(i)
        if v != u:
            incident[v].append(i)
        else:
            incident[u].append(i)
    cycles = []
    seen_vertex = [False] * g.n_vertices
    for start in range(g.n_vertices):
        if seen_vertex[start]:
            continue
        cycle = [start]
        seen_vertex[start] = True
        first = min(incident[start])
        u, v = g.v_edges[first]
        if u == v:  # v-loop: cycle of length 1
            cycles.append(cycle)
            continue
        prev_edge = first
        cur = v if u == start else u
        while cur != start:
            cycle.append(cur)
            seen_vertex[cur] = True
            nxt = next(i for i in incident[cur] if i != prev_edge)
            a, b = g.v_edges[nxt]
            cur = b if a == cur else a
            prev_edge = nxt
        cycles.append(cycle)
    return cycles


def gec_to_cog(g: Gec) -> Cog:
    """Contract the v-cycles of a gec back to cog vertices."""
    side = {}
    for j, (u, v) in enumerate(g.e_edges):
        side[u] = 2 * j
        side[v] = 2 * j + 1
    vertices = [tuple(side[w] for w in cycle) for cycle in _v_cycles(g)]
    vertices.extend(() for _ in range(g.free_loops))
    return Cog(tuple(vertices), g.e_labels)


# ---------------------------------------------------------------------------
# canonical form of (pointed) gecs
# ---------------------------------------------------------------------------

def _gec_refine(g):
    """Stable vertex partition by iterated neighbourhood refinement."""
    ed, vd = g.e_degree(), g.v_degree()
    loops = [0] * g.n_vertices
    for u, v in g.v_edges:
        if u == v:
            loops[u] += 1
    adj = [[] for _ in range(g.n_vertices)]
    for u, v in g.e_edges:
        adj[u].append(("e", v))
        adj[v].append(("e", u))
    for u, v in g.v_edges:
        adj[u].append(("v", v))
        if u != v:
            adj[v].append(("v", u))
    key = [(ed[v], vd[v], loops[v]) for v in range(g.n_vertices)]
    cls = _keys_to_ids(key)
    while True:
        key = [
            (cls[v], tuple(sorted((t, cls[w]) for t, w in adj[v])))
            for v in range(g.n_vertices)
        ]
        new = _keys_to_ids(key)
        if new == cls:
            return cls
        cls = new


def _keys_to_ids(keys):
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def gec_canonical_key(g):
    """Canonical hashable key for gecs and pointed-gecs (labels ignored).

    Brute-force minimum serialization over vertex orders compatible with
    the refined partition; fine at desk scale.
    """
    n = g.n_vertices
    cls = _gec_refine(g)
    groups = {}
    for v in range(n):
        groups.setdefault(cls[v], []).append(v)
    blocks = [groups[c] for c in sorted(groups)]
    best = None
    for parts in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [v for part in parts for v in part]
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        e = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.e_edges))
        ve = tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.v_edges))
        cand = (n, e, ve)
        if best is None or cand < best:
            best = cand
    return best + (g.free_loops,)


def gec_isomorphic(a, b) -> bool:
    return gec_canonical_key(a) == gec_canonical_key(b)


class GecSum:
    """Formal Z-linear combination of pointed-gecs.

    Terms are keyed by ``gec_canonical_key`` so that isomorphic summands
    merge; zero-coefficient terms are dropped.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        self._terms = {}
        for coeff, g in terms:
            self._add(coeff, g)

    def _add(self, coeff, g):
        key = gec_canonical_key(g)
        if key in self._terms:
            new = self._terms[key][0] + coeff
            if new:
                self._terms[key] = (new, self._terms[key][1])
            else:
                del self._terms[key]
        elif coeff:
            self._terms[key] = (coeff, g)

    def terms(self):
        """(coefficient, representative) pairs in canonical key order."""
        return [self._terms[k] for k in sorted(self._terms)]

    def __add__(self, other):
        if not isinstance(other, GecSum):
            return NotImplemented
        out = GecSum()
        for key, (coeff, g) in self._terms.items():
            out._add(coeff, g)
        for key, (coeff, g) in other._terms.items():
            out._add(coeff, g)
        return out

    def scale(self, c):
        out = GecSum()
        for coeff, g in self._terms.values():
            out._add(coeff * c, g)
        return out

    def __eq__(self, other):
        if not isinstance(other, GecSum):
            return NotImplemented
        return ({k: c for k, (c, _) in self._terms.items()}
                == {k: c for k, (c, _) in other._terms.items()})

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return "GecSum(%d terms)" % len(self._terms)

"""Boundary tracing of signed rotation systems, Euler genus, and genus ranges.

A signed rotation system describes a cellular embedding: glue a disc to
each traced boundary walk.  Tracing uses the standard two-sided automaton
on states (half-edge, mode): departing along ``h`` in mode ``m``, cross
to the partner, flip the mode iff the edge sign is -, then turn to the
rotation successor (mode +) or predecessor (mode -).  Orbits of this map
come in mirror pairs, one pair per face; ``trace_boundaries`` reports one
walk per face.  A worked trace is in docs/formats.md.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import (Cog, CogError, RotationSystem, SignedRotationSystem,
                    cog_components, is_connected, underlying_cog,
                    vertex_reversal)


@dataclass(frozen=True)
class FaceTrace:
    """One closed walk per face; each walk is a tuple of (half_edge, mode) states.

    Isolated vertices contribute an empty walk (the boundary of a lone
    vertex disc).  ``b`` equals ``len(boundary_walks)``.
    """

    boundary_walks: tuple

    @property
    def b(self):
        return len(self.boundary_walks)


def _state_map(s: SignedRotationSystem):
    rot = s.rotation
    where = {}
    for v, seq in enumerate(rot.vertices):
        for i, h in enumerate(seq):
            where[h] = (v, i)

    def step(state):
        h, m = state
        h2 = h ^ 1
        if s.signs[h // 2] < 0:
            m = -m
        v, i = where[h2]
        seq = rot.vertices[v]
        d = len(seq)
        return (seq[(i + 1) % d] if m > 0 else seq[(i - 1) % d], m)

    return step


def trace_boundaries(s: SignedRotationSystem) -> FaceTrace:
    """Deterministic face walks of the embedding described by ``s``."""
    step = _state_map(s)
    states = [(h, m) for h in range(2 * s.n_edges) for m in (1, -1)]
    unseen = set(states)
    walks = []
    for start in states:
        if start not in unseen:
            continue
        walk = []
        cur = start
        while True:
            walk.append(cur)
            unseen.discard(cur)
            cur = step(cur)
            if cur == start:
                break
        walks.append(walk)
    # orbits come in mirror pairs; keep one walk per face.  Reversing the
    # traversal "depart along h in mode m" gives "depart along the partner
    # in mode -m*sign" (the mode flip happens mid-edge when the sign is -).
    mirror_of = {}
    for i, walk in enumerate(walks):
        key = frozenset(walk)
        mirror = frozenset((h ^ 1, -m * s.signs[h // 2]) for h, m in walk)
        mirror_of[key] = (i, mirror)
    kept = []
    seen = set()
    for i, walk in enumerate(walks):
        key = frozenset(walk)
        if key in seen:
            continue
        seen.add(key)
        seen.add(mirror_of[key][1])
        j = min(range(len(walk)), key=lambda t: walk[t])
        kept.append(tuple(walk[j:] + walk[:j]))
    for seq in s.rotation.vertices:
        if not seq:
            kept.append(())
    return FaceTrace(tuple(sorted(kept)))


def euler_genus(s: SignedRotationSystem) -> int:
    """2k - v + e - f for the embedding described by the system."""
    c = underlying_cog(s)
    k = len(cog_components(c))
    f = trace_boundaries(s).b
    return 2 * k - c.n_vertices + c.n_edges - f


def is_orientable(s: SignedRotationSystem) -> bool:
    """True iff the signature is switching-equivalent to all-plus."""
    rot = s.rotation
    where = {}
    for v, seq in enumerate(rot.vertices):
        for h in seq:
            where[h] = v
    adj = [[] for _ in range(rot.n_vertices)]
    for e in range(rot.n_edges):
        u, w = where[2 * e], where[2 * e + 1]
        if u == w:
            if s.signs[e] < 0:  # a negative loop is a negative cycle
                return False
        else:
            adj[u].append((w, s.signs[e]))
            adj[w].append((u, s.signs[e]))
    pot = [0] * rot.n_vertices
    for root in range(rot.n_vertices):
        if pot[root]:
            continue
        pot[root] = 1
        stack = [root]
        while stack:
            u = stack.pop()
            for w, sign in adj[u]:
                if pot[w] == 0:
                    pot[w] = pot[u] * sign
                    stack.append(w)
                elif pot[w] != pot[u] * sign:
                    return False
    return True


_SWEEP_LIMIT = 24  # |V| + |E| cap for the exhaustive genus sweeps


def _check_sweepable(c: Cog):
    if not is_connected(c):
        raise CogError("genus ranges are defined for connected cogs only")
    if c.n_vertices + c.n_edges > _SWEEP_LIMIT:
        raise CogError(
            "genus sweep needs 2^|V| or 2^|E| embeddings; refusing |V|+|E| > %d"
            % _SWEEP_LIMIT)


def genus_range(c: Cog, kind="euler"):
    """Sorted genus set over all cellular embeddings with underlying cog c.

    kind='orientable': orientable genus over the 2^|V| vertex reversals of
    one rotation representative, all signs +.  kind='euler': Euler genus
    over all 2^|E| signatures on a fixed representative (every embedding
    of the cog appears there, by flip-normalising the rotation).
    kind='nonorientable' restricts the Euler sweep to nonorientable
    signatures.
    """
    _check_sweepable(c)
    rep = RotationSystem(c.vertices, c.edge_labels)
    out = set()
    if kind == "orientable":
        for mask in range(2 ** c.n_vertices):
            r = rep
            for v in range(c.n_vertices):
                if mask >> v & 1:
                    r = vertex_reversal(r, v)
            eg = euler_genus(SignedRotationSystem(r, (1,) * c.n_edges))
            if eg % 2:
                raise AssertionError("odd Euler genus for an all-plus system")
            out.add(eg // 2)
    elif kind in ("euler", "nonorientable"):
        for mask in range(2 ** c.n_edges):
            signs = tuple(-1 if mask >> e & 1 else 1 for e in range(c.n_edges))
            s = SignedRotationSystem(rep, signs)
            if kind == "nonorientable" and is_orientable(s):
                continue
            out.add(euler_genus(s))
    else:
        raise CogError("unknown genus kind %r" % (kind,))
    return sorted(out)

"""Shared test utilities: independent oracles and generators.

Everything here is deliberately written from scratch (no reuse of the
library's canonical forms or recursions) so the tests compare two
independent routes to the same answer.
"""

import itertools

from cogpoly.model import Cog, RotationSystem, SignedRotationSystem
from cogpoly.yamada import Multigraph

# The connected-cogs-on-3-edges table as printed in the source it was
# transcribed from.  Its 25 entries name only 19 distinct isomorphism
# classes: the 3- and 4-vertex rows repeat cogs (e.g. "(1)(23)(123)" and
# "(123)(1)(23)" are the same groups reordered).
TABLE1_ROWS = {
    1: ["(121323)", "(121233)", "(122133)", "(112233)", "(123123)"],
    2: ["(11223)(3)", "(12213)(3)", "(12123)(3)", "(123)(123)",
        "(12)(1233)", "(12)(1323)", "(112)(233)"],
    3: ["(12)(123)(3)", "(1)(23)(123)", "(112)(3)(23)", "(123)(1)(23)",
        "(1)(1232)(3)", "(1)(1223)(3)", "(1)(12)(233)", "(12)(133)(2)",
        "(12)(13)(23)"],
    4: ["(1)(2)(123)(3)", "(1)(23)(12)(3)", "(1)(2)(23)(13)",
        "(1)(12)(3)(23)"],
}
TABLE1 = [entry for row in TABLE1_ROWS.values() for entry in row]


def linearizations(seq):
    out = set()
    fwd, bwd = tuple(seq), tuple(reversed(seq))
    for i in range(max(len(seq), 1)):
        out.add(fwd[i:] + fwd[:i])
        out.add(bwd[i:] + bwd[:i])
    return sorted(out)


def brute_cog_isomorphic(c1: Cog, c2: Cog) -> bool:
    """Isomorphism by exhaustive search over vertex bijections and
    rotations/reflections; independent of canonical_form."""
    if c1.n_edges != c2.n_edges:
        return False
    if sorted(map(len, c1.vertices)) != sorted(map(len, c2.vertices)):
        return False
    n = c1.n_vertices
    for perm in itertools.permutations(range(n)):
        if any(len(c1.vertices[v]) != len(c2.vertices[perm[v]]) for v in range(n)):
            continue
        for choice in itertools.product(
                *(linearizations(c2.vertices[perm[v]]) for v in range(n))):
            hmap = {}
            for v in range(n):
                for h1, h2 in zip(c1.vertices[v], choice[v]):
                    hmap[h1] = h2
            if all(hmap[2 * e] ^ 1 == hmap[2 * e + 1] for e in range(c1.n_edges)):
                return True
    return False


def underlying_graph_key(c: Cog):
    """Canonical key of the underlying multigraph (cyclic orders forgotten)."""
    where = {}
    for v, seq in enumerate(c.vertices):
        for h in seq:
            where[h] = v
    best = None
    for perm in itertools.permutations(range(c.n_vertices)):
        edges = sorted(
            tuple(sorted((perm[where[2 * e]], perm[where[2 * e + 1]])))
            for e in range(c.n_edges))
        cand = (c.n_vertices, tuple(edges))
        if best is None or cand < best:
            best = cand
    return best


def random_srs(rng, max_edges=6):
    n_edges = rng.randrange(1, max_edges + 1)
    n_vertices = rng.randrange(1, 5)
    halves = list(range(2 * n_edges))
    rng.shuffle(halves)
    cuts = sorted(rng.randrange(2 * n_edges + 1) for _ in range(n_vertices - 1))
    vertices, prev = [], 0
    for cut in cuts + [2 * n_edges]:
        vertices.append(tuple(halves[prev:cut]))
        prev = cut
    rot = RotationSystem(tuple(vertices),
                         tuple(str(i + 1) for i in range(n_edges)))
    signs = tuple(rng.choice((1, -1)) for _ in range(n_edges))
    return SignedRotationSystem(rot, signs)


def connected_multigraphs(max_edges):
    """All connected multigraphs (loops allowed) with at most max_edges
    edges, one representative per shape, generated exhaustively.

    Vertices must be introduced in increasing order along the sorted edge
    list, which bounds the duplicates per isomorphism class; duplicates
    are harmless for oracle checks.
    """
    yield Multigraph(1, ())
    for e in range(1, max_edges + 1):
        for v in range(1, e + 2):
            pairs = [(i, j) for i in range(v) for j in range(i, v)]
            for combo in itertools.combinations_with_replacement(pairs, e):
                flat = [x for p in combo for x in p]
                first = []
                for x in flat:
                    if x not in first:
                        first.append(x)
                if first != list(range(v)):
                    continue
                g = Multigraph(v, combo)
                if g.k() == 1:
                    yield g

"""Exhaustive generation of cogs with a given number of edges, up to isomorphism.

Generation is brute force: all set partitions of the 2n labelled
half-edges into vertex groups, all undirected cyclic orders per group,
deduplicated through the canonical form.  The edge guard keeps this at
desk scale.  Cogs with isolated vertices form unbounded families (any
number of isolated vertices can be added), so when they are requested
the enumeration includes at most one.
"""

from __future__ import annotations

import itertools

from .model import (Cog, CogError, canonical_form, canonical_key, cog_to_gec,
                    is_connected, parse_cog)

MAX_EDGES = 4


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _undirected_cyclic_orders(block):
    block = sorted(block)
    if len(block) <= 2:
        yield tuple(block)
        return
    b0, rest = block[0], block[1:]
    for perm in itertools.permutations(rest):
        seq = (b0,) + perm
        rev = (b0,) + tuple(reversed(perm))
        if seq <= rev:
            yield seq


def enumerate_cogs(edges, connected_only=False, no_isolated=True):
    """All cogs with the given edge count, as canonical representatives.

    With ``no_isolated=False`` cogs carrying one isolated vertex are
    included as well (one is enough: further isolated vertices only
    repeat it).  Guarded at MAX_EDGES: generation is exponential.
    """
    if edges < 0:
        raise CogError("edge count must be non-negative")
    if edges > MAX_EDGES:
        raise CogError(
            "enumeration is exponential; %d edges exceeds the guard of %d"
            % (edges, MAX_EDGES))
    labels = tuple(str(i + 1) for i in range(edges))
    seen = {}

    def consider(vertices):
        c = Cog(vertices, labels)
        if connected_only and not is_connected(c):
            return
        if no_isolated and c.isolated_count():
            return
        seen.setdefault(canonical_key(c), c)

    for part in _set_partitions(list(range(2 * edges))):
        for arrangement in itertools.product(
                *(_undirected_cyclic_orders(b) for b in part)):
            consider(tuple(arrangement))
            if not no_isolated:
                consider(tuple(arrangement) + ((),))
    out = [parse_cog(canonical_form(c)) for c in seen.values()]
    out.sort(key=canonical_form)
    return out


def census_report(edges, invariant, connected_only=True, no_isolated=True):
    """Rows (canonical form, invariant value, group id) for the census.

    Cogs sharing an invariant value share a group id; the report is what
    the separation studies grep through.
    """
    from .saturation import saturation_cog
    from .transition import transition_recursive
    from .yamada import invariant_Y

    def value(c):
        if invariant == "sat":
            return saturation_cog(c).to_string()
        if invariant == "trans":
            return transition_recursive(cog_to_gec(c)).to_string()
        if invariant == "yamadaY":
            return str(invariant_Y(c, drawings=1, seed=0))
        raise CogError("unknown invariant %r" % (invariant,))

    cogs = enumerate_cogs(edges, connected_only, no_isolated)
    rows = [(canonical_form(c), value(c)) for c in cogs]
    groups = {v: i for i, v in enumerate(sorted({v for _, v in rows}))}
    return [(form, v, groups[v]) for form, v in rows]

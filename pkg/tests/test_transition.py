import itertools
import random

import pytest

from cogpoly.model import (CogError, GecSum, PointedGec, RotationSystem,
                           SignedRotationSystem, as_pointed, cog_to_gec,
                           gec_canonical_key, parse_cog, partial_petrial)
from cogpoly.poly import MultiPoly
from cogpoly.transition import (contract_e, contract_sum, k_valuation_sum,
                                splice, splice_sum, split, split_sum,
                                topological_transition, transition_recursive,
                                transition_statesum)
from conftest import census

ALPHA, BETA, GAMMA, T = (MultiPoly.var(n) for n in ("alpha", "beta", "gamma", "t"))

LOOP_GEC = cog_to_gec(parse_cog("(1 1)"))
THETA_GEC = cog_to_gec(parse_cog("(1 2 3)(1 2 3)"))
GOLDEN_LOOP_Q = ALPHA * T * T + (ALPHA + BETA + GAMMA) * T


def test_split_splice_on_triple_parallel():
    # the one-loop gec is e plus two parallel v-edges: the triple-parallel case
    assert split(LOOP_GEC, "1").free_loops == 1
    assert split(LOOP_GEC, "1").n_vertices == 0
    two, one = splice(LOOP_GEC, "1").summands
    assert {two.free_loops, one.free_loops} == {1, 2}


def test_split_splice_two_loops_case():
    # "(1)(1)": the e-edge joins two v-loops
    g = cog_to_gec(parse_cog("(1)(1)"))
    s = split(g, "1")
    assert s.n_vertices == 0 and s.free_loops == 2
    a, b = splice(g, "1").summands
    assert a == b and a.free_loops == 1


def test_split_splice_one_loop_case():
    # e-edge joining a v-loop vertex to a doubled-v-edge vertex
    g = cog_to_gec(parse_cog("(1)(1 2)(2)"))
    e = "1"
    a, b = splice(g, e).summands
    assert a == b  # the paper's G' + G'
    s = split(g, e)
    assert s.free_loops == a.free_loops + 1
    assert gec_canonical_key(PointedGec(a.n_vertices, a.e_edges, a.v_edges,
                                        a.free_loops + 1, a.e_labels)) == \
        gec_canonical_key(s)


def test_split_theta_gives_two_dipole():
    # generic (four distinct neighbours) case: hand application of the
    # reconnection turns the theta gec into the gec of (1 2)(1 2)
    out = split(THETA_GEC, "1")
    want = cog_to_gec(parse_cog("(1 2)(1 2)"))
    assert gec_canonical_key(out) == gec_canonical_key(want)


def test_splice_theta_two_reconnections():
    a, b = splice(THETA_GEC, "1").summands
    assert gec_canonical_key(a) != gec_canonical_key(b)


def test_contract_examples():
    g = contract_e(LOOP_GEC, "1")
    assert g.n_vertices == 1 and g.pointed_vertices() == (0,)
    assert sorted(g.v_edges) == [(0, 0), (0, 0)]
    assert g.k() == 1
    h = contract_e(THETA_GEC, "2")
    assert len(h.pointed_vertices()) == 1 and h.n_vertices == 5


def test_contract_commutes():
    a = contract_e(contract_e(THETA_GEC, "1"), "3")
    b = contract_e(contract_e(THETA_GEC, "3"), "1")
    assert gec_canonical_key(a) == gec_canonical_key(b)


def test_operation_commutation_as_gec_sums():
    rng = random.Random(3)
    ops = {"splice": splice_sum, "split": split_sum, "contract": contract_sum}

    def apply(op, s, label):
        out = GecSum()
        for coeff, rep in s.terms():
            out = out + op(rep, label).scale(coeff)
        return out

    gecs = [THETA_GEC, cog_to_gec(parse_cog("(1 3 2 3)(1 2)")),
            cog_to_gec(parse_cog("(1 1 2 2 3 3)"))]
    for g in gecs:
        e, f = rng.sample(g.e_labels, 2)
        for n1, n2 in itertools.product(ops, repeat=2):
            assert apply(ops[n2], ops[n1](g, e), f) == \
                apply(ops[n1], ops[n2](g, f), e), (n1, n2)


def test_recursive_golden_loop():
    assert transition_recursive(LOOP_GEC) == GOLDEN_LOOP_Q


def test_recursive_edgeless():
    g = PointedGec(0, (), (), free_loops=2)
    assert transition_recursive(g) == MultiPoly.var("t", 2)


def test_recursive_linear_over_sums():
    s = GecSum([(2, as_pointed(LOOP_GEC)), (1, PointedGec(0, (), (), 1))])
    assert transition_recursive(s) == 2 * GOLDEN_LOOP_Q + T


def test_statesum_golden_loop():
    assert transition_statesum(LOOP_GEC) == GOLDEN_LOOP_Q
    assert transition_statesum(PointedGec(0, (), ())) == MultiPoly.const(1)


def test_recursion_equals_statesum_and_order_free():
    for edges in (1, 2):
        for c in census(edges):
            g = cog_to_gec(c)
            q = transition_statesum(g)
            for order in itertools.permutations(g.e_labels):
                assert transition_recursive(g, order) == q


def test_kvaluation_golden():
    assert k_valuation_sum(LOOP_GEC, 2) == \
        6 * ALPHA + 2 * BETA + 2 * GAMMA
    assert k_valuation_sum(LOOP_GEC, 1) == 2 * ALPHA + BETA + GAMMA
    assert k_valuation_sum(PointedGec(0, (), ()), 3) == MultiPoly.const(1)
    with pytest.raises(CogError):
        k_valuation_sum(LOOP_GEC, 0)


def test_kvaluation_identity_including_pointed():
    pointed = contract_e(THETA_GEC, "1")
    for g in (LOOP_GEC, THETA_GEC, pointed, contract_e(LOOP_GEC, "1")):
        q = transition_recursive(g)
        for k in (1, 2, 3):
            assert k_valuation_sum(g, k) == q.substitute_int("t", k), k


def _srs(c, signs=None):
    rot = RotationSystem(c.vertices, c.edge_labels)
    return SignedRotationSystem(rot, signs or (1,) * c.n_edges)


def test_topological_transition_loops():
    plus = topological_transition(_srs(parse_cog("(1 1)")))
    assert plus == ALPHA * T * T + BETA * T + GAMMA * T
    minus = topological_transition(_srs(parse_cog("(1 1)"), (-1,)))
    assert minus == ALPHA * T + BETA * T + GAMMA * T * T


def test_petrial_bridge():
    # at gamma = alpha the topological polynomial is a cog invariant and
    # matches the gec recursion at gamma = 0
    for text in ("(1 1)", "(1 1 2 2)", "(1 2 1 2)", "(1 2 3)(1 2 3)"):
        c = parse_cog(text)
        want = transition_recursive(cog_to_gec(c)).substitute_int("gamma", 0)
        base = _srs(c)
        for mask in range(2 ** c.n_edges):
            labels = [l for i, l in enumerate(c.edge_labels) if mask >> i & 1]
            got = topological_transition(partial_petrial(base, labels))
            assert got.substitute_var("gamma", "alpha") == want, (text, mask)


def test_split_requires_e_edge():
    with pytest.raises(CogError):
        split(LOOP_GEC, "9")

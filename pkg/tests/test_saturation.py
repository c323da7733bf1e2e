import itertools

import pytest

from cogpoly.model import CogError, GeneralisedGec, cog_to_gec, parse_cog
from cogpoly.poly import MultiPoly
from cogpoly.saturation import (gec_minor, iota, saturation_cog, saturation_DX,
                                saturation_recursive, saturation_regular,
                                saturation_statesum, seg, seg_total)
from conftest import census

G1 = parse_cog("(1 2)(1 2 3 3)")
G2 = parse_cog("(1 2)(1 3 2 3)")


def mono(cx, cy):
    return MultiPoly.var("x", cx) * MultiPoly.var("y", cy)


def test_golden_values():
    m1 = mono(2, 0) + 3 * mono(2, 1) + mono(1, 2) + 2 * mono(2, 2) + mono(0, 3)
    m2 = mono(2, 0) + mono(3, 1) + 2 * mono(2, 1) + 3 * mono(2, 2) + mono(0, 3)
    assert saturation_recursive(cog_to_gec(G1)) == m1
    assert saturation_recursive(cog_to_gec(G2)) == m2
    assert saturation_cog(G2).to_string() == \
        "x^2 + 2*x^2*y + x^3*y + 3*x^2*y^2 + y^3"


def test_base_case_counts_all_components():
    g = GeneralisedGec(0, (), (), free_loops=3)
    assert saturation_recursive(g) == MultiPoly.var("x", 3)
    assert saturation_statesum(GeneralisedGec(0, (), ())) == MultiPoly.const(1)


def test_statesum_loop_by_hand():
    # A = {}: one v-2-cycle survives (x); A = {e}: everything gone (y)
    g = cog_to_gec(parse_cog("(1 1)"))
    assert saturation_statesum(g) == MultiPoly.var("x") + MultiPoly.var("y")


def test_seg_examples():
    c = parse_cog("(1 3 2 3)(1 2)")
    big = max(range(2), key=lambda v: len(c.vertices[v]))
    assert seg(c, big, []) == 0
    assert seg(c, big, ["1", "3"]) == 1   # positions 1,2,4 are cyclically one run
    assert seg(c, big, ["3"]) == 2        # two separated occurrences
    assert seg(c, big, ["1", "2", "3"]) == 1
    assert seg_total(c, ["1", "2", "3"]) == 2
    with pytest.raises(CogError):
        seg(c, 0, ["7"])
    with pytest.raises(CogError):
        seg(c, 9, [])


def test_isolated_vertex_counts():
    c = parse_cog("()")
    assert iota(c) == 1
    assert saturation_cog(c) == MultiPoly.var("x")


def test_order_independence_and_three_way_agreement():
    for edges in (1, 2):
        for c in census(edges):
            g = cog_to_gec(c)
            expected = saturation_cog(c)
            assert saturation_statesum(g) == expected
            for order in itertools.permutations(g.e_labels):
                assert saturation_recursive(g, order) == expected


def test_regular_three_theta():
    theta = parse_cog("(1 2 3)(1 2 3)")
    assert saturation_regular(theta, 3) == saturation_cog(theta)


def test_regular_four_bouquets():
    for text in ("(1 1 2 2)", "(1 2 1 2)"):
        c = parse_cog(text)
        assert saturation_regular(c, 4) == saturation_cog(c)


def test_regular_rejects_wrong_degree():
    with pytest.raises(CogError):
        saturation_regular(parse_cog("(1 1)"), 3)
    with pytest.raises(CogError):
        saturation_regular(parse_cog("(1 2 3)(1 2 3)"), 4)


def test_spanning_subgraph_generating_function():
    # x^n M(theta; 1/x, 1) counts edge subsets by number of degree-3 vertices
    theta = parse_cog("(1 2 3)(1 2 3)")
    m = saturation_cog(theta)
    counts = {}
    for exps, coeff in m.terms.items():
        ex = exps[0]
        counts[2 - ex] = counts.get(2 - ex, 0) + coeff  # n = 2 vertices
    brute = {}
    for r in range(4):
        for a in itertools.combinations(range(3), r):
            deg3 = 2 if len(a) == 3 else 0
            brute[deg3] = brute.get(deg3, 0) + 1
    assert counts == brute


def test_dx_examples():
    c = parse_cog("(1 1)")
    assert saturation_DX(c, ["1"], []) == MultiPoly.var("x")
    assert saturation_DX(c, [], []) == saturation_cog(c)
    with pytest.raises(CogError):
        saturation_DX(c, ["1"], ["1"])


def test_dx_base_case_is_monomial():
    c = parse_cog("(1 3 2 3)(1 2)")
    p = saturation_DX(c, ["1", "3"], ["2"])
    assert len(p.terms) == 1
    assert p == MultiPoly.var("x", seg_total(c, ["1", "3"]))


def test_dx_equals_gec_minor_statesum():
    c = parse_cog("(1 3 2 3)(1 2)")
    subsets = [[], ["1"], ["2"], ["3"], ["1", "2"]]
    for d_set in subsets:
        for x_set in subsets:
            if set(d_set) & set(x_set):
                continue
            assert saturation_DX(c, d_set, x_set) == \
                saturation_statesum(gec_minor(c, d_set, x_set))


def test_dx_recursion():
    c = parse_cog("(1 2)(1 2 3 3)")

    def rec(D, X):
        rest = [l for l in c.edge_labels if l not in D and l not in X]
        if not rest:
            return MultiPoly.var("x", seg_total(c, D) + iota(c))
        e = rest[0]
        return rec(D + [e], X) + MultiPoly.var("y") * rec(D, X + [e])

    assert rec([], []) == saturation_cog(c)


def test_isomorphism_invariance():
    a = parse_cog("(1 2 3 3)(1 2)")
    b = parse_cog("(3 3 2 1)(2 1)")
    assert saturation_cog(a) == saturation_cog(b)


def test_separation_of_the_example_pair():
    assert saturation_cog(G1) != saturation_cog(G2)

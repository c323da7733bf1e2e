import random
from fractions import Fraction

import pytest

from cogpoly.poly import SIGMA, LaurentPoly, MultiPoly


def mp(**powers):
    out = MultiPoly.const(1)
    for name, p in powers.items():
        out = out * MultiPoly.var(name, p)
    return out


def test_to_string_matches_worked_example_order():
    p = (mp(x=2) + 2 * mp(x=2, y=1) + mp(x=3, y=1)
         + 3 * mp(x=2, y=2) + mp(y=3))
    assert p.to_string() == "x^2 + 2*x^2*y + x^3*y + 3*x^2*y^2 + y^3"


def test_to_string_zero_constant_and_negative():
    assert MultiPoly.zero().to_string() == "0"
    assert MultiPoly.const(1).to_string() == "1"
    assert (MultiPoly.const(-2) + mp(x=1)).to_string() == "-2 + x"
    assert (mp(x=1) - mp(y=1)).to_string() == "x - y"


def test_add_cancels():
    x, y = MultiPoly.var("x"), MultiPoly.var("y")
    assert (x + y) + (-y) == x
    assert MultiPoly.zero() * (x + y) == MultiPoly.zero()


def test_sigma_squared():
    expected = LaurentPoly({2: 1, 1: 2, 0: 3, -1: 2, -2: 1})
    assert SIGMA * SIGMA == expected
    assert SIGMA.to_string() == "A^-1 + 1 + A"


def test_evaluate():
    assert SIGMA.evaluate(1) == 3
    assert SIGMA.evaluate(-1) == -1
    p = mp(x=2) + mp(y=3)
    assert p.evaluate({"x": 2, "y": 1}) == 5
    assert p.evaluate({"x": Fraction(1, 2), "y": 1}) == Fraction(5, 4)
    with pytest.raises(ValueError):
        p.evaluate({"x": 2})


def test_laurent_a_zero_guard():
    with pytest.raises(ZeroDivisionError):
        LaurentPoly.A(-1).evaluate(0)
    assert LaurentPoly.A(2).evaluate(0) == 0


def _random_multi(rng):
    terms = {}
    for _ in range(rng.randrange(4)):
        exps = [0] * 6
        for _ in range(rng.randrange(3)):
            exps[rng.randrange(6)] += rng.randrange(3)
        terms[tuple(exps)] = rng.randrange(-5, 6)
    return MultiPoly(terms)


def _random_laurent(rng):
    return LaurentPoly({rng.randrange(-4, 5): rng.randrange(-5, 6)
                        for _ in range(rng.randrange(4))})


def test_ring_laws_random():
    rng = random.Random(7)
    for _ in range(150):
        p, q, r = (_random_multi(rng) for _ in range(3))
        assert p + q == q + p
        assert p * q == q * p
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
    for _ in range(150):
        p, q = (_random_laurent(rng) for _ in range(2))
        assert p + q == q + p
        assert p * q == q * p


def test_evaluate_is_ring_homomorphism():
    rng = random.Random(11)
    names = ("x", "y", "alpha", "beta", "gamma", "t")
    for _ in range(60):
        p, q = _random_multi(rng), _random_multi(rng)
        assignment = {n: Fraction(rng.randrange(-3, 4), rng.randrange(1, 4))
                      for n in names}
        assert (p + q).evaluate(assignment) == p.evaluate(assignment) + q.evaluate(assignment)
        assert (p * q).evaluate(assignment) == p.evaluate(assignment) * q.evaluate(assignment)
    for _ in range(60):
        p, q = _random_laurent(rng), _random_laurent(rng)
        a = Fraction(rng.randrange(1, 5), rng.randrange(1, 5))
        assert (p * q).evaluate(a) == p.evaluate(a) * q.evaluate(a)


def test_substitutions():
    t, alpha, gamma = (MultiPoly.var(n) for n in ("t", "alpha", "gamma"))
    p = alpha * t * t + gamma * t
    assert p.substitute_int("t", 2) == 4 * alpha + 2 * gamma
    assert p.substitute_var("gamma", "alpha") == alpha * t * t + alpha * t


def test_normalized():
    p = LaurentPoly({-1: 1, 1: 2})
    n = p.normalized()
    assert n == LaurentPoly({0: -1, 2: -2})
    assert n.min_degree() == 0


def test_json_forms():
    p = 2 * mp(x=2, y=1) + mp(y=3)
    assert p.to_json() == [
        {"exponents": {"x": 2, "y": 1}, "coefficient": 2},
        {"exponents": {"y": 3}, "coefficient": 1},
    ]
    assert SIGMA.to_json() == [
        {"exponent": -1, "coefficient": 1},
        {"exponent": 0, "coefficient": 1},
        {"exponent": 1, "coefficient": 1},
    ]

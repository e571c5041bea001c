import random
from fractions import Fraction

import pytest

from nullgrid import (
    ArityMismatchError,
    FieldSpec,
    MultiPoly,
    PolyParseError,
    TermOrder,
    parse_poly,
)
from nullgrid.randgen import rand_element, rand_poly, rand_spec

F2 = FieldSpec.prime(2)
F5 = FieldSpec.prime(5)
Q = FieldSpec.rationals()


def test_arith_examples():
    x = parse_poly("x1", 2, Q)
    y = parse_poly("x2", 2, Q)
    assert (x + y) * (x - y) == parse_poly("x1^2 - x2^2", 2, Q)
    f = parse_poly("3*x1^2 + x2", 2, Q)
    assert f + MultiPoly.zero(2, Q) == f
    assert parse_poly("(x1+1)^2", 1, F2) == parse_poly("x1^2 + 1", 1, F2)


def test_eval_examples():
    f = parse_poly("x1*x2", 2, Q)
    assert f.evaluate([Q.element(2), Q.element(3)]).value == 6
    assert MultiPoly.zero(2, Q).evaluate([Q.element(9), Q.element(-1)]).is_zero()
    g = parse_poly("x1^2 - x1", 1, F5)
    assert g.evaluate([F5.element(3)]).value == 1
    with pytest.raises(ArityMismatchError):
        f.evaluate([Q.element(1)])


def test_shift_examples():
    f = parse_poly("x1^2", 1, F5)
    assert f.shift([F5.element(3)]) == parse_poly("x1^2 + x1 + 4", 1, F5)
    g = parse_poly("2*x1^3 - x2", 2, Q)
    assert g.shift([Q.zero, Q.zero]) == g
    a = Q.element(7)
    h = parse_poly("x1 - 7", 1, Q)
    assert h.shift([a]) == parse_poly("x1", 1, Q)


def test_shift_composition_random():
    rng = random.Random(101)
    for _ in range(40):
        spec = rand_spec(rng, rational_weight=0.3)
        n = rng.randint(1, 3)
        f = rand_poly(rng, spec, n, max_deg=5)
        s = [rand_element(rng, spec) for _ in range(n)]
        neg = [-x for x in s]
        assert f.shift(s).shift(neg) == f


def test_expansion_coefficient_examples():
    f = parse_poly("x1^2", 1, Q)
    coeffs = f.expansion_coefficients([Q.element(1)], (3,))
    assert {u[0]: c.value for u, c in coeffs.items()} == {0: 1, 1: 2, 2: 1}

    f5 = parse_poly("x1^2", 1, F5)
    coeffs = f5.expansion_coefficients([F5.element(3)], (2,))
    assert {u[0]: c.value for u, c in coeffs.items()} == {0: 4, 1: 1}

    # char 2: the first-order coefficient survives where the derivative dies
    f2 = parse_poly("x1^2", 1, F2)
    coeffs = f2.expansion_coefficients([F2.element(1)], (3,))
    assert {u[0]: c.value for u, c in coeffs.items()} == {0: 1, 1: 0, 2: 1}


def test_expansion_reconstruction_random():
    # with w above the per-variable degrees, the boxed expansion recovers f
    rng = random.Random(7)
    for _ in range(25):
        spec = rand_spec(rng, rational_weight=0.3)
        n = rng.randint(1, 2)
        f = rand_poly(rng, spec, n, max_deg=4)
        w = tuple((f.degree_in(i) or 0) + 1 for i in range(n))
        s = [rand_element(rng, spec) for _ in range(n)]
        coeffs = f.expansion_coefficients(s, w)
        total = MultiPoly.zero(n, spec)
        for u, c in coeffs.items():
            if c.is_zero():
                continue
            term = MultiPoly.constant(n, spec, c)
            for i, e in enumerate(u):
                base = MultiPoly.variable(n, spec, i) - MultiPoly.constant(n, spec, s[i])
                term = term * base**e
            total = total + term
        assert total == f


def test_high_order_coefficients_are_shift_invariant():
    rng = random.Random(13)
    for _ in range(25):
        spec = rand_spec(rng, rational_weight=0.3)
        n = rng.randint(1, 2)
        f = rand_poly(rng, spec, n, max_deg=4)
        deg = f.total_degree() or 0
        box = tuple(deg + 2 for _ in range(n))
        s1 = [rand_element(rng, spec) for _ in range(n)]
        s2 = [rand_element(rng, spec) for _ in range(n)]
        c1 = f.expansion_coefficients(s1, box)
        c2 = f.expansion_coefficients(s2, box)
        for u in c1:
            if sum(u) >= deg:
                assert c1[u] == c2[u]


def test_leading_monomial_examples():
    f = parse_poly("x1 + x2^2", 2, Q)
    assert f.leading_monomial(TermOrder("lex", (0, 1))) == (1, 0)
    assert f.leading_monomial(TermOrder("grlex", (0, 1))) == (0, 2)
    assert f.leading_monomial(TermOrder("grevlex", (0, 1))) == (0, 2)
    mono = parse_poly("3*x1^2*x2", 2, Q)
    for kind in TermOrder.KINDS:
        assert mono.leading_monomial(TermOrder(kind, (0, 1))) == (2, 1)
    with pytest.raises(ValueError):
        MultiPoly.zero(2, Q).leading_monomial(TermOrder("lex", (0, 1)))


def test_grevlex_tiebreak():
    # among degree-2 monomials in two variables: y^2 < x*y < x^2
    order = TermOrder("grevlex", (0, 1))
    ranked = sorted([(2, 0), (1, 1), (0, 2)], key=order.key)
    assert ranked == [(0, 2), (1, 1), (2, 0)]


def test_leading_monomial_multiplicative():
    rng = random.Random(23)
    for _ in range(30):
        spec = rand_spec(rng, rational_weight=0.3)
        n = rng.randint(1, 3)
        f = rand_poly(rng, spec, n, max_deg=3)
        g = rand_poly(rng, spec, n, max_deg=3)
        order = TermOrder(rng.choice(TermOrder.KINDS), tuple(rng.sample(range(n), n)))
        lm_f = f.leading_monomial(order)
        lm_g = g.leading_monomial(order)
        assert (f * g).leading_monomial(order) == tuple(a + b for a, b in zip(lm_f, lm_g))


def test_coefficient_access():
    f = parse_poly("2*x1*x2", 2, F5)
    assert f.coefficient((1, 1)).value == 2
    assert f.coefficient((3, 0)).is_zero()


def test_degree_sentinels():
    z = MultiPoly.zero(2, Q)
    assert z.total_degree() is None
    assert z.degree_in(0) is None
    assert MultiPoly.constant(2, Q, 5).total_degree() == 0


def test_parse_examples():
    f = parse_poly("x1^2 - x1", 1, F5)
    assert {u: c.value for u, c in f.terms.items()} == {(2,): 1, (1,): 4}
    assert parse_poly("(x1+x2)^2", 2, F2) == parse_poly("x1^2 + x2^2", 2, F2)
    with pytest.raises(PolyParseError):
        parse_poly("", 1, F5)


def test_parse_errors_carry_positions():
    with pytest.raises(PolyParseError) as err:
        parse_poly("x1 + x9", 3, F5)
    assert err.value.position == 5
    with pytest.raises(PolyParseError):
        parse_poly("2x1", 1, F5)  # implicit multiplication is not allowed
    with pytest.raises(PolyParseError):
        parse_poly("x1^(2)", 1, F5)
    with pytest.raises(PolyParseError):
        parse_poly("x1^99999999", 1, F5)
    with pytest.raises(PolyParseError):
        parse_poly("1/2*x1", 1, F5)  # rational literals need the rational field
    with pytest.raises(PolyParseError):
        parse_poly("x1/2", 1, Q)  # '/' only joins integer literals


def test_parse_rational_literals():
    f = parse_poly("1/2*x1 - 3/4", 1, Q)
    assert f.coefficient((1,)).value == Fraction(1, 2)
    assert f.coefficient((0,)).value == Fraction(-3, 4)


def test_print_parse_round_trip_random():
    rng = random.Random(31)
    for _ in range(60):
        spec = rand_spec(rng, rational_weight=0.4)
        n = rng.randint(1, 3)
        f = rand_poly(rng, spec, n, max_deg=5)
        assert parse_poly(str(f), n, spec) == f
    assert parse_poly(str(MultiPoly.zero(2, Q)), 2, Q) == MultiPoly.zero(2, Q)


def test_divmod_univariate():
    f = parse_poly("x1^3*x2 + x1*x2 + x2^2", 2, Q)
    d = parse_poly("x1^2 - 1", 2, Q)
    q, r = f.divmod_univariate(d, 0)
    assert q * d + r == f
    assert (r.degree_in(0) or 0) < 2
    exact = parse_poly("(x1^2 - 1)*(x1*x2 + 5)", 2, Q)
    q2, r2 = exact.divmod_univariate(d, 0)
    assert r2.is_zero() and q2 == parse_poly("x1*x2 + 5", 2, Q)
    with pytest.raises(ValueError):
        f.divmod_univariate(parse_poly("x1*x2", 2, Q), 0)

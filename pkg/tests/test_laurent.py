import itertools
import json

import pytest

from qsnake.laurent import (LaurentFraction, LaurentPoly, ONE, Q, ZERO,
                            laurent_gcd)


def lp(min_deg, *coeffs):
    return LaurentPoly(min_deg, coeffs)


# a small pool of polynomials for exhaustive ring-axiom sweeps
POOL = [
    ZERO, ONE, Q, lp(-1, 1), lp(0, 1, 1), lp(0, -2, 0, 3),
    lp(-2, 1, 0, -1), lp(1, 2, 1), lp(-1, 1, 2, 1, 1),
]


def test_addition_examples():
    assert lp(0, 1, 1) + lp(1, 1, 1) == lp(0, 1, 2, 1)
    p = lp(-1, 3, 0, 2)
    assert p + ZERO == p
    assert lp(-1, 1, 1) + lp(-1, -1) == ONE  # cancellation retrims min_deg


def test_multiplication_examples():
    assert lp(0, 1, 1) * lp(0, 1, 1) == lp(0, 1, 2, 1)
    # the monomial shift relating a matching statistic and a numerator
    assert LaurentPoly.monomial(-1) * lp(0, 1, 2, 1, 1) == lp(-1, 1, 2, 1, 1)
    p = lp(2, 5, -1)
    assert p * ONE == p
    assert p * ZERO == ZERO


def test_ring_axioms_exhaustive():
    for a, b in itertools.product(POOL, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(POOL, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_degree_multiplicativity():
    for a, b in itertools.product(POOL, repeat=2):
        if a.is_zero() or b.is_zero():
            continue
        p = a * b
        assert p.min_deg == a.min_deg + b.min_deg
        assert p.top_deg == a.top_deg + b.top_deg


def test_eval_at_one_is_ring_hom():
    assert lp(0, 1, 2, 1, 1).eval_at_one() == 5
    assert lp(0, 1, 1, 1).eval_at_one() == 3
    assert ZERO.eval_at_one() == 0
    for a, b in itertools.product(POOL, repeat=2):
        assert (a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one()
        assert (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one()


def test_mirror():
    assert lp(0, 1, 2).mirror(1) == lp(0, 2, 1)
    # a palindromic polynomial is its own mirror at its degree
    assert lp(0, 1, 1, 1).mirror(2) == lp(0, 1, 1, 1)
    assert ZERO.mirror(5) == ZERO
    for a in POOL:
        for d in range(-2, 4):
            if a.is_zero() or (a.min_deg >= 0 and a.top_deg <= d):
                assert a.mirror(d).mirror(d) == a


def test_div_exact():
    assert lp(0, 1, 2, 1).div_exact(lp(0, 1, 1)) == lp(0, 1, 1)
    assert lp(3, 1).div_exact(lp(1, 1)) == lp(2, 1)
    r52 = lp(0, 1, 2, 1, 1)
    assert (Q * r52).div_exact(Q) == r52
    with pytest.raises(ValueError):
        lp(0, 1, 1, 1).div_exact(lp(0, 1, 1))
    with pytest.raises(ValueError):
        ONE.div_exact(ZERO)
    for a, b in itertools.product(POOL, repeat=2):
        if b.is_zero():
            continue
        assert (a * b).div_exact(b) == a


def test_pow_and_shift():
    assert (lp(0, 1, 1) ** 2) == lp(0, 1, 2, 1)
    assert (Q ** 5) == lp(5, 1)
    assert lp(0, 1, 1).shifted(-2) == lp(-2, 1, 1)


def test_canonical_form_and_equality():
    assert LaurentPoly(3, (0, 0)) == ZERO
    assert LaurentPoly(-2, (0, 1, 0)) == lp(-1, 1)
    assert hash(lp(0, 1, 1)) == hash(LaurentPoly(-1, (0, 1, 1, 0)))


def test_text_form():
    assert lp(-1, 1, 2, 1, 1).text() == "q^-1 + 2 + q + q^2"
    assert lp(0, -1, 0, 3).text() == "-1 + 3q^2"
    assert ZERO.text() == "0"
    assert lp(1, -2).text() == "-2q"


def test_json_round_trip():
    for a in POOL:
        blob = json.dumps(a.to_json())
        assert LaurentPoly.from_json(json.loads(blob)) == a


def test_gcd():
    a, b, g = lp(0, 1, 1), lp(0, 1, 2), lp(0, 1, 1, 1)
    assert laurent_gcd(a * g, b * g) == g
    assert laurent_gcd(a, b) == ONE
    # monomial factors are units and never appear in the gcd
    assert laurent_gcd(a.shifted(-3) * 2, a.shifted(5) * 4) == 2 * a
    assert laurent_gcd(ZERO, a) == a
    for p, r, s in itertools.product(POOL[3:], repeat=3):
        g = laurent_gcd(p * r, p * s)
        if p.is_zero() or (r.is_zero() and s.is_zero()):
            continue
        (p * r).div_exact(g)
        (p * s).div_exact(g)
        g.div_exact(laurent_gcd(p, ONE))  # p's polynomial part divides g
        assert not g.is_zero()


def test_fraction_normalization():
    f = LaurentFraction(ONE, lp(1, -1, -1))  # 1 / (-q - q^2)
    assert f.den == lp(0, 1, 1)
    assert f.num == lp(-1, -1)
    g = LaurentFraction(lp(0, 1, 2, 1), lp(0, 1, 1)).reduced()
    assert g.num == lp(0, 1, 1) and g.den == ONE


def test_fraction_arithmetic():
    half = LaurentFraction(ONE, lp(0, 2))
    third = LaurentFraction(ONE, lp(0, 3))
    s = (half + third).reduced()
    assert s.num == lp(0, 5) and s.den == lp(0, 6)
    x = LaurentFraction(lp(0, 1, 1), lp(0, 1, 0, 1))
    assert (x / x).reduced().num == ONE
    assert (x * x.reciprocal()).reduced().den == ONE


def test_fraction_infinity():
    inf = LaurentFraction.infinity()
    assert inf.is_infinity()
    with pytest.raises(ZeroDivisionError):
        LaurentFraction(lp(0, 2), ZERO)
    with pytest.raises(ZeroDivisionError):
        LaurentFraction(ONE, lp(0, 2)).scaled(ZERO).reciprocal()

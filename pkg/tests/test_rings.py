"""Exact arithmetic domains: examples and ring axioms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shufflecalc.rings import (
    LaurentPolyQ,
    PolyQT,
    RatFuncQT,
    eval_q1,
    laurent_arith,
    polyqt_divexact,
    polyqt_gcd,
    qint,
    ratfunc_arith,
)


def L(terms):
    return LaurentPolyQ(terms)


def test_qint_examples():
    assert qint(0) == LaurentPolyQ.zero()
    assert qint(1) == LaurentPolyQ.one()
    assert qint(3) == L({0: 1, 1: 1, 2: 1})
    with pytest.raises(ValueError):
        qint(-1)


def test_laurent_arith_examples():
    assert laurent_arith(L({-1: 1}), L({1: 1}), "mul") == LaurentPolyQ.one()
    assert laurent_arith(L({0: 1, 1: 1}), L({0: 1, 1: -1}), "mul") == L({0: 1, 2: -1})
    assert laurent_arith(L({2: 1}), L({2: -1}), "add") == LaurentPolyQ.zero()


def test_eval_q1_examples():
    assert eval_q1(L({0: 1, 1: 1, 2: 1})) == 3
    assert eval_q1(L({-1: 1, 1: -1})) == 0
    # the hook weight 4 + q^3 + q^4 counts six objects at q=1
    assert eval_q1(L({0: 4, 3: 1, 4: 1})) == 6


def test_ratfunc_examples():
    q_over_t = RatFuncQT(PolyQT.monomial(1, 0), PolyQT.monomial(0, 1))
    t_over_q = RatFuncQT(PolyQT.monomial(0, 1), PolyQT.monomial(1, 0))
    assert ratfunc_arith(q_over_t, t_over_q, "mul") == RatFuncQT.one()

    ratio = RatFuncQT(PolyQT({(2, 0): 1, (0, 2): -1}),
                      PolyQT({(1, 0): 1, (0, 1): -1}))
    assert ratio == RatFuncQT.from_polyqt(PolyQT({(1, 0): 1, (0, 1): 1}))

    x = RatFuncQT(PolyQT.one(), PolyQT({(1, 0): 1, (0, 1): -1}))
    y = RatFuncQT(PolyQT.one(), PolyQT({(1, 0): -1, (0, 1): 1}))
    assert ratfunc_arith(x, y, "add").is_zero()


def test_ratfunc_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ratfunc_arith(RatFuncQT.one(), RatFuncQT.zero(), "div")
    with pytest.raises(ZeroDivisionError):
        RatFuncQT(PolyQT.one(), PolyQT.zero())


def test_canonical_form_idempotent():
    num = PolyQT({(2, 1): 6, (1, 1): -6})
    den = PolyQT({(1, 0): -4, (0, 0): 4})
    r = RatFuncQT(num, den)
    again = RatFuncQT(r.num, r.den)
    assert r.num == again.num and r.den == again.den
    # denominator sign convention: grlex leading coefficient positive
    lead_key, lead = r.den.leading_grlex()
    assert lead > 0


def test_laurent_serialization_roundtrip():
    a = L({-2: Fraction(3, 4), 0: 1, 5: Fraction(-7, 2)})
    data = a.to_json()
    assert data == [[-2, "3/4"], [0, "1/1"], [5, "-7/2"]]
    assert LaurentPolyQ.from_json(data) == a


def test_ratfunc_serialization_roundtrip():
    r = RatFuncQT(PolyQT({(1, 0): 1, (0, 0): 1}), PolyQT({(0, 1): 2, (0, 0): 1}))
    data = r.to_json()
    assert set(data) == {"num", "den"}
    assert RatFuncQT.from_json(data) == r


# ---------------------------------------------------------------------------
# property suites
# ---------------------------------------------------------------------------

fractions_st = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 5))


@st.composite
def laurents(draw):
    n = draw(st.integers(0, 4))
    return LaurentPolyQ({draw(st.integers(-5, 5)): draw(fractions_st)
                         for _ in range(n)})


@st.composite
def polyqts(draw):
    n = draw(st.integers(0, 4))
    return PolyQT({(draw(st.integers(0, 4)), draw(st.integers(0, 4))):
                   draw(st.integers(-5, 5)) for _ in range(n)})


@st.composite
def ratfuncs(draw):
    num = draw(polyqts())
    den = draw(polyqts().filter(lambda p: not p.is_zero()))
    return RatFuncQT(num, den)


@settings(max_examples=120, deadline=None)
@given(laurents(), laurents(), laurents())
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=120, deadline=None)
@given(laurents(), laurents())
def test_eval_q1_is_multiplicative(a, b):
    assert eval_q1(a * b) == eval_q1(a) * eval_q1(b)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8))
def test_qint_product_at_q1(m, n):
    assert eval_q1(qint(m) * qint(n)) == m * n


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_ratfunc_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(ratfuncs(), ratfuncs())
def test_ratfunc_div_mul_inverse(a, b):
    if not b.is_zero():
        assert (a / b) * b == a


@settings(max_examples=60, deadline=None)
@given(polyqts(), polyqts())
def test_gcd_divides_both(a, b):
    if a.is_zero() and b.is_zero():
        return
    g = polyqt_gcd(a, b)
    if not a.is_zero():
        polyqt_divexact(a, g)
    if not b.is_zero():
        polyqt_divexact(b, g)


@settings(max_examples=60, deadline=None)
@given(polyqts(), polyqts(), polyqts())
def test_common_factor_cancels(a, b, c):
    if b.is_zero() or c.is_zero():
        return
    assert RatFuncQT(a * c, b * c) == RatFuncQT(a, b)

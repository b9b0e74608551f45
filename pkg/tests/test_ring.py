import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from minorsum import (
    ZZ,
    QQ,
    InexactDivisionError,
    Poly,
    PolynomialRing,
    RingMismatchError,
    ScalarParseError,
)
from minorsum.ring import format_poly

R3 = PolynomialRing(("x", "y", "z"))
X, Y, Z = R3.gens()


def rand_poly(rng, ring, max_terms=3, max_exp=3, bound=9):
    nvars = len(ring.vars)
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        c = rng.randint(-bound, bound)
        if c:
            terms[exps] = c
    return Poly(ring.vars, terms)


@st.composite
def polys(draw, max_terms=4, max_exp=3, bound=8):
    terms = draw(
        st.dictionaries(
            st.tuples(*([st.integers(0, max_exp)] * 3)),
            st.integers(-bound, bound).filter(bool),
            max_size=max_terms,
        )
    )
    return Poly(R3.vars, terms)


# -- integers ------------------------------------------------------------


def test_integer_parse_and_format():
    assert ZZ.parse("12") == 12
    assert ZZ.parse(" -3 ") == -3
    assert ZZ.format(-7) == "-7"
    for bad in ("1.5", "x", "3/4", "", "1 2"):
        with pytest.raises(ScalarParseError):
            ZZ.parse(bad)


def test_integer_coerce_rejects_non_ints():
    with pytest.raises(RingMismatchError):
        ZZ.coerce(True)
    with pytest.raises(RingMismatchError):
        ZZ.coerce(1.0)
    assert ZZ.coerce(5) == 5


def test_integer_exact_divide():
    assert ZZ.exact_divide(6, 3) == 2
    assert ZZ.exact_divide(-6, 3) == -2
    with pytest.raises(InexactDivisionError):
        ZZ.exact_divide(7, 3)
    with pytest.raises(InexactDivisionError):
        ZZ.exact_divide(1, 0)


def test_integer_axioms_1000_triples():
    rng = random.Random(101)
    for _ in range(1000):
        x, y, z = (rng.randint(-999, 999) for _ in range(3))
        assert ZZ.add(ZZ.add(x, y), z) == ZZ.add(x, ZZ.add(y, z))
        assert ZZ.mul(ZZ.mul(x, y), z) == ZZ.mul(x, ZZ.mul(y, z))
        assert ZZ.mul(x, ZZ.add(y, z)) == ZZ.add(ZZ.mul(x, y), ZZ.mul(x, z))
        assert ZZ.add(x, ZZ.neg(x)) == ZZ.zero
        assert ZZ.mul(x, ZZ.one) == x


# -- rationals -----------------------------------------------------------


def test_rational_parse_and_format():
    assert QQ.parse("3/4") == Fraction(3, 4)
    assert QQ.parse("-2") == Fraction(-2)
    assert QQ.format(Fraction(3, 4)) == "3/4"
    assert QQ.format(Fraction(8, 4)) == "2"
    with pytest.raises(ScalarParseError):
        QQ.parse("1/0")
    with pytest.raises(ScalarParseError):
        QQ.parse("0.5")


def test_rational_exact_divide_is_total_off_zero():
    assert QQ.exact_divide(Fraction(1, 2), Fraction(3)) == Fraction(1, 6)
    with pytest.raises(InexactDivisionError):
        QQ.exact_divide(Fraction(1), Fraction(0))


def test_rational_axioms_1000_triples():
    rng = random.Random(202)
    def r():
        return Fraction(rng.randint(-99, 99), rng.randint(1, 30))
    for _ in range(1000):
        x, y, z = r(), r(), r()
        assert QQ.add(QQ.add(x, y), z) == QQ.add(x, QQ.add(y, z))
        assert QQ.mul(x, QQ.add(y, z)) == QQ.add(QQ.mul(x, y), QQ.mul(x, z))
        assert QQ.mul(QQ.mul(x, y), z) == QQ.mul(x, QQ.mul(y, z))
        if not QQ.is_zero(x):
            assert QQ.mul(QQ.exact_divide(y, x), x) == y


# -- polynomials ---------------------------------------------------------


def test_poly_ring_rejects_bad_variables():
    with pytest.raises(ValueError):
        PolynomialRing(("x", "x"))
    with pytest.raises(ValueError):
        PolynomialRing(("2bad",))


def test_poly_canonical_drops_zero_terms():
    p = Poly(R3.vars, {(1, 0, 0): 0, (0, 1, 0): 2})
    assert p.terms == {(0, 1, 0): 2}
    assert Poly(R3.vars, {}).is_zero()
    assert Poly.constant(R3.vars, 0).is_zero()


def test_poly_format_conventions():
    assert format_poly(R3.zero) == "0"
    assert R3.format(X**2 * Y - 5) == "x^2*y - 5"
    assert R3.format(-X) == "-x"
    assert R3.format(X + 1) == "x + 1"
    assert R3.format(3 * X * Y**2 - 2 * Z) == "3*x*y^2 - 2*z"
    # graded-lex display order, highest total degree first
    assert R3.format(X + Y**3) == "y^3 + x"


def test_poly_parse_syntax():
    assert R3.parse("x^2*y - 5") == X**2 * Y - 5
    assert R3.parse("x**2") == X**2
    assert R3.parse("-(x - 1)*(x + 1)") == 1 - X**2
    assert R3.parse("2") == R3.from_int(2)
    for bad in ("w + 1", "x +", "x ^ y", "1.5", "x$", ""):
        with pytest.raises(ScalarParseError):
            R3.parse(bad)


def test_poly_coerce_and_mismatch():
    other = PolynomialRing(("a", "b"))
    with pytest.raises(RingMismatchError):
        R3.coerce(other.gen("a"))
    with pytest.raises(RingMismatchError):
        R3.coerce(True)
    with pytest.raises(RingMismatchError):
        X + other.gen("a")
    assert R3.coerce(4) == Poly.constant(R3.vars, 4)


def test_poly_axioms_1000_triples():
    rng = random.Random(303)
    for _ in range(1000):
        p, q, r = (rand_poly(rng, R3) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert p + (-p) == R3.zero
        assert p * R3.one == p


@settings(max_examples=200, deadline=None)
@given(polys())
def test_poly_parse_format_round_trip(p):
    assert R3.parse(R3.format(p)) == p


@settings(max_examples=200, deadline=None)
@given(polys(), polys())
def test_poly_exact_division_recovers_factor(p, q):
    if q.is_zero():
        with pytest.raises(InexactDivisionError):
            (p * q).exact_div(q)
    else:
        assert (p * q).exact_div(q) == p


def test_exact_div_fast_paths():
    p = X**2 * Y + 3 * X
    assert p.exact_div(R3.one) is p
    assert p.exact_div(X) == X * Y + 3
    assert (2 * p).exact_div(R3.from_int(2)) == p
    with pytest.raises(InexactDivisionError):
        p.exact_div(R3.from_int(2))
    with pytest.raises(InexactDivisionError):
        p.exact_div(Y)


def test_exact_div_general_quotient():
    assert (X**2 - 1).exact_div(X - 1) == X + 1
    num = (X + Y) * (X - Y) * (Z + 3)
    assert num.exact_div((X + Y) * (Z + 3)) == X - Y
    with pytest.raises(InexactDivisionError):
        (X**2 + 1).exact_div(X - 1)
    with pytest.raises(InexactDivisionError):
        X.exact_div(R3.zero)


def test_poly_misc_accessors():
    p = X**2 * Y - 4
    assert p.total_degree() == 3
    assert R3.zero.total_degree() == -1
    assert (X**3).leading() == ((3, 0, 0), 1)
    assert R3.gen("y") == Y
    with pytest.raises(ValueError):
        R3.gen("nope")


def test_ring_json_tags():
    assert ZZ.to_json_tag() == "int"
    assert QQ.to_json_tag() == "rat"
    assert R3.to_json_tag() == {"poly": ["x", "y", "z"]}

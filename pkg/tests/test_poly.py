import pytest
from hypothesis import given, strategies as st

from sqalg.errors import NotDivisible, NotHomogeneous, ParseError, RingMismatch, UnknownGenerator
from sqalg.poly import Generator, PolyRing, grevlex_key

from conftest import polys

R = PolyRing([Generator("w2", 2, 0), Generator("w3", 3, 1)])
R4 = PolyRing([Generator("a'", 2), Generator("a''", 2), Generator("b'", 3, 1), Generator("b''", 3, 1)])


def test_parse_and_print_canonical():
    p = R.parse("w3*w2 + w2^2*w2 + 1 + w3*w2")
    assert str(p) == "w2^3 + 1"
    assert str(R.zero()) == "0"
    assert str(R.one()) == "1"
    assert str(R.parse("(w2 + w3)^2")) == "w3^2 + w2^2"


def test_grevlex_print_order_matches_weighted_degree():
    p = R.parse("w2^3 + w3^2")
    # equal degree 6: grevlex puts the monomial with smaller last exponent first
    assert str(p) == "w2^3 + w3^2"
    assert grevlex_key((2, 3), (3, 0)) > grevlex_key((2, 3), (0, 2))


def test_primes_in_names():
    p = R4.parse("a'^3*a''^2*b' + a'*a''^4*b'")
    assert p.degree() == 13
    assert str(p) == "a'^3*a''^2*b' + a'*a''^4*b'"


def test_characteristic_two():
    x = R.gen("w2")
    assert x + x == 0
    assert (x + 1) ** 2 == x ** 2 + 1
    assert -x == x
    with pytest.raises(ParseError):
        R.parse("2*w2")
    assert R.parse("w2 - w2") == 0


def test_gradings():
    p = R.parse("w2^3 + w3^2")
    assert p.degree() == 6
    assert set(p.weight_components()) == {0, 2}
    q = R.parse("w2 + w3")
    assert not q.is_homogeneous()
    with pytest.raises(NotHomogeneous):
        q.degree()
    assert R.zero().degree() is None
    assert set(q.degree_components()) == {2, 3}


def test_divide_exact():
    p = R.parse("w2^2*w3^2 + w3^4")
    assert p.divide_exact(R.parse("w3^2")) == R.parse("w2^2 + w3^2")
    with pytest.raises(NotDivisible):
        p.divide_exact(R.parse("w2"))


def test_parse_errors_report_position():
    with pytest.raises(UnknownGenerator) as e:
        R.parse("w2 + w7")
    assert e.value.pos == 5
    with pytest.raises(ParseError) as e:
        R.parse("w2 + ")
    assert e.value.pos >= 4
    with pytest.raises(ParseError):
        R.parse("w2^")
    with pytest.raises(ParseError):
        R.parse("(w2")


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        R.gen("w2") + R4.gen("a'")


def test_rings_compare_by_value():
    assert PolyRing([Generator("w2", 2, 0), Generator("w3", 3, 1)]) == R


def test_bad_generator_names():
    with pytest.raises(ValueError):
        Generator("2x", 1)
    with pytest.raises(ValueError):
        Generator("x", 0)


def test_monomials_enumeration():
    assert len(R.monomials(12)) == 3  # w2^6, w2^3 w3^2, w3^4
    assert R.monomials(1) == []
    assert [R4.format_monomial(m) for m in R4.monomials(5, weight=1)] == ["a'*b'", "a''*b'", "a'*b''", "a''*b''"]


def test_frobenius():
    p = R.parse("w2 + w3")
    assert p.frobenius(2) == p ** 4


@given(polys(R, 9), polys(R, 9), polys(R, 9))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + R.zero() == a
    assert a * R.one() == a


@given(polys(R, 9), polys(R, 9))
def test_freshman_dream(a, b):
    assert (a + b) ** 2 == a ** 2 + b ** 2


@given(polys(R4, 8))
def test_print_parse_roundtrip(p):
    assert R4.parse(str(p)) == p


@given(polys(R, 8), st.integers(0, 4), st.integers(0, 4))
def test_divide_roundtrip(a, i, j):
    m = R.monomial((i, j))
    assert (a * m).divide_exact(m) == a
    assert (a * m).divide_exact((i, j)) == a


@given(polys(R, 8), polys(R, 8))
def test_degree_additive(a, b):
    for x in a.degree_components().values():
        for y in b.degree_components().values():
            if x * y:
                assert (x * y).degree() == x.degree() + y.degree()


@given(st.integers(0, 6))
def test_power_matches_repeated_product(k):
    p = R4.parse("a' + b'*a'' + 1")
    q = R4.one()
    for _ in range(k):
        q = q * p
    assert p ** k == q

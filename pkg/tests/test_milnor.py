import pytest
from hypothesis import given, strategies as st

from sqalg import milnor
from sqalg.builtins import get_presentation
from sqalg.errors import BoundExceeded, NotDivisible
from sqalg.milnor import a_matrix, d_operator, f_polys, g_poly, q_derivation, q_recursive

from conftest import homogeneous

BSO3 = get_presentation("BSO3")
BZ = get_presentation("BZ2xBZ2")
N = get_presentation("N")


def test_displayed_values(bso3):
    p = bso3.parse
    assert q_derivation(1, p("w2"), bso3) == p("w2*w3")
    assert q_derivation(0, q_derivation(1, p("w2"), bso3), bso3) == p("w3^2")
    assert q_derivation(1, p("w3"), bso3) == p("w3^2")
    assert q_derivation(2, p("w2"), bso3) == p("w2^3*w3 + w3^3")


def test_degree_shift(bso3):
    w2 = bso3.gen("w2")
    for m in range(6):
        qx = q_derivation(m, w2, bso3)
        assert qx.degree() == 2 + (1 << (m + 1)) - 1


def test_q_on_line_classes(bz):
    for m in range(8):
        for s in (bz.gen("s1"), bz.gen("s2")):
            assert q_derivation(m, s, bz) == s ** (1 << (m + 1))


def test_bound_guard(bso3):
    with pytest.raises(BoundExceeded):
        q_derivation(13, bso3.gen("w2"), bso3)
    with pytest.raises(BoundExceeded, match="cap"):
        q_derivation(13, bso3.gen("w2"), bso3, max_m=13)  # degree 16385
    s1 = BZ.gen("s1")
    assert q_derivation(13, s1, BZ, max_m=13) == s1 ** 16384
    with pytest.raises(ValueError):
        q_recursive(-1, bso3.gen("w2"), bso3)


def test_a_matrix_top_rows(bso3):
    p = bso3.parse
    assert f_polys(2) == (p("w2^2"), p("w3^2"))
    assert f_polys(3) == (p("w2^6 + w3^4"), p("w2^4*w3^2"))
    assert f_polys(4) == (p("w2^14 + w2^8*w3^4 + w2^2*w3^8"), p("w2^12*w3^2 + w3^10"))
    assert a_matrix(3) == milnor.a_factor(3) @ milnor.a_factor(2)


def test_g_values(bso3):
    p = bso3.parse
    assert g_poly(2) == 1
    assert g_poly(3) == p("w2^4")
    assert g_poly(4) == p("w2^12 + w3^8")


def test_g_divisibility_failure(bso3):
    with pytest.raises(NotDivisible):
        bso3.parse("w2 + w3^2").divide_exact(bso3.parse("w3"))


@pytest.mark.parametrize("m", range(2, 13))
def test_q_m_q_1_w2(m, bso3):
    w2, w3 = bso3.gen("w2"), bso3.gen("w3")
    g = g_poly(m)
    assert g.only_even_exponents()
    assert q_derivation(m, q_derivation(1, w2, bso3), bso3) == g * w3 ** 4


def test_d_operator_examples(bz):
    p = bz.parse
    assert d_operator(2, p("s1"), bz) == 0
    assert d_operator(3, p("s1^2*s2 + s1*s2^2"), bz) == 0
    assert d_operator(2, p("s1"), bz, method="recursive") == 0
    with pytest.raises(ValueError):
        d_operator(1, p("s1"), bz)


@given(homogeneous(N.ring, 20), st.integers(0, 6))
def test_recursive_matches_derivation(x, m):
    assert q_recursive(m, x, N) == q_derivation(m, x, N)


@given(homogeneous(BSO3.ring, 20), st.integers(0, 6))
def test_recursive_matches_derivation_bso3(x, m):
    assert q_recursive(m, x, BSO3) == q_derivation(m, x, BSO3)


@given(homogeneous(N.ring, 16), st.integers(0, 4), st.integers(0, 4))
def test_square_zero_and_commutation(x, m, n):
    qm = lambda y: q_derivation(m, y, N)
    qn = lambda y: q_derivation(n, y, N)
    assert qm(qm(x)) == 0
    assert qm(qn(x)) == qn(qm(x))


@given(homogeneous(BSO3.ring, 12), homogeneous(BSO3.ring, 12), st.integers(0, 5))
def test_leibniz(x, y, m):
    q = lambda z: q_recursive(m, z, BSO3)
    assert q(x * y) == q(x) * y + x * q(y)


@given(homogeneous(BZ.ring, 18), st.integers(2, 6))
def test_d_operator_vanishes(x, m):
    assert d_operator(m, x, BZ) == 0


@given(homogeneous(BSO3.ring, 16), st.integers(0, 5))
def test_naturality_under_restriction(x, m):
    from sqalg.builtins import builtin_homs

    bi = builtin_homs()["Bi"]
    assert bi(q_derivation(m, x, BSO3)) == q_derivation(m, bi(x), BZ)


@given(homogeneous(BSO3.ring, 16), st.integers(2, 6))
def test_recurrence(x, m):
    f1, f0 = f_polys(m)
    assert q_derivation(m, x, BSO3) == f1 * q_derivation(1, x, BSO3) + f0 * q_derivation(0, x, BSO3)


def test_q1_x13_vanishes_before_reduction(n_alg):
    x = n_alg.parse("w2'^3*w2''^2*w3' + w2'*w2''^4*w3'")
    assert q_derivation(1, x, n_alg) == 0

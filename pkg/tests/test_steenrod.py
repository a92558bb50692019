import json

import pytest
from hypothesis import given

from sqalg.builtins import builtin_presentations, get_presentation
from sqalg.errors import PresentationError
from sqalg.poly import Generator
from sqalg.steenrod import (
    AlgebraPresentation,
    RingHom,
    check_instability,
    check_sq1_sq1,
    check_sq_equivariance,
    identity_hom,
    presentation_from_json,
    tensor,
)

from conftest import homogeneous

BSO3 = get_presentation("BSO3")
BZ = get_presentation("BZ2xBZ2")
N = get_presentation("N")


def test_wu_values(bso3):
    p = bso3.parse
    assert bso3.sq(1, p("w2")) == p("w3")
    assert bso3.sq(2, p("w2")) == p("w2^2")
    assert bso3.sq(1, p("w3")) == 0
    assert bso3.sq(2, p("w3")) == p("w2*w3")
    assert bso3.sq(3, p("w3")) == p("w3^2")
    assert bso3.sq(3, p("w2*w3")) == 0
    assert bso3.sq(2, p("w2^2")) == p("w3^2")


def test_total_square(bso3):
    p = bso3.parse
    assert bso3.total_sq(p("w2")) == p("w2 + w3 + w2^2")
    assert bso3.total_sq(p("w3")) == p("w3 + w2*w3 + w3^2")


def test_bz_total_square(bz):
    s1 = bz.gen("s1")
    assert bz.total_sq(s1) == s1 + s1 ** 2
    # Sq^i s^k = binom(k, i) s^(k+i)
    assert bz.sq(2, s1 ** 3) == s1 ** 5
    assert bz.sq(2, s1 ** 5) == 0
    assert bz.sq(1, s1 ** 4) == 0


def test_sq_zero_and_out_of_range(bso3):
    x = bso3.parse("w2^2*w3")
    assert bso3.sq(0, x) == x
    assert bso3.sq(7, x) == x * x
    assert bso3.sq(8, x) == 0


def _cartan_oracle(alg, i, x):
    """Degree component of the product of total squares of the generators."""
    out = alg.ring.zero()
    for mono in x.terms:
        t = alg.ring.one()
        for name, e in zip(alg.ring.names, mono):
            t = t * alg.total_sq(alg.gen(name)) ** e
        d = alg.ring.mono_degree(mono) + i
        out = out + t.degree_components().get(d, alg.ring.zero())
    return out


@given(homogeneous(N.ring, 14), homogeneous(N.ring, 14))
def test_cartan_formula(x, y):
    for i in range(0, 8):
        rhs = sum((N.sq(j, x) * N.sq(i - j, y) for j in range(i + 1)), N.ring.zero())
        assert N.sq(i, x * y) == rhs


@given(homogeneous(N.ring, 16))
def test_sq_matches_total_square_oracle(x):
    for i in range(0, 9):
        assert N.sq(i, x) == _cartan_oracle(N, i, x)


@given(homogeneous(BSO3.ring, 24))
def test_adem_relations_bso3(x):
    sq = BSO3.sq
    assert sq(1, sq(1, x)) == 0
    assert sq(1, sq(2, x)) == sq(3, x)
    assert sq(2, sq(2, x)) == sq(3, sq(1, x))
    assert sq(1, sq(4, x)) == sq(5, x)
    assert sq(2, sq(3, x)) == sq(5, x) + sq(4, sq(1, x))
    assert sq(3, sq(2, x)) == 0


@given(homogeneous(BZ.ring, 20))
def test_adem_relations_bz(x):
    sq = BZ.sq
    assert sq(2, sq(2, x)) == sq(3, sq(1, x))
    assert sq(1, sq(2, x)) == sq(3, x)


@given(homogeneous(BSO3.ring, 18), homogeneous(BSO3.ring, 18))
def test_total_square_multiplicative(x, y):
    assert BSO3.total_sq(x * y) == BSO3.total_sq(x) * BSO3.total_sq(y)


@given(homogeneous(BSO3.ring, 20))
def test_instability(x):
    if x:
        d = x.degree()
        assert BSO3.sq(d, x) == x * x
        assert BSO3.sq(d + 1, x) == 0


def test_builtins_pass_checks():
    for name, alg in builtin_presentations().items():
        assert alg.problems() == [], name
        assert check_instability(alg).ok
        assert check_sq1_sq1(alg, 14).ok, name


def test_bi_equivariance_through_degree_20(homs):
    res = check_sq_equivariance(homs["Bi"], 20)
    assert res.ok, res.failure
    assert res.checked > 100


def test_factor_inclusions_equivariant(homs):
    for name in ("Bpi1", "Bpi2", "Bpi3", "Bpi1_M", "Bpi2_M", "Bpi1_N", "Bpi2_N"):
        assert check_sq_equivariance(homs[name], 10).ok, name


def test_phi_values(homs, m_alg):
    phi = homs["phi"]
    assert phi(m_alg.parse("w3'")) == phi.target.parse("t1*w2'")
    assert phi(m_alg.parse("w2'*w3'' + w2''*w3'")) == 0
    assert check_sq_equivariance(phi, 10, ops=[1]).ok
    assert not check_sq_equivariance(phi, 4).ok  # Sq^2 is not respected


def test_identity_hom_equivariant(n_alg):
    assert check_sq_equivariance(identity_hom(n_alg), 8).ok


def test_equivariance_failure_reports_place(bso3, homs):
    bad = bso3.with_sq_entry("w2", 1, None)
    h = RingHom("Bi", bad, BZ, homs["Bi"].images, validate=False)
    res = check_sq_equivariance(h)
    assert not res.ok
    assert res.data == {"element": "w2", "i": 1}


def test_hom_validation():
    with pytest.raises(PresentationError):
        RingHom("bad", BSO3, BZ, {"w2": "s1", "w3": "s1^3"})
    with pytest.raises(PresentationError):
        RingHom("missing", BSO3, BZ, {"w2": "s1^2"})


def test_presentation_validation():
    g = [Generator("x", 2)]
    with pytest.raises(PresentationError):
        AlgebraPresentation("bad", g, {"x": [None, "x"]})  # Sq^1 x of the wrong degree
    with pytest.raises(PresentationError):
        AlgebraPresentation("bad", g, {"x": [None, None, None, "x^2"]})
    with pytest.raises(PresentationError):
        AlgebraPresentation("bad", g, {"y": []})
    with pytest.raises(PresentationError):
        AlgebraPresentation("bad", g, {}, relations=["x + x^2"])
    bad = AlgebraPresentation("bad", g, {"x": ["0"]}, validate=False)
    assert bad.problems()


def test_tensor_matches_builtin(bso3):
    m2 = tensor("T", [(bso3, {"w2": "w2'", "w3": "w3'"}), (bso3, {"w2": "w2''", "w3": "w3''"})],
                order=["w2'", "w2''", "w3'", "w3''"])
    m = get_presentation("M")
    assert m2.ring == m.ring
    for g in m.ring.names:
        assert m2.sq_table[g] == m.sq_table[g]


def test_json_roundtrip(tmp_path, n_alg):
    path = tmp_path / "n.json"
    path.write_text(json.dumps(n_alg.to_json()))
    back = presentation_from_json(path)
    assert back.ring == n_alg.ring
    assert back.sq_table == n_alg.sq_table
    assert back.relations == n_alg.relations


def test_json_sparse_map_form():
    alg = presentation_from_json(json.dumps({
        "name": "so3",
        "generators": [{"name": "w2", "degree": 2}, {"name": "w3", "degree": 3, "weight": 1}],
        "sq": {"w2": {"1": "w3"}, "w3": {"2": "w2*w3"}},
    }))
    assert alg.sq_table == BSO3.sq_table


def test_json_rejects_garbage():
    with pytest.raises(PresentationError):
        presentation_from_json('{"generators": [{"degree": 2}]}')
    with pytest.raises(PresentationError):
        presentation_from_json("[1, 2]")

import itertools

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from sqalg import linalg
from sqalg.builtins import builtin_homs, get_presentation
from sqalg.poly import Poly

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def bso3():
    return get_presentation("BSO3")


@pytest.fixture(scope="session")
def bz():
    return get_presentation("BZ2xBZ2")


@pytest.fixture(scope="session")
def m_alg():
    return get_presentation("M")


@pytest.fixture(scope="session")
def n_alg():
    return get_presentation("N")


@pytest.fixture(scope="session")
def cubed():
    return get_presentation("BSO3_cubed")


@pytest.fixture(scope="session")
def homs():
    return builtin_homs()


def homogeneous(ring, max_degree, min_degree=0):
    """Strategy: a random homogeneous polynomial (possibly zero) of degree in range."""

    @st.composite
    def build(draw):
        d = draw(st.integers(min_degree, max_degree))
        monos = ring.monomials(d)
        if not monos:
            return ring.zero()
        picks = draw(st.sets(st.sampled_from(monos), max_size=4))
        return Poly(ring, frozenset(picks))

    return build()


def polys(ring, max_degree):
    """Strategy: any polynomial with terms of degree at most ``max_degree``."""
    monos = [m for d in range(max_degree + 1) for m in ring.monomials(d)]
    return st.sets(st.sampled_from(monos), max_size=5).map(lambda s: Poly(ring, frozenset(s)))


def ideal_slice_contains(ring, gens, p):
    """Brute-force membership of a homogeneous ``p`` in the ideal, by linear algebra in one degree."""
    if not p:
        return True
    d = p.degree()
    monos = ring.monomials(d)
    col = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        for u in ring.monomials(d - g.degree()) if d >= g.degree() else []:
            rows.append(sum(1 << col[t] for t in (ring.monomial(u) * g).terms))
    basis = linalg.echelon(rows)
    return linalg.in_span(sum(1 << col[t] for t in p.terms), basis)


def all_monomial_polys(ring, max_degree):
    for d in range(max_degree + 1):
        for m in ring.monomials(d):
            yield ring.monomial(m)


def pairs(seq):
    return itertools.combinations(seq, 2)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])

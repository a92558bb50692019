import json

import pytest

from sqalg.builtins import builtin_presentations
from sqalg.verify import (
    CLAIMS,
    VerifyConfig,
    run_all,
    single_mutations,
    verify_qq1_factorization,
    verify_d_vanishing,
    verify_x13,
    x13_from_definition,
)


@pytest.fixture(scope="module")
def report():
    return run_all()


def test_default_run_passes(report):
    assert report.status == "pass", report.table()
    assert report.exit_code == 0
    assert len(report.entries) >= 12


def test_each_claim_once(report):
    assert report.ids() == list(CLAIMS)
    assert len(set(report.ids())) == len(report.ids())


def test_entries_carry_anchors(report):
    for e in report.entries:
        assert e.statement and e.formula, e.id
        assert e.status in ("pass", "fail", "skipped")


def test_json_shape_and_determinism(report):
    data = json.loads(report.to_json())
    assert set(data) == {"status", "claims"}
    assert set(data["claims"][0]) == {"id", "paper_ref", "quote", "params", "status", "witness", "ms"}
    again = run_all()
    assert again.to_json(timings=False) == report.to_json(timings=False)
    assert "ms" not in json.loads(report.to_json(timings=False))["claims"][0]


def test_table_lists_every_claim(report):
    table = report.table()
    for cid in CLAIMS:
        assert cid in table
    assert table.splitlines()[-1] == "overall: pass"


def test_q0_reported_without_assertion(report):
    e = report["x13-annihilated"]
    assert "Q_0 x13 = w2'^4*w3''^2 + w2'^2*w2''^2*w3''^2" in e.witness


def test_zero_degree_skips():
    r = run_all(VerifyConfig(max_degree=0))
    assert r.status == "skipped"
    assert r.exit_code == 4
    skipped = {e.id for e in r.entries if e.status == "skipped"}
    assert {"D-vanishing", "N-poincare-series", "regular-sequence", "M-injectivity"} <= skipped
    assert all(e.status != "fail" for e in r.entries)
    assert all(e.params.get("degree_cap") == 0 for e in r.entries)


def test_degree_cap_bounds_params():
    r = run_all(VerifyConfig(max_degree=10))
    assert r.status == "pass"
    assert r["N-poincare-series"].params["max_degree"] == 10
    assert r["D-vanishing"].params["max_degree"] == 10


def test_bound_abort_exit_code():
    r = run_all(VerifyConfig(factorization_max_m=13))
    assert r["QQ1-factorization"].status == "fail"
    assert r["QQ1-factorization"].bound_abort
    assert r.exit_code == 3


def test_individual_entries():
    assert verify_d_vanishing(3, 10).status == "pass"
    assert verify_qq1_factorization(6).status == "pass"
    assert verify_x13(6).status == "pass"


def test_x13_definition():
    assert str(x13_from_definition()) == "w2'^3*w2''^2*w3' + w2'*w2''^4*w3'"


def test_mutated_registry_fails():
    algs = builtin_presentations()
    algs["N"] = algs["N"].with_relations([algs["N"].relations[0]])
    r = run_all(VerifyConfig(max_degree=12), algs)
    assert r.status == "fail" and r.exit_code == 1
    assert r["N-poincare-series"].status == "fail"


def test_mutation_enumeration_covers_every_entry():
    algs = builtin_presentations()
    entries = sum(len(t) for a in algs.values() for t in a.sq_table.values())
    relation_variants = sum(1 + len(r) for a in algs.values() for r in a.relations)
    muts = list(single_mutations())
    assert len(muts) >= entries + relation_variants
    assert len({label for label, _, _ in muts}) == len(muts)

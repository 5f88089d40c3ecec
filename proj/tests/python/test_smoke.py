"""End-to-end smoke checks for the Python bindings."""

import json

import pytest

lcg = pytest.importorskip("lcgroups")


def test_build_and_basic_facts():
    g = lcg.build_group("Dih(8)")
    assert g.order == 8
    assert g.exponent == 4
    assert len(g) == 8
    e = g.element(0)
    assert e.is_identity
    assert lcg.center(g).order == 2
    assert lcg.is_nilpotent(g)
    assert lcg.nilpotency_class(g) == 2
    assert not lcg.is_lcm_group(g)


def test_lcm_set_and_series():
    g = lcg.build_group("Dih(8)")
    s = lcg.lcm_set(g)
    assert len(s) == 4
    assert lcg.lc_subgroup(g).order == 4
    assert lcg.lcm_set_fast(g) == s

    series = lcg.lc_series(lcg.build_group("Alt(4)"))
    assert [t.order for t in series.terms] == [1, 4, 12]
    assert series.lc_class == 2
    assert series.terminated


def test_perm_arithmetic():
    p = lcg.Perm([1, 2, 3, 0])
    assert p.order() == 4
    assert (p * p).order() == 2
    assert p.inverse() * p == lcg.Perm.identity(4)


def test_cp2_and_nlcm_reports():
    v = lcg.is_cp2(lcg.build_group("Alt(4)"))
    assert v.holds and v.route == "frobenius"

    r = lcg.nlcm_check(lcg.build_group("Dih(8)"))
    assert r.is_nlcm and r.p_group and r.p == 2
    assert not lcg.nlcm_check(lcg.build_group("Dic(2)")).is_nlcm


def test_exceptions():
    with pytest.raises(lcg.ParseError):
        lcg.build_group("Cyc(")
    with pytest.raises(lcg.InvalidArgumentError):
        lcg.build_group("Dih(9)")
    with pytest.raises(lcg.CapExceededError):
        lcg.build_group("Sym(5)", lcg.Caps(100))


def test_campaigns_and_cli_roundtrip():
    assert len(lcg.campaign_ids()) == 13
    rep = lcg.run_campaign("thm-222")
    assert rep["summary"]["failed"] == 0
    assert rep["summary"]["total"] == 33

    code, out, err = lcg.run_cli(["lcm", "Dic(2)", "--format", "json"])
    assert code == 0, err
    payload = json.loads(out)
    assert payload["set_size"] == 8 and payload["lcm_group"] is True

    code, _, _ = lcg.run_cli(["verify", "no-such-campaign"])
    assert code == 2

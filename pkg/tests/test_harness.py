from fractions import Fraction

import pytest

from nilorder.errors import ConfigurationError, PreconditionError, TheoremViolation
from nilorder.harness.catalog import build, get_entry
from nilorder.harness.checks import BY_ID, CHECKS, GroupContext, center_power_data
from nilorder.harness.report import render
from nilorder.harness.sweep import SweepReport, ratio_census, resolve_checks, sweep
from nilorder.hall.constants import class_constants
from nilorder.kernel import COL, COLUMNS

HALF, ONE, TWO = Fraction(1, 2), Fraction(1), Fraction(2)


def test_d4_class2_sweep():
    rep = sweep(get_entry("D4"))
    assert rep.pairs_checked == 64 and rep.ok
    assert set(rep.ratio_counts) == {HALF, ONE, TWO}
    assert "class2-ratio" in rep.checks and "lemma-center" not in rep.checks


def test_heis3_hall_corollary():
    rep = sweep(get_entry("heis3"), checks=["hall-corollary"])
    assert rep.ok and set(rep.ratio_counts) == {ONE}
    assert not rep.notes


def test_abelian_weakbound():
    rep = sweep(get_entry("z4xz6"), checks=["weakbound"])
    assert rep.ok and rep.checks == ["weakbound"]


def test_non_nilpotent_gets_only_general_checks():
    rep = sweep(get_entry("S4"))
    assert rep.checks == ["sandwich", "closed-form", "symmetry"]
    assert rep.ok
    with pytest.raises(ConfigurationError):
        sweep(get_entry("S4"), checks=["bc-divisibility"])
    with pytest.raises(ConfigurationError):
        sweep(get_entry("D4"), checks=["no-such-check"])
    assert resolve_checks(None, ["class2-ratio", "sandwich"], strict=False) == [BY_ID["sandwich"]]


def test_class3_sweep():
    rep = sweep(get_entry("dih16"))
    assert rep.ok
    assert all(p in (2, 3) for q in rep.ratio_counts for p in (2, 3) if q.numerator % p == 0)
    assert "class2-ratio" not in rep.checks


def test_sampled_sweep_is_deterministic():
    G = build("heis9")
    one = sweep(G, checks=["sandwich", "class2-ratio"], mode="sampled", sample=200)
    two = sweep(G, checks=["sandwich", "class2-ratio"], mode="sampled", sample=200, workers=3)
    assert one.mode == "sampled(200)" and one.ok
    assert render([one]) == render([two])


def test_worker_counts_give_identical_reports():
    reps = [render([sweep(get_entry("Q8xheis3"), workers=w)]) for w in (1, 4)]
    assert reps[0] == reps[1]


def _row(**kw):
    base = dict.fromkeys(COLUMNS, 1)
    base.update(kw)
    return base


def _ctx(gamma=2):
    k = class_constants(gamma)
    return GroupContext("toy", 8, gamma, k.B, k.C)


def test_checks_flag_bad_rows():
    # a row claiming o(ab) = 3 with o(a,b) = 1 in a class-2 group
    bad = _row(m=2, n=2, e=1, v=0, mo=2, oab=6, r=2, ox=1, oxy=1)
    assert BY_ID["class2-ratio"].row(bad, _ctx())
    assert BY_ID["ratio-primes"].row(bad, _ctx())
    assert BY_ID["sandwich"].row(_row(m=4, n=4, e=1, mo=2), _ctx())
    assert BY_ID["weakbound"].row(_row(m=4, n=6, oab=3), _ctx(1))
    assert BY_ID["bc-divisibility"].row(_row(oab=17, mo=1), _ctx())
    assert BY_ID["commutator-order"].row(_row(m=4, n=2, r=2, ocomm=2, cen_ab=4), _ctx())


def test_checks_accept_good_rows():
    good = _row(m=4, n=2, e=1, v=0, mo=4, oab=2, r=2, ce_ab=2, ce_ba=2, cen_ab=2, cen_ba=1,
                ox=2, oxy=1, witness=1, ocomm=2, commutes=0)
    for cid in ("sandwich", "closed-form", "class2-ratio", "commutator-order", "bc-divisibility"):
        assert BY_ID[cid].row(good, _ctx()) is None, cid


def test_violation_records_are_replayable(monkeypatch):
    import nilorder.harness.checks as checks

    def always(r, ctx):
        return "forced" if r["m"] == 4 else None

    forced = checks.Check("forced", checks.ANY, "test only", row=always)
    monkeypatch.setitem(BY_ID, "forced", forced)
    rep = sweep(get_entry("D4"), checks=["forced"])
    G = build("D4")
    assert len(rep.violations) == 2 * 8
    v = rep.violations[0]
    assert v.row[COL["m"]] == 4
    from nilorder.elements import element_order

    assert element_order(G.elements[v.a]) == 4
    text = render([rep])
    assert f"violation: check=forced a=@{v.a} b=@{v.b}" in text
    assert "status: FAIL" in text


def test_ratio_census():
    reports = [sweep(get_entry(n)) for n in ("z4xz6", "D4", "mod16", "dih16", "ut4_2")]
    census = ratio_census(reports)
    assert census[1] == [ONE]
    assert census[2] == [HALF, ONE, TWO]
    assert all(p in (2, 3) for q in census[3] for p in (2, 3, 5, 7) if q.denominator % p == 0
               or q.numerator % p == 0)
    fake = SweepReport("fake", 8, 2, "exhaustive", 1, [], ratio_counts={Fraction(4): 1})
    with pytest.raises(TheoremViolation):
        ratio_census([fake])
    fake = SweepReport("fake", 8, 2, "exhaustive", 1, [], ratio_counts={Fraction(5): 1})
    with pytest.raises(TheoremViolation):
        ratio_census([fake])
    with pytest.raises(PreconditionError):
        ratio_census([sweep(get_entry("S4"))])


def test_lemma_center_check():
    rep = sweep(get_entry("ut4_2"), checks=["lemma-center"])
    assert rep.ok
    G = build("dih16")
    a, b = G.generators
    n, weak_ok, finer = center_power_data(a, b, 3)
    assert weak_ok and n >= 1


def test_tsv_report():
    rep = sweep(get_entry("D4"))
    out = render([rep], "tsv").splitlines()
    assert out[0].split("\t")[0] == "group"
    assert out[1].split("\t")[-1] == "1/2:16 1/1:40 2/1:8"
    with pytest.raises(ValueError):
        render([rep], "json")


def test_check_registry_ids_unique():
    assert len({c.id for c in CHECKS}) == len(CHECKS)


def test_class3_constant_evidence_note():
    rep = sweep(build("dih16"), checks=["ratio-primes"])
    assert "smallest constants fitting the observed ratios: B = 4, C = 4" in rep.notes
    assert not any("smallest constants" in n for n in sweep(build("D4"), checks=["sandwich"]).notes)

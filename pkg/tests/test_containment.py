"""Containment decisions, conjecture scans, and the resurgence region."""

import time
from fractions import Fraction

import pytest

from steinerideals import (
    ContainmentEngine,
    ContainmentQuery,
    DegenerateRegion,
    Monomial,
    ResourceLimit,
    builtin_fano,
    builtin_sqs8,
    check_containment,
    check_els,
    chudnovsky_check,
    complement_ideal,
    cover_ideal,
    demailly_check,
    harbourne_huneke_scan,
    member_of_symbolic,
    min_degree_generators,
    resurgence_region,
    resurgence_search,
    stable_harbourne_scan,
)

import oracles


@pytest.fixture(scope="module")
def fano_c():
    return ContainmentEngine(complement_ideal(builtin_fano()))


@pytest.fixture(scope="module")
def fano_j():
    return ContainmentEngine(cover_ideal(builtin_fano().hypergraph()))


@pytest.fixture(scope="module")
def sqs8_j():
    return ContainmentEngine(cover_ideal(builtin_sqs8().hypergraph()))


# single checks


def test_degree_obstruction_failure(fano_c):
    rep = fano_c.check(2, 2)
    assert not rep.holds
    assert rep.method == "degree-obstruction"
    assert (rep.alpha_m, rep.alpha_r, rep.omega_r) == (6, 8, 8)
    assert rep.witness == min_degree_generators(fano_c.decomposition, 2)[0]
    assert rep.witness.degree == 6


def test_regularity_threshold_shortcut(fano_c):
    for m, r in ((4, 2), (6, 2), (7, 3)):
        rep = fano_c.check(m, r)
        assert rep.holds and rep.witness is None
        assert rep.method == "regularity-threshold"


def test_symbolic_descent_shortcut(fano_c):
    rep = fano_c.check(5, 1)
    assert rep.holds and rep.method == "symbolic-descent"


def test_slack_containments_hold_by_scan(fano_c):
    rep = fano_c.check(3, 1, slack=3)
    assert rep.holds and rep.method == "generator-scan"
    rep = fano_c.check(6, 2, slack=6)
    assert rep.holds and rep.method == "generator-scan"


def test_slack_failure_with_witness(fano_c):
    rep = fano_c.check(2, 1, slack=3)
    assert not rep.holds
    assert rep.method == "degree-obstruction"
    assert rep.witness.degree == 6  # alpha(I^(2)) = 6 < alpha(I) + 3 = 7


def test_fano_cover_noncontainment_witness(fano_j):
    rep = fano_j.check(3, 2)
    assert not rep.holds
    assert rep.witness == Monomial((1,) * 7)
    assert rep.method == "generator-scan"
    # independent re-verification of the witness
    P = fano_j.decomposition
    assert member_of_symbolic(rep.witness, P, 3)
    base = [g.exponents for g in fano_j.base_ideal().generators]
    assert not oracles.brute_member_of_power(rep.witness.exponents, base, 2, 0)


def test_sqs8_cover_noncontainment_witnesses(sqs8_j):
    rep = sqs8_j.check(3, 2)
    assert not rep.holds
    assert rep.witness == Monomial((1, 1, 1, 1, 1, 1, 1, 0))
    rep = sqs8_j.check(4, 3)
    assert not rep.holds
    assert rep.witness == Monomial((1,) * 8)


def test_report_dict_schema(fano_c):
    doc = fano_c.check(3, 2).to_dict()
    assert set(doc) == {
        "m", "r", "slack", "holds", "witness",
        "alpha_m", "alpha_r", "omega_r", "method", "elapsed_ms",
    }
    assert doc["witness"].count(" ") == 6
    held = fano_c.check(4, 2).to_dict()
    assert held["holds"] is True and held["witness"] is None


def test_audit_agrees_with_shortcuts():
    P = complement_ideal(builtin_fano())
    fast = ContainmentEngine(P)
    slow = ContainmentEngine(P)
    for m in range(1, 7):
        for r in range(1, 4):
            a = fast.check(m, r)
            b = slow.check(m, r, audit=True)
            assert a.holds == b.holds, (m, r)
            if not a.holds:
                assert a.witness == b.witness, (m, r)


def test_check_validation(fano_c):
    for bad in ((0, 1, 0), (1, 0, 0), (1, 1, -1)):
        with pytest.raises(ValueError):
            fano_c.check(*bad)


def test_engine_caches_are_shared(fano_c):
    assert fano_c.symbolic(3) is fano_c.symbolic(3)
    assert fano_c.ordinary_power(2) is fano_c.ordinary_power(2)
    assert fano_c.base_ideal() is fano_c.symbolic(1)


def test_omega_formula_and_audit(fano_c, fano_j):
    assert fano_c.omega_r(1) == 4
    assert fano_c.omega_r(2) == 8
    assert fano_c.omega_r(2, audit=True) == 8
    # no provenance: omega comes from the materialized power
    assert fano_j.omega_r(1) == fano_j.base_ideal().max_degree()


def test_check_containment_wrapper():
    P = complement_ideal(builtin_fano())
    query = ContainmentQuery(P, 4, 2)
    assert check_containment(query).holds
    engine = ContainmentEngine(cover_ideal(builtin_fano().hypergraph()))
    with pytest.raises(ValueError):
        check_containment(query, engine=engine)
    with pytest.raises(ValueError):
        ContainmentQuery(P, 0, 1)
    with pytest.raises(ValueError):
        ContainmentQuery(P, 1, 1, -2)


# resource limits


def test_time_budget_stops_symbolic_materialization():
    P = complement_ideal(builtin_fano())
    engine = ContainmentEngine(P, time_budget=0.0)
    with pytest.raises(ResourceLimit) as ei:
        engine.check(4, 2, audit=True)
    assert ei.value.stage == "symbolic-power"


def test_time_budget_stops_membership_scan():
    P = complement_ideal(builtin_fano())
    engine = ContainmentEngine(P)
    assert engine.check(3, 1, slack=3).holds  # warm the caches
    engine.deadline = time.monotonic() - 1.0
    with pytest.raises(ResourceLimit) as ei:
        engine.check(3, 1, slack=3)
    exc = ei.value
    assert exc.stage == "membership-scan"
    assert exc.partial["generators_checked"] == 0
    assert exc.partial["generators_total"] == 29
    assert exc.partial["holds_so_far"] is True


# conjecture families


def test_els_sanity_checks():
    fano_h = builtin_fano().hypergraph()
    for P, r in (
        (cover_ideal(fano_h), 1),
        (cover_ideal(fano_h), 2),
        (complement_ideal(builtin_fano()), 1),
    ):
        rep = check_els(P, r)
        assert rep.holds
        assert rep.m == P.big_height * r


def test_stable_harbourne_scan_fano():
    verdict = stable_harbourne_scan(complement_ideal(builtin_fano()), 1, 3)
    assert verdict.all_hold
    assert verdict.threshold == Fraction(7, 2)
    assert [inst.params["m"] for inst in verdict.instances] == [1, 4, 7]
    assert verdict.name.value == "stable-harbourne"
    doc = verdict.to_dict()
    assert doc["threshold"] == "7/2"
    assert all(inst["holds"] for inst in doc["instances"])


def test_stable_harbourne_scan_has_no_threshold_without_provenance():
    verdict = stable_harbourne_scan(cover_ideal(builtin_fano().hypergraph()), 1, 1)
    assert verdict.threshold is None
    assert "threshold" not in verdict.to_dict()


def test_harbourne_huneke_scans_fano():
    P = complement_ideal(builtin_fano())
    engine = ContainmentEngine(P)
    one = harbourne_huneke_scan(P, 1, 2, 1, engine=engine)
    assert one.all_hold
    # form 1 slack is r*(h-1); the stronger slack r*h variants are
    # exercised separately in test_slack_containments_hold_by_scan
    assert [(i.params["m"], i.params["slack"]) for i in one.instances] == [(3, 2), (6, 4)]
    two = harbourne_huneke_scan(P, 1, 2, 2, engine=engine)
    assert two.all_hold
    assert [(i.params["m"], i.params["slack"]) for i in two.instances] == [(1, 0), (4, 2)]
    with pytest.raises(ValueError):
        harbourne_huneke_scan(P, 1, 2, 3)
    with pytest.raises(ValueError):
        stable_harbourne_scan(P, 2, 1)


def test_chudnovsky_fano():
    verdict = chudnovsky_check(complement_ideal(builtin_fano()), 6)
    assert verdict.all_hold
    for inst in verdict.instances:
        assert inst.params["rhs"] == "2"
        assert inst.params["ambient_dim"] == 3
    assert Fraction(verdict.instances[2].params["lhs"]) == Fraction(7, 3)


def test_chudnovsky_needs_ambient_without_provenance():
    P = cover_ideal(builtin_fano().hypergraph())
    with pytest.raises(ValueError):
        chudnovsky_check(P, 2)
    verdict = chudnovsky_check(P, 2, ambient_dim=3)
    assert verdict.instances[0].params["ambient_dim"] == 3


def _same_bounds(a, b):
    return [i.params["lhs"] for i in a.instances] == [
        i.params["lhs"] for i in b.instances
    ] and a.instances[0].params["rhs"] == b.instances[0].params["rhs"]


def test_demailly_fano_exact_right_sides():
    P = complement_ideal(builtin_fano())
    engine = ContainmentEngine(P)
    expected = {1: Fraction(2), 3: Fraction(9, 5), 4: Fraction(13, 6), 6: Fraction(2)}
    for m, rhs in expected.items():
        verdict = demailly_check(P, m, 6, engine=engine)
        assert verdict.all_hold, m
        assert Fraction(verdict.instances[0].params["rhs"]) == rhs
        assert rhs <= Fraction(7, 3)
    # m = 1 recovers the Chudnovsky bound exactly
    chud = chudnovsky_check(P, 6, engine=engine)
    assert _same_bounds(chud, demailly_check(P, 1, 6, engine=engine))


def test_demailly_validation():
    P = complement_ideal(builtin_fano())
    with pytest.raises(ValueError):
        demailly_check(P, 0, 2)
    with pytest.raises(ValueError):
        demailly_check(P, 1, 0)


# resurgence


def test_resurgence_region_exact():
    region = resurgence_region(3, 3, 2, 2)
    assert region.asymptotic == Fraction(3, 2)
    assert region.r_max == 9
    assert region.s_max(9) == Fraction(18)
    for r in range(1, 10):
        assert region.s_max(r) == Fraction(3 * (r + 3), 2)
    doc = region.to_dict()
    assert doc["r_max"] == 9
    assert doc["s_max_slope"] == "3/2"
    assert doc["s_max_intercept"] == "9/2"


def test_resurgence_region_degenerate_and_invalid():
    with pytest.raises(DegenerateRegion):
        resurgence_region(3, 3, 2, Fraction(3, 2))
    with pytest.raises(DegenerateRegion):
        resurgence_region(3, 3, 2, 1)
    with pytest.raises(ValueError):
        resurgence_region(3, 3, 1, 2)
    with pytest.raises(ValueError):
        resurgence_region(0, 3, 2, 2)


def test_resurgence_search_fano_cover(fano_j):
    scan = resurgence_search(
        fano_j.decomposition, 4, 2, engine=fano_j
    )
    assert [(f.m, f.r) for f in scan.failures] == [(3, 2)]
    assert scan.max_ratio == Fraction(3, 2)
    for f in scan.failures:
        assert f.m > f.r
    doc = scan.to_dict()
    assert doc["max_ratio"] == "3/2"
    assert len(doc["failures"]) == 1


def test_resurgence_search_fano_complement(fano_c):
    # same box as the cover scan: (3,2) is the only failing cell here too
    scan = resurgence_search(fano_c.decomposition, 4, 2, engine=fano_c)
    assert [(f.m, f.r) for f in scan.failures] == [(3, 2)]
    assert scan.max_ratio == Fraction(3, 2)
    with pytest.raises(ValueError):
        resurgence_search(fano_c.decomposition, 0, 2, engine=fano_c)

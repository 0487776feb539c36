import pytest

from veryeven.bmod import nilradical_weights
from veryeven.charlib import VirtualCharacter
from veryeven.prover import (audit_stages, build_scenario, check_demi1, check_demi2, check_prop1,
                             stage_certificate, verify_main_ses, verify_shift_identity,
                             verify_step1_identity, verify_step2_vanishing, verify_step3_pivot)
from veryeven.prover.replay import (koszul_cross_check, replay_record, step1_setup, step2_setup,
                                    step3_setup)
from veryeven.prover.scenario import expected_levi_types, levi_type
from veryeven.rootsys import build_root_system, fundamental_weight

A3 = build_root_system("A", 3)


# ---- single lemmas ------------------------------------------------------

def test_demi1_examples():
    assert check_demi1(A3, (-2, 0, 0), 1, 3).params["r"] == -2
    assert not check_demi1(A3, (-4, 0, 0), 1, 3)
    assert "below" in check_demi1(A3, (-4, 0, 0), 1, 3).reason
    assert check_demi1(A3, (-1, 0, 0), 1, 3).params["r"] == -1
    assert not check_demi1(A3, (0, 0, 0), 1, 3)
    assert not check_demi1(A3, (-2, 1, 0), 1, 3)
    assert check_prop1(A3, (-1, 0, 0), 1) and not check_prop1(A3, (0, 0, 0), 1)


def test_demi2_examples():
    c = check_demi2(A3, (1, 0, -2), 1, 3)
    assert c and c.params["k+b-a"] == 0 and c.params["branch"] == "direct"
    bad = check_demi2(A3, (1, 0, -3), 1, 3)
    assert not bad and "-1" in bad.reason
    c = check_demi2(A3, (1, 0, -4), 1, 3)
    assert c and c.params["branch"] == "shifted"
    assert c.params["shift_root"] == [0, 2, 3]
    assert c.params["mu_pairing_a"] == -1
    assert tuple(c.params["mu"]) == (-1, 1, 0)
    assert not check_demi2(A3, (0, 0, -2), 1, 3)
    assert not check_demi2(A3, (1, 0, -5), 1, 3)


def test_malformed_chain():
    d5 = build_root_system("D", 5)
    with pytest.raises(ValueError):
        check_demi1(d5, (0,) * 5, 1, 3, [1, 2, 4, 5])       # 4 and 5 are not adjacent
    with pytest.raises(ValueError):
        check_demi1(d5, (0,) * 5, 1, 3, [1, 3])
    with pytest.raises(ValueError):
        check_demi1(A3, (0,) * 3, 3, 1)


# ---- replay -------------------------------------------------------------

@pytest.mark.parametrize("l", [2, 3, 4])
def test_step1_replay(l):
    setup = step1_setup(l)
    cert = stage_certificate(setup)
    assert cert.accepted and not cert.mismatches
    assert cert.covered_count() == cert.total
    top = [r for r in cert.records if r["j"] == 2 * l]
    assert len(top) == 1
    assert top[0]["root"] == list(range(1, 2 * l + 1)) + [0]
    assert top[0]["pairings"][2 * l + 1] == -2 * l + 1
    assert all(replay_record(setup.rs, r) for r in cert.records)


def test_step1_d5_rules():
    cert = stage_certificate(step1_setup(2))
    assert cert.rules_at(4) == {"Demi1": 1}
    assert "Demi2" in cert.rules_at(2)
    d2 = [r for r in cert.records if r["j"] == 2 and r["rule"] == "Demi2"]
    assert all(r["params"]["k+b-a"] == 0 for r in d2)


@pytest.mark.parametrize("l", [2, 3])
def test_step2_replay(l):
    setup = step2_setup(l)
    cert = stage_certificate(setup)
    assert cert.accepted and not cert.mismatches
    assert len(setup.kernel) == 2 * l - 2
    assert setup.extra["quotient_certificate"]
    assert all(replay_record(setup.rs, r) for r in cert.records)


@pytest.mark.parametrize("l", [2, 3, 4])
def test_step3_replay(l):
    setup = step3_setup(l)
    cert = stage_certificate(setup)
    assert cert.accepted
    assert [p["j"] for p in cert.pivots] == [l]
    assert cert.pivots[0]["root"] == [min(p, l) for p in range(1, 2 * l + 2)]
    # the stated j = 2l-1 value sits one node further along than written
    assert len(cert.mismatches) == 1
    mm = cert.mismatches[0]
    assert (mm["j"], mm["node"], mm["actual"]) == (2 * l - 1, 2 * l - 2, 0)
    assert mm["chain_pairings"][2 * l - 1] == -2 * l + 2


@pytest.mark.parametrize("make,skip", [(step1_setup, ()), (step2_setup, ()),
                                       (lambda l: step3_setup(l), "pivot")])
def test_certificate_agrees_with_koszul(make, skip):
    setup = make(2)
    sk = (2,) if skip == "pivot" else ()
    assert koszul_cross_check(setup, 5, skip=sk) == {}


def test_replay_rejects_tampered_record():
    setup = step1_setup(2)
    rec = dict(stage_certificate(setup).records[0])
    rec["weight"] = [x + 1 for x in rec["weight"]]
    assert not replay_record(setup.rs, rec)


def test_stable_twist_is_checked():
    setup = step1_setup(2)
    from veryeven.prover.replay import verify_wedge_vanishing
    with pytest.raises(ValueError):
        verify_wedge_vanishing(setup.rs, setup.kernel, range(1, 3), setup.chain, setup.stable,
                               twist=(1, 0, 0, 0, 0))


# ---- identities ---------------------------------------------------------

def test_shift_examples():
    a2 = build_root_system("A", 2)
    rep = verify_shift_identity(a2, "A", {"m": 1, "r": -1}, 2)
    assert rep.holds and rep.left == VirtualCharacter.irreducible((1, 2))
    d5 = build_root_system("D", 5)
    rep = verify_shift_identity(d5, "D", {"r": -1}, 2)
    assert rep.holds and rep.right == VirtualCharacter.irreducible(fundamental_weight(d5, 5))
    for n in range(4):
        rep = verify_shift_identity(d5, "D", {"r": 0}, n)
        assert rep.holds and rep.extra["right_degree"] == n


def test_shift_range_errors():
    with pytest.raises(ValueError):
        verify_shift_identity(build_root_system("A", 3), "A", {"m": 1, "r": -4}, 1)
    with pytest.raises(ValueError):
        verify_shift_identity(build_root_system("D", 5), "D", {"r": -4}, 1)
    with pytest.raises(ValueError):
        verify_shift_identity(build_root_system("D", 6), "D", {"r": -1}, 1)
    with pytest.raises(ValueError):
        verify_shift_identity(build_root_system("A", 3), "B", {"r": 0}, 1)


@pytest.mark.parametrize("r", [-4, -2, 0, 1, 3])
def test_step1_identity_any_r(r):
    assert all(verify_step1_identity(2, r, n).holds for n in range(5))


@pytest.mark.parametrize("r,s", [(-1, 0), (-1, 2), (-2, 1), (-3, 0), (-2, -1)])
def test_step2_and_step3(r, s):
    d5 = build_root_system("D", 5)
    for n in range(5):
        rep = verify_step2_vanishing(2, r, s, n)
        assert rep.holds and rep.extra["quotient_vanishes"]
        assert verify_step3_pivot(d5, 2, {"r": r, "s": s}, n).holds


def test_step3_examples():
    d5 = build_root_system("D", 5)
    rep = verify_step3_pivot(d5, 2, {"r": -1}, 0)
    assert rep.left == 0 and rep.right == 0
    assert verify_step3_pivot(d5, 2, {"r": -3, "s": 0}, 3).holds
    with pytest.raises(ValueError):
        verify_step3_pivot(d5, 2, {"r": -3, "s": 1}, 1)
    with pytest.raises(ValueError):
        verify_step3_pivot(d5, 2, {"r": 0}, 1)


# ---- scenarios ----------------------------------------------------------

def test_scenario_142():
    sc = build_scenario(1, 4, 2)
    assert (sc.l, sc.d, sc.rs.name) == (3, 2, "D6")
    assert sorted(sc.P.removed) == [2, 6]
    assert sorted(sc.P_prime.removed) == [3, 6]
    assert sorted(sc.P_dprime.removed) == [3, 5]
    assert sc.mu["mu"] == (1, 2, 3, 2, 1, 0)
    assert sc.nu == (0, 0, 0, 0, 2, 0)
    assert levi_type(sc.rs, sc.P) == ["A1", "A3"]
    assert levi_type(sc.rs, sc.P_prime) == ["A2", "A2"]


def test_scenario_162():
    sc = build_scenario(1, 6, 2)
    assert sorted(sc.P_prime.removed) == [3, 6, 8]
    assert sorted(sc.P_dprime.removed) == [3, 6, 7]
    assert sorted(sc.P.removed) == [2, 6, 8]
    assert sc.nu == fundamental_weight(sc.rs, 6)
    assert levi_type(sc.rs, sc.P_prime) == ["A1", "A2", "A2"]


@pytest.mark.parametrize("kab", [(1, 4, 2), (1, 6, 2), (2, 4, 2), (1, 6, 4), (1, 8, 2),
                                 (1, 8, 4), (1, 8, 6), (2, 6, 2), (3, 4, 2), (2, 8, 2)])
def test_scenario_levi_signatures(kab):
    sc = build_scenario(*kab)
    exp = expected_levi_types(*kab)
    assert levi_type(sc.rs, sc.P_prime) == exp["prime"]
    assert levi_type(sc.rs, sc.P_dprime) == exp["prime"]
    assert levi_type(sc.rs, sc.P) == exp["small"]
    assert sc.a * sc.k + sc.b == 2 * sc.l
    assert all(1 <= i <= 2 * sc.l for m in (sc.P, sc.P_prime, sc.P_dprime, sc.P1, *sc.Q.values())
               for i in m.removed)
    # nilradical dimensions: dim u_P' = dim u_P'' and the orbit gap is 2
    rs = sc.rs
    assert len(nilradical_weights(rs, sc.P_prime)) == len(nilradical_weights(rs, sc.P_dprime))
    assert len(nilradical_weights(rs, sc.P_prime)) == len(nilradical_weights(rs, sc.P)) + 1


@pytest.mark.parametrize("kab", [(1, 2, 4), (1, 4, 4), (1, 3, 2), (0, 4, 2), (1, 4, 0),
                                 (-1, 4, 2)])
def test_scenario_rejects(kab):
    with pytest.raises(ValueError):
        build_scenario(*kab)


def test_main_ses_examples():
    sc = build_scenario(1, 4, 2)
    r0 = verify_main_ses(sc, 0)
    assert r0.holds and r0.upper == VirtualCharacter.irreducible((0,) * 6) == r0.lower
    assert r0.correction == 0
    r1 = verify_main_ses(sc, 1)
    assert r1.holds and r1.correction == 0 and r1.exponent == 7
    r3 = verify_main_ses(sc, 3)
    assert r3.holds and r3.nonnegative and r3.to_json()["chi_upper"]


def test_main_ses_correction_degree():
    # the first degree where the two candidate drops differ on (1,4,2)
    sc = build_scenario(1, 4, 2)
    assert sc.stated_exponent == 7 and sc.composed_exponent == 5
    stated = verify_main_ses(sc, 5)
    composed = verify_main_ses(sc, 5, sc.composed_exponent)
    assert composed.holds and composed.nonnegative
    assert composed.correction == VirtualCharacter.irreducible(sc.nu)
    assert not stated.holds
    assert stated.upper - stated.lower == VirtualCharacter.irreducible(sc.nu)


@pytest.mark.parametrize("kab,m", [((1, 4, 2), 3), ((1, 6, 2), 2)])
def test_stage_audit(kab, m):
    links = audit_stages(build_scenario(*kab), m)
    assert all(x["holds"] for x in links if x.get("candidate", "composed") == "composed")


def test_stage_audit_locates_stated_offset():
    links = audit_stages(build_scenario(1, 6, 2), 2)
    stated = [x for x in links if x.get("candidate") == "stated"]
    assert len(stated) == 1 and stated[0]["link"] == "mu3 -> mu4"
    assert stated[0]["drop"] == 4 and stated[0]["first_failure"] == 2


def test_scenario_json():
    import json
    j = build_scenario(1, 6, 2).to_json()
    assert json.loads(json.dumps(j))["nu"] == [0, 0, 0, 0, 0, 1, 0, 0]
    assert [s["offset"] for s in j["stages"]] == [3, 5, 5, 7, 9]

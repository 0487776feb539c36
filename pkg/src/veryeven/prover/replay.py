"""Weight-by-weight replay of Koszul vanishing arguments.

For a module ``Q`` stable under the minimal parabolics of a set of *stable*
simple roots, ``H^*(Q (x) lam) = 0`` whenever ``lam`` passes one of the lemma
checks in :mod:`.lemmas` along those roots.  :func:`verify_wedge_vanishing`
runs these checks over every weight of ``wedge^j(carrier)`` and records which
rule disposed of it.  The stage helpers set up the three Koszul stages used in
type ``D_{2l+1}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..bmod import (WeightMultiset, nilradical_weights, split_intersection, sym_power_weights,
                    tensor, threshold_submodule, wedge_power_weights)
from ..charlib import euler_characteristic
from ..rootsys import ParabolicMarker, RootSystem, build_root_system, fundamental_weight
from .lemmas import check_chain, check_demi1, check_demi2

__all__ = [
    "VanishingCertificate",
    "verify_wedge_vanishing",
    "replay_record",
    "StageSetup",
    "step1_setup",
    "step2_setup",
    "step3_setup",
    "stage_certificate",
    "koszul_cross_check",
    "d_odd",
]


@dataclass
class VanishingCertificate:
    scenario: str
    records: list = field(default_factory=list)
    uncovered: list = field(default_factory=list)
    pivots: list = field(default_factory=list)
    survivors: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    total: int = 0

    @property
    def accepted(self) -> bool:
        return not self.uncovered

    def covered_count(self) -> int:
        return sum(r["multiplicity"] for r in self.records)

    def rules_at(self, j: int) -> dict:
        out: dict = {}
        for r in self.records:
            if r["j"] == j:
                out[r["rule"]] = out.get(r["rule"], 0) + r["multiplicity"]
        return out

    def to_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "accepted": self.accepted,
            "total": self.total,
            "records": self.records,
            "uncovered": self.uncovered,
            "pivots": self.pivots,
            "survivors": self.survivors,
            "mismatches": self.mismatches,
        }


def _pairings(lam, nodes):
    return {i: lam[i - 1] for i in nodes}


def _entry(rs, lam, j, mult, stable):
    return {
        "j": j,
        "weight": list(lam),
        "root": [int(x) if x.denominator == 1 else str(x) for x in rs.fund_to_root(lam)],
        "multiplicity": mult,
        "pairings": _pairings(lam, stable),
    }


def verify_wedge_vanishing(rs: RootSystem, carrier: WeightMultiset, j_range: Iterable[int],
                           chain: Sequence[int], stable: Sequence[int] | None = None,
                           twist: Sequence[int] | None = None, pivot: dict | None = None,
                           reference: dict | None = None, scenario: str = "custom"
                           ) -> VanishingCertificate:
    """Dispose of every weight of ``wedge^j(carrier)`` for ``j`` in ``j_range``.

    Rules are tried in order: a ``-1`` pairing at a stable root (single
    Demazure step), Demi1 over the whole chain read from its far end, Demi2
    along the chain.  Weights no rule handles are *uncovered*; a weight equal
    to ``pivot = {"j": ..., "root": ...}`` is filed under ``pivots`` instead.

    ``reference`` maps ``j`` to ``{"root", "node", "value"}``: the reduced form
    every survivor of the first rule should take, and an expected pairing of
    that reduced form.  Survivors of another shape, a missing reduced form, or
    a pairing disagreement are logged in ``mismatches``.
    """
    chain = check_chain(rs, chain)
    stable = tuple(sorted(set(stable if stable is not None else chain)))
    if not set(chain) <= set(stable):
        raise ValueError("chain nodes must be stable directions")
    twist = tuple(twist) if twist is not None else (0,) * rs.rank
    off = [i for i in stable if twist[i - 1] != 0]
    if off:
        raise ValueError(f"twist {twist} pairs nontrivially with stable roots {off}")
    cert = VanishingCertificate(scenario)
    back = tuple(reversed(chain))
    for j in j_range:
        weights = wedge_power_weights(carrier, j, rank=rs.rank)
        cert.total += len(weights)
        for lam, mult in weights.sorted_items():
            rec = _entry(rs, lam, j, mult, stable)
            hit = next((i for i in stable if lam[i - 1] == -1), None)
            if hit is not None:
                rec.update(rule="Prop1-singular", params={"node": hit, "pairing": -1})
                cert.records.append(rec)
                continue
            cert.survivors.append({"j": j, "root": rec["root"], "multiplicity": mult,
                                   "chain_pairings": [lam[i - 1] for i in chain]})
            if reference and j in reference and rec["root"] != reference[j]["root"]:
                cert.mismatches.append({"kind": "unexpected-survivor", "j": j,
                                        "root": rec["root"],
                                        "expected_root": reference[j]["root"]})
            res = check_demi1(rs, lam, 1, len(back), back)
            if not res:
                ones = [p for p in range(1, len(chain)) if lam[chain[p - 1] - 1] == 1]
                if len(ones) == 1:
                    res = check_demi2(rs, lam, ones[0], len(chain), chain)
            if res:
                rec.update(rule=res.rule, params=res.to_json()["params"])
                cert.records.append(rec)
            elif pivot and j == pivot["j"] and list(rec["root"]) == list(pivot["root"]):
                cert.pivots.append(rec)
            else:
                cert.uncovered.append(rec)
        if reference and j in reference:
            _compare_reference(rs, cert, j, reference[j], weights, chain)
    return cert


def _compare_reference(rs, cert, j, ref, weights, chain):
    lam = rs.root_to_fund(ref["root"])
    if lam not in weights:
        cert.mismatches.append({"kind": "missing-reduced-form", "j": j, "root": ref["root"]})
        return
    node, value = ref["node"], ref["value"]
    if lam[node - 1] != value:
        cert.mismatches.append({
            "kind": "pairing", "j": j, "root": list(ref["root"]), "node": node,
            "expected": value, "actual": lam[node - 1],
            "chain_pairings": {i: lam[i - 1] for i in chain},
        })


def replay_record(rs: RootSystem, rec: dict) -> bool:
    """Re-derive a certificate record from its stored weight and parameters."""
    lam = tuple(rec["weight"])
    p = rec["params"]
    if rec["rule"] == "Prop1-singular":
        return lam[p["node"] - 1] == -1
    if rec["rule"] == "Demi1":
        return bool(check_demi1(rs, lam, p["a"], p["b"], p["chain"]))
    if rec["rule"] == "Demi2":
        res = check_demi2(rs, lam, p["a"], p["b"], p["chain"])
        return bool(res) and res.params["k"] == p["k"]
    return False


def d_odd(l: int) -> RootSystem:
    """The root system of type ``D_{2l+1}``."""
    return build_root_system("D", 2 * l + 1)


@dataclass
class StageSetup:
    """Everything one Koszul stage needs: the ambient module, the kernel and its chain."""

    name: str
    rs: RootSystem
    ambient: WeightMultiset
    kernel: WeightMultiset
    quotient: WeightMultiset
    chain: tuple
    stable: tuple
    twist: tuple
    j_range: range
    pivot: dict | None = None
    reference: dict | None = None
    extra: dict = field(default_factory=dict)


def _mu(rs, l, r, s):
    w2l = fundamental_weight(rs, 2 * l)
    w2l1 = fundamental_weight(rs, 2 * l + 1)
    return tuple(r * x + s * y for x, y in zip(w2l, w2l1))


def _check_mu_hypotheses(r, s):
    if not -3 <= r <= -1:
        raise ValueError(f"r={r} outside -3..-1")
    if r == -3 and s != 0:
        raise ValueError("s must be 0 when r = -3")


def _ref(root, node, value):
    return {"root": list(root), "node": node, "value": value}


def _thresholds(l):
    rank = 2 * l + 1
    t1 = [0] * rank
    t1[2 * l - 3], t1[2 * l - 2], t1[2 * l - 1], t1[2 * l] = 1, 2, 1, 1
    t2 = [0] * rank
    t2[2 * l - 4], t2[2 * l - 3], t2[2 * l - 2], t2[2 * l - 1], t2[2 * l] = 1, 2, 2, 1, 1
    return tuple(t1), tuple(t2)


def intersection_modules(l: int):
    """``(rs, u_P*, u_P'*, V*, U)`` for ``P = {2l}``, ``P' = {2l+1}`` in ``D_{2l+1}``."""
    rs = d_odd(l)
    P, Pp = ParabolicMarker([2 * l]), ParabolicMarker([2 * l + 1])
    V, U = split_intersection(rs, P, Pp)
    return rs, nilradical_weights(rs, P), nilradical_weights(rs, Pp), V, U


def threshold_modules(l: int):
    """``V_1*, V_2*, U_1, U_2`` built from the thresholds below the highest root."""
    if l < 2:
        raise ValueError("thresholds need l >= 2")
    rs, _, _, V, _ = intersection_modules(l)
    t1, t2 = _thresholds(l)
    V1 = threshold_submodule(rs, V, t1)
    V2 = threshold_submodule(rs, V, t2)
    return V1, V2, V - V1, V1 - V2


def step1_setup(l: int, r: int = 0) -> StageSetup:
    rs, uP, _, V, U = intersection_modules(l)
    chain = tuple(range(1, 2 * l)) + (2 * l + 1,)
    stable = tuple(i for i in range(1, 2 * l + 2) if i != 2 * l)
    ref = {j: _ref([min(p, j) for p in range(1, 2 * l + 1)] + [0], 2 * l + 1,
                   -2 * l + 1 if j == 2 * l else -j)
           for j in range(1, 2 * l + 1)}
    twist = tuple(r * x for x in fundamental_weight(rs, 2 * l))
    return StageSetup("step1", rs, uP, U, V, chain, stable, twist, range(1, len(U) + 1),
                      reference=ref)


def step2_setup(l: int, r: int = -1, s: int = 0) -> StageSetup:
    _check_mu_hypotheses(r, s)
    rs = d_odd(l)
    V1, V2, _, U2 = threshold_modules(l)
    chain = tuple(range(1, 2 * l - 1))
    ref = {j: _ref([min(p, j) for p in range(1, 2 * l - 1)] + [2 * j, j, j], 2 * l - 2,
                   -2 * l + 3 if j == 2 * l - 2 else -j)
           for j in range(1, 2 * l - 1)}
    mu = _mu(rs, l, r, s)
    # quotient piece: Demi1 along alpha_{2l}, alpha_{2l-1}, alpha_{2l+1}
    a3 = (2 * l, 2 * l - 1, 2 * l + 1)
    quotient_cert = check_demi1(rs, mu, 1, 3 if s == 0 else 2, a3)
    return StageSetup("step2", rs, V1, U2, V2, chain, chain, mu, range(1, len(U2) + 1),
                      reference=ref, extra={"quotient_certificate": quotient_cert})


def step3_setup(l: int, r: int = -1, s: int = 0) -> StageSetup:
    _check_mu_hypotheses(r, s)
    rs, _, _, V, _ = intersection_modules(l)
    V1, _, U1, _ = threshold_modules(l)
    chain = tuple(range(1, 2 * l))
    pivot_root = [min(p, l) for p in range(1, 2 * l + 2)]
    ref = {j: _ref([min(p, j) for p in range(1, 2 * l)] + [j, j], 2 * l - 1, -j)
           for j in range(1, 2 * l - 1)}
    ref[2 * l - 1] = _ref(list(range(1, 2 * l)) + [2 * l - 1] * 2, 2 * l - 2, -2 * l + 2)
    mu = _mu(rs, l, r, s)
    return StageSetup("step3", rs, V, U1, V1, chain, chain, mu, range(1, len(U1) + 1),
                      pivot={"j": l, "root": pivot_root}, reference=ref)


def stage_certificate(setup: StageSetup) -> VanishingCertificate:
    return verify_wedge_vanishing(setup.rs, setup.kernel, setup.j_range, setup.chain,
                                  setup.stable, setup.twist, setup.pivot, setup.reference,
                                  scenario=f"{setup.name}:{setup.rs.name}")


def koszul_cross_check(setup: StageSetup, n_max: int, skip: Sequence[int] = ()) -> dict:
    """Independent Euler-characteristic check of each Koszul term the replay certified.

    For every ``j`` in the stage range (minus ``skip``) and ``n <= n_max``,
    ``chi(S^{n-j} ambient (x) wedge^j kernel (x) twist)`` must be zero.
    Returns ``{(j, n): character}`` for the terms that are not.
    """
    rs = setup.rs
    cache: dict = {}
    bad = {}
    for j in setup.j_range:
        if j in skip:
            continue
        wedge = wedge_power_weights(setup.kernel, j, rank=rs.rank)
        for n in range(j, n_max + 1):
            sym = sym_power_weights(setup.ambient, n - j, rank=rs.rank)
            chi = euler_characteristic(rs, tensor(sym, wedge), setup.twist, cache)
            if chi:
                bad[(j, n)] = chi
    return bad

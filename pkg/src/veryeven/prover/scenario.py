"""Parameter scenarios ``(k, a, b)`` in type ``D_{2l}`` with ``ak + b = 2l``.

A scenario fixes the three parabolics whose nilradicals carry the functions
on the orbit closures of ``(a^{2k}, b+1, b-1)`` and ``(a^{2k}, b^2)``, the
intermediate parabolics and twists of the shift chain between them, and the
degree offset of every stage.  :func:`verify_main_ses` checks the three-term
character identity; :func:`audit_stages` checks every link of the chain.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..bmod import DEFAULT_CAP, nilradical_weights, split_intersection, sym_power_weights
from ..charlib import VirtualCharacter, euler_characteristic
from ..rootsys import ParabolicMarker, RootSystem, build_root_system, fundamental_weight

__all__ = [
    "ProofScenario",
    "Stage",
    "build_scenario",
    "levi_type",
    "expected_levi_types",
    "MainSESReport",
    "verify_main_ses",
    "audit_stages",
]


def levi_type(rs: RootSystem, marker: ParabolicMarker) -> list:
    """Sorted simple-factor types of the Levi of ``marker``, e.g. ``['A1', 'A3']``."""
    nodes = set(marker.levi_nodes(rs))
    seen: set = set()
    out = []
    for start in sorted(nodes):
        if start in seen:
            continue
        comp, todo = [], [start]
        seen.add(start)
        while todo:
            i = todo.pop()
            comp.append(i)
            for j in rs.neighbours(i - 1):
                if j + 1 in nodes and j + 1 not in seen:
                    seen.add(j + 1)
                    todo.append(j + 1)
        deg3 = any(sum(1 for j in rs.neighbours(i - 1) if j + 1 in comp) == 3 for i in comp)
        out.append(("D" if deg3 else "A") + str(len(comp)))
    return sorted(out, key=lambda t: (t[0], int(t[1:])))


def _sig(counter: Counter) -> list:
    return sorted(counter.elements(), key=lambda t: (t[0], int(t[1:])))


def expected_levi_types(k: int, a: int, b: int) -> dict:
    """Levi signatures required of ``P'``/``P''`` and of ``P``."""
    d = a - b
    prime = Counter({f"A{2 * k - 1}": d // 2 - 1, f"A{2 * k}": 2, f"A{2 * k + 1}": b // 2 - 1})
    small = Counter({f"A{2 * k - 1}": d // 2, f"A{2 * k + 1}": b // 2})
    return {"prime": _sig(+prime), "small": _sig(+small)}


@dataclass(frozen=True)
class Stage:
    """One link of the shift chain: ``S^{n - offset} Q* (x) twist``."""

    name: str
    marker: ParabolicMarker
    twist_root: tuple
    offset: int
    stated_offset: int
    shift_steps: str = ""

    def to_json(self, rs: RootSystem) -> dict:
        return {
            "name": self.name,
            "parabolic": sorted(self.marker.removed),
            "twist_root": list(self.twist_root),
            "twist_fund": list(rs.root_to_fund(self.twist_root)),
            "offset": self.offset,
            "stated_offset": self.stated_offset,
            "via": self.shift_steps,
        }


@dataclass
class ProofScenario:
    k: int
    a: int
    b: int
    rs: RootSystem = field(repr=False)
    P: ParabolicMarker = None
    P_prime: ParabolicMarker = None
    P_dprime: ParabolicMarker = None
    P1: ParabolicMarker = None
    Q: dict = field(default_factory=dict)
    mu: dict = field(default_factory=dict)
    nu: tuple = ()
    stages: list = field(default_factory=list)
    levi: dict = field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.a - self.b

    @property
    def l(self) -> int:
        return (self.a * self.k + self.b) // 2

    @property
    def id(self) -> str:
        return f"k{self.k}-a{self.a}-b{self.b}"

    @property
    def stated_exponent(self) -> int:
        """Degree drop of the correction term as written in the statement of the sequence."""
        return 2 * self.l + self.k * (self.a - 4) + 1

    @property
    def composed_exponent(self) -> int:
        """Degree drop obtained by composing the individual shifts of the chain."""
        return self.stages[-1].offset

    @property
    def orbit_partitions(self) -> dict:
        k, a, b = self.k, self.a, self.b
        return {"upper": [a] * (2 * k) + [b + 1, b - 1], "lower": [a] * (2 * k) + [b, b]}

    def to_json(self) -> dict:
        rs = self.rs
        return {
            "scenario": self.id,
            "k": self.k, "a": self.a, "b": self.b, "d": self.d, "l": self.l,
            "root_system": rs.name,
            "P": sorted(self.P.removed),
            "P_prime": sorted(self.P_prime.removed),
            "P_dprime": sorted(self.P_dprime.removed),
            "P1": sorted(self.P1.removed),
            "Q": {k: sorted(v.removed) for k, v in self.Q.items()},
            "mu_root": {k: list(v) for k, v in self.mu.items()},
            "nu": list(self.nu),
            "levi": self.levi,
            "stages": [s.to_json(rs) for s in self.stages],
            "stated_exponent": self.stated_exponent,
            "composed_exponent": self.composed_exponent,
        }


def _progression(start: int, step: int, stop: int) -> list:
    return list(range(start, stop + 1, step)) if start <= stop else []


def build_scenario(k: int, a: int, b: int) -> ProofScenario:
    """Instantiate the parabolics, twists and stage offsets for ``(k, a, b)``."""
    if k < 1:
        raise ValueError("k must be positive")
    if a <= 0 or b <= 0 or a % 2 or b % 2:
        raise ValueError("a and b must be positive even integers")
    if a == b:
        raise ValueError("a and b must be distinct")
    if a < b:
        raise ValueError(f"only a > b is constructed (got d = a - b = {a - b})")
    d = a - b
    l2 = a * k + b
    l = l2 // 2
    rs = build_root_system("D", l2)

    even_run = _progression(4 * k + 2, 2 * k, k * d + 2)           # 4k+2, 6k+2, ..., kd+2
    odd_run = _progression(2 * k + 1, 2 * k, k * d + 1)            # 2k+1, 4k+1, ..., kd+1
    tail_even = _progression(k * (d + 2) + 2, 2 * k + 2, l2 - 2 * k - 2)
    tail_odd = _progression(k * (d + 2) + 3, 2 * k + 2, l2 - 2 * k - 1)

    Pp = ParabolicMarker([2 * k + 1, *even_run, *tail_even, l2])
    Ppp = ParabolicMarker([2 * k + 1, *even_run, *tail_even, l2 - 1])
    P = ParabolicMarker([2 * k, *even_run, *tail_even, l2])
    P1 = ParabolicMarker([2 * k + 2, *even_run, *tail_even, l2])
    Q1 = ParabolicMarker([*odd_run, *tail_even, l2])
    Q2 = ParabolicMarker([*odd_run, *tail_odd, l2])
    Q3 = ParabolicMarker([*odd_run, *tail_odd, l2 - 1])
    Q4 = ParabolicMarker([2 * k + 1, *even_run, *tail_even, l2 - 1])

    exp = expected_levi_types(k, a, b)
    levi = {"P": levi_type(rs, P), "P_prime": levi_type(rs, Pp), "P_dprime": levi_type(rs, Ppp)}
    if levi["P_prime"] != exp["prime"] or levi["P_dprime"] != exp["prime"] or levi["P"] != exp["small"]:
        raise AssertionError(f"Levi types {levi} do not match the required {exp}")
    levi["expected"] = exp

    up = list(range(1, 2 * k + 1))
    down = list(range(2 * k, 0, -1))
    mu0 = up + [2 * k + 1] + down + [0] * (l2 - 4 * k - 1)
    mu1 = up + [2 * k + 1] * (k * (a - b - 2) + 1) + down + [0] * (k * (b - 2) + b - 1)
    mu2 = up + [2 * k + 1] * (l2 - 4 * k - 1) + down + [0]
    mu3 = up + [2 * k + 1] * (l2 - 4 * k - 1) + list(range(2 * k + 2, 4 * k + 1)) + [2 * k + 1, 2 * k]
    mu4 = list(range(1, 4 * k + 2)) + [4 * k + 2] * (l2 - 4 * k - 3) + [2 * k + 1, 2 * k + 1]
    mus = {"mu": mu0, "mu1": mu1, "mu2": mu2, "mu3": mu3}
    if a > 4:
        mus["mu4"] = mu4
    for name, v in mus.items():
        if len(v) != l2:
            raise AssertionError(f"{name} has length {len(v)}, expected {l2}")
    mus = {kk: tuple(v) for kk, v in mus.items()}
    if a > 4:
        nu = fundamental_weight(rs, 4 * k + 2)
    else:
        nu = tuple(2 * x for x in fundamental_weight(rs, l2 - 1))

    n_a1 = (a - b - 2) // 2              # shift-A applications with m' = 2k
    n_a2 = (b - 2) // 2                  # shift-A applications with m' = 2k + 1
    e0 = 2 * k + 1
    e1 = e0 + n_a1 * 2 * k
    e2 = e1 + n_a2 * (2 * k + 1)
    e3 = e2 + 2 * k                      # shift-D with r = -2 on D_{2k+1}
    stages = [
        Stage("mu", Pp, mus["mu"], e0, 2 * k + 1, "koszul"),
        Stage("mu1", Q1, mus["mu1"], e1, k * (a - b) + 1, f"{n_a1} x shift-A(m'={2 * k})"),
        Stage("mu2", Q2, mus["mu2"], e2, k * a - 2 * k + b // 2,
              f"{n_a2} x shift-A(m'={2 * k + 1})"),
        Stage("mu3", Q3, mus["mu3"], e3, k * a + b // 2, "shift-D(r=-2)"),
    ]
    if a > 4:
        e4 = e3 + n_a2 * (2 * k + 1) + n_a1 * 2 * k
        stages.append(Stage("mu4", Q4, mus["mu4"], e4, 2 * k * a - 4 * k + b + 1,
                            f"{n_a2} x shift-A(m'={2 * k + 1}) + {n_a1} x shift-A(m'={2 * k})"))
    final = stages[-1]
    if final.marker != Ppp:
        raise AssertionError(f"chain ends at {final.marker}, not {Ppp}")
    if rs.root_to_fund(final.twist_root) != nu:
        raise AssertionError(f"final twist {rs.root_to_fund(final.twist_root)} is not nu={nu}")

    return ProofScenario(k, a, b, rs, P, Pp, Ppp, P1,
                         {"Q1": Q1, "Q2": Q2, "Q3": Q3, **({"Q4": Q4} if a > 4 else {})},
                         mus, nu, stages, levi)


def _chi(rs, marker, n, twist, cache, cap):
    if n < 0:
        return VirtualCharacter()
    M = nilradical_weights(rs, marker)
    return euler_characteristic(rs, sym_power_weights(M, n, cap, rank=rs.rank), twist, cache)


@dataclass
class MainSESReport:
    scenario: str
    n: int
    exponent: int
    upper: VirtualCharacter
    lower: VirtualCharacter
    correction: VirtualCharacter

    @property
    def holds(self) -> bool:
        return self.upper == self.lower + self.correction

    @property
    def nonnegative(self) -> bool:
        return all(c.is_nonnegative() for c in (self.upper, self.lower, self.correction))

    def to_json(self) -> dict:
        return {
            "scenario": self.scenario,
            "n": self.n,
            "correction_degree": self.n - self.exponent,
            "holds": self.holds,
            "nonnegative": self.nonnegative,
            "chi_upper": self.upper.to_json(),
            "chi_lower": self.lower.to_json(),
            "chi_correction": self.correction.to_json(),
        }


def verify_main_ses(sc: ProofScenario, n: int, exponent: int | None = None,
                    cap: int = DEFAULT_CAP, cache: dict | None = None) -> MainSESReport:
    """``chi(S^n u_P'*) = chi(S^n u_P*) + chi(S^{n-e} u_P''* (x) nu)``.

    ``exponent`` defaults to the stated drop ``2l + k(a-4) + 1``; pass
    ``sc.composed_exponent`` to test the value the shift chain produces.
    """
    e = sc.stated_exponent if exponent is None else exponent
    cache = {} if cache is None else cache
    rs = sc.rs
    zero = (0,) * rs.rank
    upper = _chi(rs, sc.P_prime, n, zero, cache, cap)
    lower = _chi(rs, sc.P, n, zero, cache, cap)
    corr = _chi(rs, sc.P_dprime, n - e, sc.nu, cache, cap)
    return MainSESReport(sc.id, n, e, upper, lower, corr)


def audit_stages(sc: ProofScenario, m_max: int, cap: int = DEFAULT_CAP) -> list:
    """Check every link of the chain as its own character identity.

    Links checked, for all degrees up to ``m_max``:

    * ``chi(S^n u_P*) = chi(S^n V*)`` with ``V = u_P ∩ u_P1``;
    * ``chi(S^n u_P'*) = chi(S^n V*) + chi(S^{n-e0} u_P'* (x) mu)``;
    * for consecutive stages, ``chi(S^m Q_i* (x) mu_i) = chi(S^{m-D} Q_{i+1}* (x) mu_{i+1})``
      for the composed drop ``D`` and, where it differs, the stated drop.

    Returns a list of dicts, one per link and candidate drop, with ``holds``
    and the first failing degree (if any).
    """
    rs = sc.rs
    cache: dict = {}
    zero = (0,) * rs.rank
    out = []

    V, _ = split_intersection(rs, sc.P, sc.P1)
    fails = []
    for n in range(m_max + 1):
        lhs = _chi(rs, sc.P, n, zero, cache, cap)
        rhs = euler_characteristic(rs, sym_power_weights(V, n, cap, rank=rs.rank), None, cache)
        if lhs != rhs:
            fails.append(n)
    out.append({"link": "u_P -> V", "drop": 0, "holds": not fails,
                "first_failure": fails[0] if fails else None, "degrees": m_max})

    first = sc.stages[0]
    tw0 = rs.root_to_fund(first.twist_root)
    fails = []
    for n in range(m_max + 1):
        lhs = _chi(rs, sc.P_prime, n, zero, cache, cap)
        rhs = (euler_characteristic(rs, sym_power_weights(V, n, cap, rank=rs.rank), None, cache)
               + _chi(rs, sc.P_prime, n - first.offset, tw0, cache, cap))
        if lhs != rhs:
            fails.append(n)
    out.append({"link": "u_P' -> V + mu", "drop": first.offset, "holds": not fails,
                "first_failure": fails[0] if fails else None, "degrees": m_max})

    for prev, cur in zip(sc.stages, sc.stages[1:]):
        composed = cur.offset - prev.offset
        stated = cur.stated_offset - prev.stated_offset
        candidates = [("composed", composed)]
        if stated != composed:
            candidates.append(("stated", stated))
        tw_prev = rs.root_to_fund(prev.twist_root)
        tw_cur = rs.root_to_fund(cur.twist_root)
        for label, drop in candidates:
            fails = []
            for m in range(m_max + 1):
                lhs = _chi(rs, prev.marker, m, tw_prev, cache, cap)
                rhs = _chi(rs, cur.marker, m - drop, tw_cur, cache, cap)
                if lhs != rhs:
                    fails.append(m)
            out.append({"link": f"{prev.name} -> {cur.name}", "candidate": label, "drop": drop,
                        "holds": not fails, "first_failure": fails[0] if fails else None,
                        "degrees": m_max})
    return out

"""Euler-characteristic identities: the two shift theorems and the odd-D Koszul stages.

Each verifier returns a :class:`IdentityReport` with both sides as virtual
characters.  Symmetric powers of negative degree are the zero module.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..bmod import DEFAULT_CAP, nilradical_weights, sym_power_weights
from ..charlib import VirtualCharacter, euler_characteristic
from ..rootsys import ParabolicMarker, RootSystem, fundamental_weight
from .replay import _check_mu_hypotheses, _mu, intersection_modules, threshold_modules

__all__ = [
    "IdentityReport",
    "shift_a_range",
    "verify_shift_identity",
    "verify_step1_identity",
    "verify_step2_vanishing",
    "verify_step3_pivot",
]


@dataclass
class IdentityReport:
    name: str
    params: dict
    left: VirtualCharacter
    right: VirtualCharacter
    extra: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.left == self.right

    def to_json(self) -> dict:
        out = {
            "identity": self.name,
            "params": self.params,
            "holds": self.holds,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }
        out.update(self.extra)
        return out


def _chi_sym(rs, M, n, twist, cache, cap=DEFAULT_CAP):
    if n < 0:
        return VirtualCharacter()
    return euler_characteristic(rs, sym_power_weights(M, n, cap, rank=rs.rank), twist, cache)


def _scaled(rs, i, r):
    return tuple(r * x for x in fundamental_weight(rs, i))


def shift_a_range(l: int, m: int) -> range:
    """Admissible ``r`` for the type-A shift with ``SL_{l+1}`` and maximal parabolic ``m``."""
    mp = min(m, l + 1 - m)
    return range(2 * mp - 2 - l, 1)


def verify_shift_identity(rs: RootSystem, variant: str, params: dict, n: int,
                          cache: dict | None = None, cap: int = DEFAULT_CAP) -> IdentityReport:
    """Compare ``chi`` of both sides of a shift isomorphism at degree ``n``.

    ``variant="A"`` (``rs`` of type ``A_l``; params ``m``, ``r``)::

        S^n u_m* (x) r w_m   ~   S^{n + r m'} u_{l+1-m}* (x) -r w_{l+1-m},  m' = min(m, l+1-m)

    ``variant="D"`` (``rs`` of type ``D_{2l+1}``; param ``r``)::

        S^n u_P* (x) r w_{2l}   ~   S^{n + r l} u_P'* (x) -r w_{2l+1},  P = {2l}, P' = {2l+1}
    """
    cache = {} if cache is None else cache
    r = params["r"]
    if variant == "A":
        if rs.family != "A":
            raise ValueError("variant A needs a type-A root system")
        l, m = rs.rank, params["m"]
        if not 1 <= m <= l:
            raise ValueError(f"m={m} outside 1..{l}")
        rng = shift_a_range(l, m)
        if r not in rng:
            raise ValueError(f"r={r} outside the admissible range {rng.start}..0 for l={l}, m={m}")
        mp = min(m, l + 1 - m)
        m2 = l + 1 - m
        left = _chi_sym(rs, nilradical_weights(rs, ParabolicMarker([m])), n,
                        _scaled(rs, m, r), cache, cap)
        right = _chi_sym(rs, nilradical_weights(rs, ParabolicMarker([m2])), n + r * mp,
                         _scaled(rs, m2, -r), cache, cap)
        return IdentityReport("shift-A", {"l": l, "m": m, "r": r, "n": n}, left, right,
                              {"right_degree": n + r * mp})
    if variant == "D":
        if rs.family != "D" or rs.rank % 2 == 0:
            raise ValueError("variant D needs a root system of type D_{2l+1}")
        l = (rs.rank - 1) // 2
        if not -3 <= r <= 0:
            raise ValueError(f"r={r} outside the admissible range -3..0")
        left = _chi_sym(rs, nilradical_weights(rs, ParabolicMarker([2 * l])), n,
                        _scaled(rs, 2 * l, r), cache, cap)
        right = _chi_sym(rs, nilradical_weights(rs, ParabolicMarker([2 * l + 1])), n + r * l,
                         _scaled(rs, 2 * l + 1, -r), cache, cap)
        return IdentityReport("shift-D", {"l": l, "r": r, "n": n}, left, right,
                              {"right_degree": n + r * l})
    raise ValueError(f"unknown variant {variant!r}")


def verify_step1_identity(l: int, r: int, n: int, cache: dict | None = None) -> IdentityReport:
    """``chi(S^n u_P* (x) r w_{2l}) = chi(S^n V* (x) r w_{2l})`` in ``D_{2l+1}``."""
    cache = {} if cache is None else cache
    rs, uP, _, V, _ = intersection_modules(l)
    tw = _scaled(rs, 2 * l, r)
    return IdentityReport("step1", {"l": l, "r": r, "n": n},
                          _chi_sym(rs, uP, n, tw, cache), _chi_sym(rs, V, n, tw, cache))


def verify_step2_vanishing(l: int, r: int, s: int, n: int,
                           cache: dict | None = None) -> IdentityReport:
    """``chi(S^n V_1* (x) mu) = 0`` and ``chi(S^n V_2* (x) mu) = 0`` for ``mu = r w_{2l} + s w_{2l+1}``."""
    _check_mu_hypotheses(r, s)
    cache = {} if cache is None else cache
    rs, *_ = intersection_modules(l)
    V1, V2, _, _ = threshold_modules(l)
    mu = _mu(rs, l, r, s)
    left = _chi_sym(rs, V1, n, mu, cache)
    quotient = _chi_sym(rs, V2, n, mu, cache)
    return IdentityReport("step2", {"l": l, "r": r, "s": s, "n": n}, left, VirtualCharacter(),
                          {"quotient_chi": quotient.to_json(), "quotient_vanishes": not quotient})


def verify_step3_pivot(rs: RootSystem, l: int, mu_params: dict, n: int,
                       cache: dict | None = None) -> IdentityReport:
    """``chi(S^n V* (x) mu) = chi(S^{n-l} V* (x) (mu + w_{2l} + w_{2l+1}))``."""
    r, s = mu_params["r"], mu_params.get("s", 0)
    _check_mu_hypotheses(r, s)
    if rs.family != "D" or rs.rank != 2 * l + 1:
        raise ValueError(f"expected D{2 * l + 1}, got {rs.name}")
    cache = {} if cache is None else cache
    _, _, _, V, _ = intersection_modules(l)
    mu = _mu(rs, l, r, s)
    shifted = _mu(rs, l, r + 1, s + 1)
    left = _chi_sym(rs, V, n, mu, cache)
    right = _chi_sym(rs, V, n - l, shifted, cache)
    return IdentityReport("step3", {"l": l, "r": r, "s": s, "n": n}, left, right)

"""Borel-Weil-Bott for line bundles and Euler characteristics on G/B.

Convention: B is attached to the negative roots, so ``H^0(G/B, L_lambda)`` is
the Weyl module of highest weight ``lambda`` when ``lambda`` is dominant.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .bmod import WeightMultiset
from .rootsys import RootSystem, Singular, dominant_conjugate_dot

__all__ = [
    "VirtualCharacter",
    "Vanishes",
    "BottTerm",
    "bott_line_bundle",
    "euler_characteristic",
    "weyl_dimension",
]


class VirtualCharacter:
    """Finite integer combination of Weyl modules, keyed by dominant highest weight."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping | None = None):
        t: dict = {}
        for w, c in (terms or {}).items():
            w = tuple(w)
            if any(x < 0 for x in w):
                raise ValueError(f"{w} is not dominant")
            if c:
                t[w] = t.get(w, 0) + c
        self._t = {w: c for w, c in t.items() if c}

    @classmethod
    def _wrap(cls, t: dict) -> "VirtualCharacter":
        out = cls.__new__(cls)
        out._t = {w: c for w, c in t.items() if c}
        return out

    @classmethod
    def irreducible(cls, w: Sequence) -> "VirtualCharacter":
        return cls({tuple(w): 1})

    def items(self):
        return sorted(self._t.items())

    def __getitem__(self, w) -> int:
        return self._t.get(tuple(w), 0)

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._t
        return isinstance(other, VirtualCharacter) and self._t == other._t

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        t = dict(self._t)
        for w, c in other._t.items():
            t[w] = t.get(w, 0) + c
        return VirtualCharacter._wrap(t)

    def __neg__(self) -> "VirtualCharacter":
        return VirtualCharacter._wrap({w: -c for w, c in self._t.items()})

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return self + (-other)

    def __mul__(self, k: int) -> "VirtualCharacter":
        return VirtualCharacter._wrap({w: k * c for w, c in self._t.items()})

    __rmul__ = __mul__

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._t.values())

    def dimension(self, rs: RootSystem) -> int:
        return sum(c * weyl_dimension(rs, w) for w, c in self._t.items())

    def to_json(self) -> list:
        return [[list(w), c] for w, c in self.items()]

    @classmethod
    def from_json(cls, data) -> "VirtualCharacter":
        return cls({tuple(w): c for w, c in data})

    def __repr__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for w, c in self.items():
            coef = "" if c == 1 else ("-" if c == -1 else f"{c}")
            parts.append(f"{coef}V{w}")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class Vanishes:
    def __repr__(self) -> str:
        return "Vanishes"


@dataclass(frozen=True)
class BottTerm:
    """Cohomology concentrated in ``degree`` and equal to the Weyl module ``highest_weight``."""

    degree: int
    highest_weight: tuple


def bott_line_bundle(rs: RootSystem, weight: Sequence):
    """Cohomology of ``L_weight`` on G/B: :class:`Vanishes` or a :class:`BottTerm`."""
    res = dominant_conjugate_dot(rs, weight)
    if isinstance(res, Singular):
        return Vanishes()
    return BottTerm(res.length, res.dominant)


def euler_characteristic(rs: RootSystem, M: WeightMultiset, twist: Sequence | None = None,
                         cache: dict | None = None) -> VirtualCharacter:
    """Alternating sum of cohomology of ``M (x) twist`` computed weight by weight.

    Only the Euler characteristic is determined by the weights of a filtered
    module; individual cohomology groups are not.  ``cache`` may be shared
    across calls on the same root system to memoise Bott evaluations.
    """
    if twist is None:
        twist = (0,) * rs.rank
    twist = tuple(twist)
    if cache is None:
        cache = {}
    acc: dict = {}
    for w, m in M.items():
        lam = tuple(a + b for a, b in zip(w, twist))
        hit = cache.get(lam)
        if hit is None:
            res = dominant_conjugate_dot(rs, lam)
            hit = cache[lam] = (None if isinstance(res, Singular)
                                else (-1 if res.length % 2 else 1, res.dominant))
        if hit is not None:
            sign, dom = hit
            acc[dom] = acc.get(dom, 0) + sign * m
    return VirtualCharacter._wrap(acc)


def weyl_dimension(rs: RootSystem, weight: Sequence) -> int:
    """Dimension of the Weyl module with dominant highest weight ``weight``."""
    if any(x < 0 for x in weight):
        raise ValueError(f"{tuple(weight)} is not dominant")
    num = 1
    den = 1
    for root in rs.positive_roots:
        num *= sum(c * (x + 1) for c, x in zip(root, weight))
        den *= sum(root)
    out = Fraction(num, den)
    assert out.denominator == 1
    return int(out)

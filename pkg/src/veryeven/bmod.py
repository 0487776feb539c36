"""T-weight bookkeeping for B-stable modules on G/B.

A :class:`WeightMultiset` is a finite multiset of weights (fundamental
coordinates).  The constructors here produce the weight content of
nilradical duals, their intersections and quotients, threshold submodules,
and symmetric / exterior powers.  Nilradical duals carry positive-root
weights (B is attached to the negative roots).
"""
from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .rootsys import ParabolicMarker, RootSystem, root_geq

DEFAULT_CAP = 2_000_000


class ResourceCapExceeded(RuntimeError):
    """A multiset construction would exceed the configured number of entries."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: {size} distinct weights exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class WeightMultiset:
    """Weights with positive integer multiplicities."""

    __slots__ = ("_d",)

    def __init__(self, entries: Mapping | Iterable = ()):
        d: dict = {}
        if isinstance(entries, Mapping):
            items = entries.items()
        else:
            items = ((w, 1) for w in entries)
        for w, m in items:
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {w}")
            if m:
                w = tuple(w)
                d[w] = d.get(w, 0) + m
        self._d = d

    @classmethod
    def _wrap(cls, d: dict) -> "WeightMultiset":
        out = cls.__new__(cls)
        out._d = d
        return out

    def __len__(self) -> int:
        """Total size, counted with multiplicity."""
        return sum(self._d.values())

    @property
    def distinct(self) -> int:
        return len(self._d)

    def items(self):
        return self._d.items()

    def __iter__(self):
        """Iterate weights with repetition, in lexicographic order."""
        for w in sorted(self._d):
            for _ in range(self._d[w]):
                yield w

    def __contains__(self, w) -> bool:
        return tuple(w) in self._d

    def __getitem__(self, w) -> int:
        return self._d.get(tuple(w), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightMultiset) and self._d == other._d

    def __add__(self, other: "WeightMultiset") -> "WeightMultiset":
        """Multiset union (direct sum of modules)."""
        d = dict(self._d)
        for w, m in other._d.items():
            d[w] = d.get(w, 0) + m
        return WeightMultiset._wrap(d)

    def __sub__(self, other: "WeightMultiset") -> "WeightMultiset":
        d = dict(self._d)
        for w, m in other._d.items():
            left = d.get(w, 0) - m
            if left < 0:
                raise ValueError(f"{w} has multiplicity {d.get(w, 0)} < {m}")
            if left:
                d[w] = left
            else:
                d.pop(w, None)
        return WeightMultiset._wrap(d)

    def shifted(self, t: Sequence) -> "WeightMultiset":
        """Tensor with the one-dimensional module of weight ``t``."""
        t = tuple(t)
        return WeightMultiset._wrap({tuple(a + b for a, b in zip(w, t)): m
                                     for w, m in self._d.items()})

    def sorted_items(self) -> list:
        return sorted(self._d.items())

    def __repr__(self) -> str:
        body = ", ".join(f"{w}:{m}" if m > 1 else f"{w}" for w, m in self.sorted_items()[:6])
        more = "" if self.distinct <= 6 else ", ..."
        return f"WeightMultiset({{{body}{more}}}, size={len(self)})"


def from_roots(rs: RootSystem, roots: Iterable[Sequence]) -> WeightMultiset:
    """Weight multiset of a list of roots given in root coordinates."""
    return WeightMultiset(rs.root_to_fund(r) for r in roots)


def root_view(rs: RootSystem, M: WeightMultiset) -> list:
    """Root-coordinate view of the weights of ``M`` (with repetition)."""
    return [rs.fund_to_root_int(w) for w in M]


def nilradical_roots(rs: RootSystem, P: ParabolicMarker) -> list:
    """Positive roots (root coordinates) with a positive coefficient on a removed simple root."""
    P.validate(rs)
    idx = [i - 1 for i in P.removed]
    return [r for r in rs.positive_roots if any(r[i] > 0 for i in idx)]


def nilradical_weights(rs: RootSystem, P: ParabolicMarker) -> WeightMultiset:
    return from_roots(rs, nilradical_roots(rs, P))


def split_intersection(rs: RootSystem, P: ParabolicMarker, Pp: ParabolicMarker):
    """Return ``(V, U)`` with V the weights common to both nilradical duals and U the rest of u_P*."""
    uP = nilradical_weights(rs, P)
    uPp = nilradical_weights(rs, Pp)
    V = WeightMultiset._wrap({w: m for w, m in uP.items() if w in uPp})
    return V, uP - V


def threshold_submodule(rs: RootSystem, M: WeightMultiset, theta: Sequence) -> WeightMultiset:
    """Weights of ``M`` that are roots bigger than or equal to ``theta`` (root coordinates)."""
    theta = tuple(theta)
    if theta not in rs.positive_roots:
        raise ValueError(f"{theta} is not a positive root of {rs.name}")
    keep = {}
    for w, m in M.items():
        v = rs.fund_to_root(w)
        if all(x.denominator == 1 for x in v) and root_geq(rs, v, theta):
            keep[w] = m
    return WeightMultiset._wrap(keep)


def sym_power_levels(M: WeightMultiset, n: int, cap: int = DEFAULT_CAP) -> list:
    """Weight dictionaries of ``S^0 M, ..., S^n M``.

    Degree-recursive convolution: weights are absorbed one at a time and each
    degree level is updated in increasing order, so every multiset of weights
    is produced exactly once.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    rank = len(next(iter(M.items()))[0]) if M.distinct else 0
    levels = [{(0,) * rank: 1}] + [{} for _ in range(n)]
    for w, mult in M.sorted_items():
        for _ in range(mult):
            for d in range(1, n + 1):
                src = levels[d - 1]
                if not src:
                    continue
                dst = levels[d]
                for u, c in src.items():
                    key = tuple(a + b for a, b in zip(u, w))
                    dst[key] = dst.get(key, 0) + c
                if len(dst) > cap:
                    raise ResourceCapExceeded(f"S^{d}", len(dst), cap)
    return levels


def sym_power_weights(M: WeightMultiset, n: int, cap: int = DEFAULT_CAP,
                      rank: int | None = None) -> WeightMultiset:
    """Weights of ``S^n M``; a negative degree gives the zero module.

    ``rank`` is only consulted when ``M`` is empty and ``n == 0``.
    """
    if n < 0:
        return WeightMultiset()
    if M.distinct == 0:
        return WeightMultiset({(0,) * (rank or 0): 1}) if n == 0 else WeightMultiset()
    return WeightMultiset._wrap(sym_power_levels(M, n, cap)[n])


def wedge_power_weights(M: WeightMultiset, j: int, cap: int = DEFAULT_CAP,
                        rank: int | None = None) -> WeightMultiset:
    """Weights of the j-th exterior power: sums over j-element sub-multisets without repetition."""
    size = len(M)
    if not 0 <= j <= size:
        raise ValueError(f"wedge degree {j} outside 0..{size}")
    if M.distinct:
        rank = len(next(iter(M.items()))[0])
    rank = rank or 0
    levels = [{(0,) * rank: 1}] + [{} for _ in range(j)]
    for w, mult in M.sorted_items():
        for _ in range(mult):
            for d in range(j, 0, -1):
                src = levels[d - 1]
                dst = levels[d]
                for u, c in src.items():
                    key = tuple(a + b for a, b in zip(u, w))
                    dst[key] = dst.get(key, 0) + c
                if len(dst) > cap:
                    raise ResourceCapExceeded(f"wedge^{d}", len(dst), cap)
    return WeightMultiset._wrap(levels[j])


def tensor(M: WeightMultiset, N: WeightMultiset, cap: int = DEFAULT_CAP) -> WeightMultiset:
    """Weights of ``M (x) N``: all pairwise sums, multiplicities multiplied."""
    d: dict = {}
    for u, a in M.items():
        for v, b in N.items():
            key = tuple(x + y for x, y in zip(u, v))
            d[key] = d.get(key, 0) + a * b
        if len(d) > cap:
            raise ResourceCapExceeded("tensor", len(d), cap)
    return WeightMultiset._wrap(d)

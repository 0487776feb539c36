"""Root systems of types A_n and D_n in exact integer arithmetic.

Weights are plain tuples of Python ints in fundamental-weight coordinates,
``w[i] = <w, alpha_{i+1}^vee>``.  Root coordinates (coefficients on the simple
roots) are a derived view and may be rational.

Node labels follow the usual chain convention: in type A the simple roots
form a path ``1 - 2 - ... - n``; in type D_n the path is ``1 - ... - (n-2)``
with nodes ``n-1`` and ``n`` both attached to ``n-2``.  Public functions take
1-based simple-root indices; tuples are 0-based internally.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Weight = tuple  # tuple[int, ...] in fundamental coordinates

__all__ = [
    "RootSystem",
    "ParabolicMarker",
    "Singular",
    "DotConjugate",
    "build_root_system",
    "pairing",
    "convert_coordinates",
    "dominant_conjugate_dot",
    "root_geq",
    "fundamental_weight",
    "simple_root",
]


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    C = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        C[i][i] = 2
    if family == "A":
        edges = [(i, i + 1) for i in range(rank - 1)]
    else:
        edges = [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    for i, j in edges:
        C[i][j] = C[j][i] = -1
    return tuple(tuple(row) for row in C)


def _invert_rational(C) -> tuple[tuple[Fraction, ...], ...]:
    n = len(C)
    M = [[Fraction(C[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [x / p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return tuple(tuple(row[n:]) for row in M)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple = field(repr=False)
    positive_roots: tuple = field(repr=False)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def cartan_inverse(self):
        return _invert_rational(self.cartan)

    @cached_property
    def positive_roots_fund(self) -> tuple:
        """Positive roots in fundamental coordinates, aligned with ``positive_roots``."""
        return tuple(self.root_to_fund(r) for r in self.positive_roots)

    @cached_property
    def highest_root(self) -> tuple:
        return max(self.positive_roots, key=sum)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def root_to_fund(self, v: Sequence) -> Weight:
        C = self.cartan
        return tuple(sum(C[i][j] * v[j] for j in range(self.rank)) for i in range(self.rank))

    def fund_to_root(self, w: Sequence) -> tuple:
        Ci = self.cartan_inverse
        return tuple(sum(Ci[i][j] * w[j] for j in range(self.rank)) for i in range(self.rank))

    def fund_to_root_int(self, w: Sequence) -> tuple:
        """Root coordinates of a weight in the root lattice; raises otherwise."""
        v = self.fund_to_root(w)
        if any(x.denominator != 1 for x in v):
            raise ValueError(f"{tuple(w)} is not in the root lattice of {self.name}")
        return tuple(int(x) for x in v)

    def is_root(self, v: Sequence) -> bool:
        v = tuple(v)
        return v in self._root_set or tuple(-x for x in v) in self._root_set

    @cached_property
    def _root_set(self) -> frozenset:
        return frozenset(self.positive_roots)

    def neighbours(self, i: int) -> list[int]:
        """0-based indices adjacent to node ``i`` (0-based) in the Dynkin diagram."""
        return [j for j in range(self.rank) if j != i and self.cartan[i][j] != 0]

    def reflect(self, w: Sequence, i: int) -> Weight:
        """Simple reflection ``s_i`` (0-based) on a weight in fundamental coordinates."""
        c = w[i]
        if c == 0:
            return tuple(w)
        col = self.cartan
        return tuple(w[j] - c * col[j][i] for j in range(self.rank))

    def pairing_with_root(self, w: Sequence, root: Sequence) -> int:
        """``<w, beta^vee>`` for a positive root given in root coordinates (simply laced)."""
        return sum(c * x for c, x in zip(root, w))


@dataclass(frozen=True)
class ParabolicMarker:
    """A standard parabolic, recorded by the simple roots NOT in its Levi factor."""

    removed: frozenset

    def __init__(self, removed: Iterable[int] = ()):
        object.__setattr__(self, "removed", frozenset(int(i) for i in removed))

    def validate(self, rs: RootSystem) -> None:
        bad = [i for i in self.removed if not 1 <= i <= rs.rank]
        if bad:
            raise ValueError(f"marker indices {sorted(bad)} out of range for {rs.name}")

    def levi_nodes(self, rs: RootSystem) -> list[int]:
        return [i for i in range(1, rs.rank + 1) if i not in self.removed]

    def __iter__(self):
        return iter(sorted(self.removed))

    def __repr__(self) -> str:
        return "P{" + ",".join(map(str, sorted(self.removed))) + "}"


def build_root_system(family: str, rank: int) -> RootSystem:
    family = family.upper()
    if family == "A":
        if rank < 1:
            raise ValueError("type A needs rank >= 1")
    elif family == "D":
        if rank < 3:
            raise ValueError("type D needs rank >= 3")
    else:
        raise ValueError(f"unsupported family {family!r}; only A and D are implemented")
    C = _cartan_matrix(family, rank)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    # beta + alpha_i is a root iff the alpha_i-string through beta extends upward:
    # q = p - <beta, alpha_i^vee> > 0
    while frontier:
        new = []
        for beta in frontier:
            for i in range(rank):
                pair = sum(C[i][j] * beta[j] for j in range(rank))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        new.append(up)
        frontier = new
    ordered = tuple(sorted(roots, key=lambda r: (sum(r), r)))
    return RootSystem(family, rank, C, ordered)


def _check_index(rs: RootSystem, i: int) -> None:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple root index {i} out of range 1..{rs.rank}")


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    _check_index(rs, i)
    return tuple(int(j == i - 1) for j in range(rs.rank))


def simple_root(rs: RootSystem, i: int) -> Weight:
    """alpha_i in fundamental coordinates (a column of the Cartan matrix)."""
    _check_index(rs, i)
    return tuple(rs.cartan[j][i - 1] for j in range(rs.rank))


def pairing(rs: RootSystem, weight: Sequence, i: int, *, coords: str = "fund") -> int:
    """``<weight, alpha_i^vee>`` for a weight in fundamental or root coordinates."""
    _check_index(rs, i)
    if coords == "fund":
        return weight[i - 1]
    if coords == "root":
        val = sum(rs.cartan[i - 1][j] * weight[j] for j in range(rs.rank))
        return int(val) if Fraction(val).denominator == 1 else val
    raise ValueError(f"unknown coordinate system {coords!r}")


def convert_coordinates(rs: RootSystem, vector: Sequence, direction: str) -> tuple:
    """Convert between root and fundamental coordinates.

    ``direction`` is ``"root->fund"`` (Cartan contraction, always integral for
    integral input) or ``"fund->root"`` (inverse, possibly rational).
    """
    if len(vector) != rs.rank:
        raise ValueError(f"expected a vector of length {rs.rank}, got {len(vector)}")
    if direction == "root->fund":
        out = rs.root_to_fund(vector)
        return tuple(int(x) if Fraction(x).denominator == 1 else x for x in out)
    if direction == "fund->root":
        return rs.fund_to_root(vector)
    raise ValueError(f"unknown direction {direction!r}")


class Singular:
    """Marker returned when ``w + rho`` lies on a reflecting hyperplane."""

    def __repr__(self) -> str:
        return "Singular"

    def __eq__(self, other) -> bool:
        return isinstance(other, Singular)

    def __hash__(self) -> int:
        return hash("Singular")


@dataclass(frozen=True)
class DotConjugate:
    length: int
    dominant: Weight


SINGULAR = Singular()


def dominant_conjugate_dot(rs: RootSystem, weight: Sequence, rng: random.Random | None = None):
    """Move ``weight`` to the dominant chamber under the dot action.

    Reflects ``weight + rho`` by simple reflections at negative coordinates
    until it is dominant.  Returns :data:`SINGULAR` as soon as a zero
    coordinate appears, otherwise a :class:`DotConjugate` holding the number
    of reflections used and the dominant weight minus rho.

    The canonical run reflects at the lowest negative index; passing ``rng``
    picks the index at random instead (used to test well-definedness).
    """
    v = [x + 1 for x in weight]
    n = rs.rank
    C = rs.cartan
    length = 0
    while True:
        if 0 in v:
            return SINGULAR
        if rng is None:
            i = next((j for j in range(n) if v[j] < 0), -1)
        else:
            neg = [j for j in range(n) if v[j] < 0]
            i = rng.choice(neg) if neg else -1
        if i < 0:
            return DotConjugate(length, tuple(x - 1 for x in v))
        c = v[i]
        for j in range(n):
            v[j] -= c * C[j][i]
        length += 1


def root_geq(rs: RootSystem, alpha: Sequence, beta: Sequence) -> bool:
    """Usual partial order on roots: ``alpha - beta`` has nonnegative root coordinates."""
    if len(alpha) != rs.rank or len(beta) != rs.rank:
        raise ValueError("root vectors must have length rank")
    return all(x >= y for x, y in zip(alpha, beta))

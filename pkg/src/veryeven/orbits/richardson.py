"""Richardson orbits by sampling: Jordan type of a random element of ``u_P``.

so(2n) is realised as the ``2n x 2n`` matrices ``X`` with ``X^T J + J X = 0``
for the antidiagonal ``J``.  The diagonal torus is
``diag(t_1, ..., t_n, -t_n, ..., -t_1)`` and the upper-triangular matrices form
the Borel subalgebra, so every nilradical is strictly upper triangular.

Very even label convention.  For ``x`` with all Jordan blocks even the space
``L(x) = sum_j x^j ker(x^{2j})`` is a Lagrangian (on a block of size ``2m`` it
is ``x^m`` of the block), and ``L(gxg^-1) = g L(x)``.  SO(2n) preserves each of
the two families of Lagrangians, i.e. the two half-spin weights, while O(2n)
swaps them.  Label ``"I"`` means ``L(x)`` lies in the family of
``E = span(e_1, ..., e_n)`` (``dim L ∩ E ≡ n mod 2``), ``"II"`` the other.
"""
from __future__ import annotations

import random

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ..rootsys import ParabolicMarker, RootSystem
from .partitions import LabeledPartition, dominates, is_very_even

__all__ = ["RichardsonNotStabilized", "so_root_matrix", "nilradical_basis", "jordan_type",
           "lagrangian_label", "sample_jordan_types", "richardson_orbit"]

COEFF_RANGE = [c for c in range(-9, 10) if c]


class RichardsonNotStabilized(RuntimeError):
    pass


def _e_coords(rs: RootSystem, root) -> list:
    n = rs.rank
    c = list(root)
    v = [0] * n
    for k in range(n):
        v[k] = c[k] - (c[k - 1] if k else 0)
    # alpha_n = e_{n-1} + e_n
    v[n - 2] = c[n - 2] + c[n - 1] - (c[n - 3] if n > 2 else 0)
    v[n - 1] = c[n - 1] - c[n - 2]
    return v


def so_root_matrix(rs: RootSystem, root) -> dict:
    """Sparse root vector ``{(row, col): entry}`` (0-based) for a positive root of ``D_n``."""
    if rs.family != "D":
        raise ValueError("so(2n) realisation needs type D")
    n2 = 2 * rs.rank
    v = _e_coords(rs, root)
    nz = [k for k, x in enumerate(v) if x]
    if len(nz) != 2:
        raise ValueError(f"{tuple(root)} is not a root of {rs.name}")
    i, j = nz
    if v[i] == 1 and v[j] == -1:          # e_i - e_j
        return {(i, j): 1, (n2 - 1 - j, n2 - 1 - i): -1}
    if v[i] == 1 and v[j] == 1:           # e_i + e_j
        return {(i, n2 - 1 - j): 1, (j, n2 - 1 - i): -1}
    raise ValueError(f"{tuple(root)} is not a positive root")


def nilradical_basis(rs: RootSystem, P: ParabolicMarker) -> list:
    P.validate(rs)
    return [so_root_matrix(rs, r) for r in rs.positive_roots
            if any(r[i - 1] for i in P.removed)]


def _dense(n2: int, entries: dict) -> DomainMatrix:
    rows = [[QQ(0)] * n2 for _ in range(n2)]
    for (i, j), x in entries.items():
        rows[i][j] = QQ(x)
    return DomainMatrix(rows, (n2, n2), QQ)


def jordan_type(X: DomainMatrix) -> tuple:
    """Jordan partition of a nilpotent matrix from the ranks of its powers."""
    N = X.shape[0]
    ranks = [N]
    Y = X
    while ranks[-1]:
        ranks.append(Y.rank())
        if ranks[-1] == ranks[-2]:
            raise ValueError("matrix is not nilpotent")
        Y = Y * X
    ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]   # blocks of size >= k
    ge.append(0)
    parts = []
    for k in range(1, len(ge)):
        parts += [k] * (ge[k - 1] - ge[k])
    return tuple(sorted(parts, reverse=True))


def _columns(M: DomainMatrix) -> list:
    return [list(col) for col in zip(*M.to_list())]


def lagrangian_label(X: DomainMatrix, n: int) -> str:
    """Label ``"I"``/``"II"`` of a very even nilpotent (see module docstring)."""
    n2 = 2 * n
    cols = []
    power = X
    j = 1
    while True:
        P2 = power * power                       # x^{2j}
        K = P2.nullspace()                       # rows span ker x^{2j}
        if K.shape[0]:
            cols += _columns(power * K.transpose())
        if K.shape[0] == n2:
            break
        power = power * X
        j += 1
    L = DomainMatrix([list(r) for r in zip(*cols)], (n2, len(cols)), QQ)
    dimL = L.rank()
    if dimL != n:
        raise AssertionError(f"L(x) has dimension {dimL}, expected {n}")
    E = [[QQ(1) if r == c else QQ(0) for c in range(n)] for r in range(n2)]
    LE = DomainMatrix([L.to_list()[r] + E[r] for r in range(n2)], (n2, len(cols) + n), QQ)
    meet = dimL + n - LE.rank()
    return "I" if (meet - n) % 2 == 0 else "II"


def sample_jordan_types(rs: RootSystem, P: ParabolicMarker, seed: int = 0,
                        trials: int = 7) -> list:
    """Labeled Jordan types of ``trials`` random elements of ``u_P``."""
    basis = nilradical_basis(rs, P)
    rng = random.Random(seed)
    n = rs.rank
    out = []
    for _ in range(trials):
        entries: dict = {}
        for E in basis:
            c = rng.choice(COEFF_RANGE)
            for key, x in E.items():
                entries[key] = entries.get(key, 0) + c * x
        X = _dense(2 * n, entries)
        parts = jordan_type(X)
        label = lagrangian_label(X, n) if is_very_even(parts) else None
        out.append(LabeledPartition(parts, label))
    return out


def richardson_orbit(rs: RootSystem, P: ParabolicMarker, seed: int = 0,
                     trials: int = 7) -> LabeledPartition:
    """Generic Jordan type on ``u_P``: the dominance-maximal sample, required twice."""
    if rs.family != "D":
        raise ValueError("richardson_orbit needs a type-D root system")
    if trials < 2:
        raise ValueError("need at least two trials to confirm the generic type")
    samples = sample_jordan_types(rs, P, seed, trials)
    top = [s for s in samples if all(dominates(s.parts, t.parts) for t in samples)]
    if not top:
        raise RichardsonNotStabilized(
            f"no dominance-maximal sample among {[str(s) for s in samples]}")
    best = top[0]
    hits = [s for s in top if s == best]
    if len(hits) != len(top):
        raise RichardsonNotStabilized(f"maximal samples disagree: {[str(s) for s in top]}")
    if len(hits) < 2:
        raise RichardsonNotStabilized(
            f"maximal type {best} seen once in {trials} trials; increase trials")
    return best

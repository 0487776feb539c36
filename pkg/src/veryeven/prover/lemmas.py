"""Hypothesis checks for the rank-one Demazure reduction and its two iterated forms.

A *chain* is an ordered list of simple-root indices forming a type-A path in
the Dynkin diagram.  Positions ``a``, ``b`` are 1-based positions along that
chain, so the same checks serve either orientation of a type-A segment.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..rootsys import RootSystem

__all__ = ["Certified", "NotApplicable", "check_chain", "check_prop1", "check_demi1",
           "check_demi2"]


@dataclass(frozen=True)
class Certified:
    rule: str
    params: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return True

    def to_json(self) -> dict:
        return {"rule": self.rule, "params": _jsonable(self.params)}


@dataclass(frozen=True)
class NotApplicable:
    rule: str
    reason: str

    def __bool__(self) -> bool:
        return False

    def to_json(self) -> dict:
        return {"rule": self.rule, "not_applicable": self.reason}


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (Certified, NotApplicable)):
        return x.to_json()
    return x


def check_chain(rs: RootSystem, chain: Sequence[int]) -> tuple:
    """Validate that ``chain`` is a type-A path of simple roots; return it as a tuple."""
    chain = tuple(int(i) for i in chain)
    if not chain:
        raise ValueError("empty chain")
    if len(set(chain)) != len(chain):
        raise ValueError(f"chain {chain} repeats a node")
    for i in chain:
        if not 1 <= i <= rs.rank:
            raise ValueError(f"chain node {i} out of range for {rs.name}")
    C = rs.cartan
    for p, i in enumerate(chain):
        for q in range(p + 1, len(chain)):
            adjacent = C[i - 1][chain[q] - 1] != 0
            if adjacent != (q == p + 1):
                raise ValueError(f"chain {chain} is not a type-A path")
    return chain


def check_prop1(rs: RootSystem, lam: Sequence[int], node: int):
    """Single Demazure step: vanishing when ``<lam, alpha_node^vee> = -1``."""
    m = lam[node - 1]
    if m == -1:
        return Certified("Prop1-singular", {"node": node, "pairing": -1})
    return NotApplicable("Prop1-singular", f"pairing at node {node} is {m}, not -1")


def check_demi1(rs: RootSystem, lam: Sequence[int], a: int, b: int,
                chain: Sequence[int] | None = None):
    """Iterated Demazure vanishing along a chain.

    Applies when the pairings vanish at chain positions ``a < j <= b`` and
    ``r = <lam, alpha_{chain[a]}^vee>`` satisfies ``a - b - 1 <= r <= -1``.
    """
    if chain is None:
        chain = range(1, rs.rank + 1)
    chain = check_chain(rs, chain)
    if not 1 <= a <= b <= len(chain):
        raise ValueError(f"positions a={a}, b={b} invalid for a chain of length {len(chain)}")
    nonzero = [j for j in range(a + 1, b + 1) if lam[chain[j - 1] - 1] != 0]
    if nonzero:
        return NotApplicable("Demi1", f"nonzero pairing at chain positions {nonzero}")
    r = lam[chain[a - 1] - 1]
    if r < a - b - 1:
        return NotApplicable("Demi1", f"r={r} below range [{a - b - 1}, -1]")
    if r > -1:
        return NotApplicable("Demi1", f"r={r} above range [{a - b - 1}, -1]")
    return Certified("Demi1", {"a": a, "b": b, "r": r, "node": chain[a - 1],
                               "chain": list(chain)})


def check_demi2(rs: RootSystem, lam: Sequence[int], a: int, b: int,
                chain: Sequence[int] | None = None):
    """Vanishing for a weight with a single pairing 1 before position ``b``.

    Hypotheses: ``<lam, alpha_a^vee> = 1``, zero pairings at the other
    positions ``j < b``; with ``k = <lam, alpha_b^vee>`` vanishing holds when
    ``-b-1 <= k <= -1`` and ``k + b - a != -1``.  The certificate carries the
    reduction that proves it: for ``k + b - a >= 0`` a Demi1 check from ``b``
    back towards ``a``, otherwise the shifted weight ``mu`` and a Demi1 check
    from ``a`` back to the start of the chain.
    """
    if chain is None:
        chain = range(1, rs.rank + 1)
    chain = check_chain(rs, chain)
    if not 1 <= a < b <= len(chain):
        return NotApplicable("Demi2", f"need 1 <= a < b <= {len(chain)}, got a={a}, b={b}")
    at = lambda pos: lam[chain[pos - 1] - 1]  # noqa: E731
    if at(a) != 1:
        return NotApplicable("Demi2", f"pairing at position a={a} is {at(a)}, not 1")
    bad = [j for j in range(1, b) if j != a and at(j) != 0]
    if bad:
        return NotApplicable("Demi2", f"nonzero pairing at chain positions {bad}")
    k = at(b)
    if not -b - 1 <= k <= -1:
        return NotApplicable("Demi2", f"k={k} outside [{-b - 1}, -1]")
    excess = k + b - a
    if excess == -1:
        return NotApplicable("Demi2", f"k+b-a = -1 (k={k})")
    params = {"a": a, "b": b, "k": k, "k+b-a": excess, "chain": list(chain)}
    if excess >= 0:
        back = list(reversed(chain[a:b]))
        inner = check_demi1(rs, lam, 1, b - a, back)
        assert inner, inner
        params.update(branch="direct", inner=inner)
        return Certified("Demi2", params)
    # shift mu = lam + sum_{i=1}^{b-a} (-k-i) alpha_{b-i+1}
    mu = list(lam)
    C = rs.cartan
    for i in range(1, b - a + 1):
        node = chain[b - i] - 1
        coef = -k - i
        for t in range(rs.rank):
            mu[t] += coef * C[t][node]
    mu = tuple(mu)
    mu_a = mu[chain[a - 1] - 1]
    assert mu_a == excess + 1, (mu_a, excess)
    assert all(mu[chain[j - 1] - 1] == 0 for j in range(1, a))
    back = list(reversed(chain[:a]))
    inner = check_demi1(rs, mu, 1, a, back)
    assert inner, inner
    shift = [0] * rs.rank
    for i in range(1, b - a + 1):
        shift[chain[b - i] - 1] = -k - i
    params.update(branch="shifted", mu=list(mu), shift_root=shift, mu_pairing_a=mu_a,
                  degree_shift=b - a, inner=inner)
    return Certified("Demi2", params)

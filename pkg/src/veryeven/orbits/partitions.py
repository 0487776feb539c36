"""Nilpotent orbits of so(2n) as (labeled) partitions of 2n.

A partition is a D-partition when every even part occurs with even
multiplicity.  When all parts are even ("very even") the partition splits
into two SO(2n)-orbits, labeled ``"I"`` and ``"II"``.

Closure order on labeled partitions: dominance, except that two distinct very
even orbits with different labels are comparable only through a non very even
partition strictly between them (the outer automorphism swaps the labels, so
only O(2n)-stable intermediate orbits can link the two families).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Sequence

from sympy.utilities.iterables import partitions as _sympy_partitions

__all__ = [
    "LABELS",
    "LabeledPartition",
    "Valid",
    "Invalid",
    "validate_partition",
    "is_d_partition",
    "is_very_even",
    "dominates",
    "dual_partition",
    "d_collapse",
    "d_partitions",
    "labeled_orbits",
    "closure_leq",
    "minimal_degenerations",
    "DegenerationRecord",
    "kp_reduction",
    "SINGULARITY_TAGS",
    "orbit_dimension",
    "hasse_diagram",
    "hasse_dot",
    "orbit_records",
]

LABELS = ("I", "II")


def _norm(parts: Iterable[int]) -> tuple:
    out = tuple(sorted((int(p) for p in parts if p), reverse=True))
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {out}")
    return out


def is_very_even(parts: Sequence[int]) -> bool:
    parts = _norm(parts)
    return bool(parts) and all(p % 2 == 0 for p in parts)


def is_d_partition(parts: Sequence[int]) -> bool:
    parts = _norm(parts)
    return all(parts.count(p) % 2 == 0 for p in set(parts) if p % 2 == 0)


@dataclass(frozen=True, order=True)
class LabeledPartition:
    parts: tuple
    label: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "parts", _norm(self.parts))
        ve = is_very_even(self.parts)
        if ve and self.label not in LABELS:
            raise ValueError(f"very even partition {self.parts} needs a label in {LABELS}")
        if not ve and self.label is not None:
            raise ValueError(f"{self.parts} is not very even; label must be None")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        s = "(" + ",".join(map(str, self.parts)) + ")"
        return s + (f"_{self.label}" if self.label else "")

    def to_json(self) -> dict:
        return {"partition": list(self.parts), "label": self.label}


@dataclass(frozen=True)
class Valid:
    very_even: bool

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Invalid:
    reason: str

    def __bool__(self):
        return False


def validate_partition(parts: Sequence[int], n: int):
    """Verdict for ``parts`` as the Jordan type of a nilpotent in so(2n)."""
    try:
        p = _norm(parts)
    except ValueError as e:
        return Invalid(str(e))
    if sum(p) != 2 * n:
        return Invalid(f"parts sum to {sum(p)}, not 2n = {2 * n}")
    bad = sorted({q for q in p if q % 2 == 0 and p.count(q) % 2})
    if bad:
        return Invalid(f"even part(s) {bad} occur with odd multiplicity")
    return Valid(is_very_even(p))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam >= mu`` in dominance order (equal sizes assumed)."""
    return _dominates(_norm(lam), _norm(mu))


@lru_cache(maxsize=1 << 16)
def _dominates(lam: tuple, mu: tuple) -> bool:
    if sum(lam) != sum(mu):
        return False
    L = max(len(lam), len(mu))
    a = list(accumulate(lam + (0,) * (L - len(lam))))
    b = list(accumulate(mu + (0,) * (L - len(mu))))
    return all(x >= y for x, y in zip(a, b))


def dual_partition(parts: Sequence[int]) -> tuple:
    parts = _norm(parts)
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0])) if parts else ()


def d_collapse(parts: Sequence[int]) -> tuple:
    """Largest D-partition dominated by ``parts``.

    Repeatedly take the largest even part ``q`` of odd multiplicity, lower its
    last occurrence to ``q-1`` and raise the first later part below ``q-1``.
    """
    p = list(_norm(parts))
    if sum(p) % 2:
        raise ValueError("d_collapse needs an even total")
    while True:
        bad = [q for q in set(p) if q % 2 == 0 and p.count(q) % 2]
        if not bad:
            return tuple(x for x in p if x)
        q = max(bad)
        i = len(p) - 1 - p[::-1].index(q)
        p[i] -= 1
        p.append(0)
        j = next(t for t in range(i + 1, len(p)) if p[t] < q - 1)
        p[j] += 1
        p = [x for x in p if x]


@lru_cache(maxsize=None)
def d_partitions(n: int) -> tuple:
    """All D-partitions of ``2n``, in decreasing lexicographic order."""
    out = []
    for d in _sympy_partitions(2 * n):
        parts = tuple(sorted((k for k, m in d.items() for _ in range(m)), reverse=True))
        if is_d_partition(parts):
            out.append(parts)
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def labeled_orbits(n: int) -> tuple:
    """Every nilpotent SO(2n)-orbit as a :class:`LabeledPartition`."""
    out = []
    for p in d_partitions(n):
        if is_very_even(p):
            out.extend(LabeledPartition(p, lab) for lab in LABELS)
        else:
            out.append(LabeledPartition(p))
    return tuple(out)


def _as_labeled(x) -> LabeledPartition:
    return x if isinstance(x, LabeledPartition) else LabeledPartition(tuple(x))


def closure_leq(mu, lam) -> bool:
    """``O_mu`` lies in the closure of ``O_lam``."""
    return _closure_leq(_as_labeled(mu), _as_labeled(lam))


@lru_cache(maxsize=1 << 16)
def _closure_leq(mu: LabeledPartition, lam: LabeledPartition) -> bool:
    if mu.parts == lam.parts:
        return mu.label == lam.label
    if not dominates(lam.parts, mu.parts):
        return False
    if mu.label is None or lam.label is None or mu.label == lam.label:
        return True
    n = lam.size // 2
    return any(not is_very_even(nu) and nu not in (lam.parts, mu.parts)
               and dominates(lam.parts, nu) and dominates(nu, mu.parts)
               for nu in d_partitions(n))


def minimal_degenerations(lam, n: int) -> list:
    """Orbits covered by ``lam`` in the closure order (brute force over all orbits)."""
    lam = _as_labeled(lam)
    v = validate_partition(lam.parts, n)
    if not v:
        raise ValueError(v.reason)
    below = [o for o in labeled_orbits(n) if o != lam and closure_leq(o, lam)]
    return [o for o in below
            if not any(p != o and closure_leq(o, p) for p in below)]


SINGULARITY_TAGS = {((2,), (1, 1)): "A1"}


@dataclass(frozen=True)
class DegenerationRecord:
    upper: tuple
    lower: tuple
    reduced_pair: tuple
    rows_removed: int
    columns_removed: int
    singularity_tag: str

    def to_json(self) -> dict:
        return {
            "upper": list(self.upper),
            "lower": list(self.lower),
            "reduced_pair": [list(self.reduced_pair[0]), list(self.reduced_pair[1])],
            "rows_removed": self.rows_removed,
            "columns_removed": self.columns_removed,
            "singularity_tag": self.singularity_tag,
        }


def kp_reduction(lam: Sequence[int], mu: Sequence[int]) -> DegenerationRecord:
    """Strip common leading rows and columns from a degeneration pair until neither remains."""
    lam0, mu0 = _norm(lam), _norm(mu)
    if sum(lam0) != sum(mu0) or not dominates(lam0, mu0):
        raise ValueError(f"{lam0} does not dominate {mu0}")
    a, b = list(lam0), list(mu0)
    rows = cols = 0
    while a and b:
        if a[0] == b[0]:
            a.pop(0), b.pop(0)
            rows += 1
        elif len(a) == len(b):
            a = [x - 1 for x in a if x > 1]
            b = [x - 1 for x in b if x > 1]
            cols += 1
        else:
            break
    pair = (tuple(a), tuple(b))
    return DegenerationRecord(lam0, mu0, pair, rows, cols,
                              SINGULARITY_TAGS.get(pair, "unclassified"))


def orbit_dimension(lam, n: int) -> int:
    """``dim so(2n) - dim centraliser``, from the dual partition."""
    parts = _as_labeled(lam).parts
    v = validate_partition(parts, n)
    if not v:
        raise ValueError(v.reason)
    dual = dual_partition(parts)
    odd = sum(1 for p in parts if p % 2)
    return 2 * n * n - n - (sum(c * c for c in dual) - odd) // 2


def hasse_diagram(n: int) -> dict:
    """Covering relations: ``{orbit: [orbits it covers]}`` for all orbits of so(2n)."""
    return {o: minimal_degenerations(o, n) for o in labeled_orbits(n)}


def hasse_dot(n: int) -> str:
    cov = hasse_diagram(n)
    lines = [f'digraph "D{n}" {{', "  rankdir=TB;", "  node [shape=plaintext];"]
    for o in cov:
        lines.append(f'  "{o}" [label="{o}\\n{orbit_dimension(o, n)}"];')
    for o, below in cov.items():
        for p in below:
            lines.append(f'  "{o}" -> "{p}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def orbit_records(n: int) -> list:
    """JSON-ready records (partition, label, dimension, covers) for every orbit."""
    cov = hasse_diagram(n)
    return [{**o.to_json(), "dimension": orbit_dimension(o, n),
             "covers": [p.to_json() for p in below]} for o, below in cov.items()]


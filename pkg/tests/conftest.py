"""Shared oracles.

Everything here works in orthonormal e-coordinates and never calls the
library's Cartan data, so it gives an independent check on ``rootsys`` and
``charlib``.  Half-integers are avoided by doubling type-D coordinates.
"""
from fractions import Fraction
from itertools import combinations

import pytest

ACCEPTANCE: list = []


def e_coords(family, rank, fund):
    """``2 * (lambda)`` in e-coordinates (doubling keeps type D integral)."""
    if family == "A":
        n = rank + 1
        x = [0] * n
        for i, a in enumerate(fund):
            for t in range(i + 1):
                x[t] += 2 * a
        return x
    n = rank
    x = [0] * n
    for i, a in enumerate(fund[: n - 2]):
        for t in range(i + 1):
            x[t] += 2 * a
    a, b = fund[n - 2], fund[n - 1]
    for t in range(n - 1):
        x[t] += a + b
    x[n - 1] += b - a
    return x


def e_positive_roots(family, rank):
    n = rank + 1 if family == "A" else rank
    out = []
    for i, j in combinations(range(n), 2):
        v = [0] * n
        v[i], v[j] = 1, -1
        out.append(v)
        if family == "D":
            w = [0] * n
            w[i], w[j] = 1, 1
            out.append(w)
    return out


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def rho_plus(family, rank, fund):
    return e_coords(family, rank, [a + 1 for a in fund])


def oracle_length(family, rank, fund):
    """``None`` if ``fund + rho`` is singular, else the number of roots it pairs negatively with."""
    x = rho_plus(family, rank, fund)
    pairs = [_dot(x, r) for r in e_positive_roots(family, rank)]
    if any(p == 0 for p in pairs):
        return None
    return sum(1 for p in pairs if p < 0)


def oracle_dominant(family, rank, fund):
    """Dominant representative of the dot orbit, by sorting e-coordinates."""
    x = rho_plus(family, rank, fund)
    if family == "A":
        y = sorted(x, reverse=True)
        out = [(y[i] - y[i + 1]) // 2 for i in range(rank)]
    else:
        neg = sum(1 for t in x if t < 0)
        y = sorted((abs(t) for t in x), reverse=True)
        if neg % 2 and y[-1]:
            y[-1] = -y[-1]
        n = rank
        out = [(y[i] - y[i + 1]) // 2 for i in range(n - 1)] + [(y[n - 2] + y[n - 1]) // 2]
    return tuple(a - 1 for a in out)


def oracle_signed_dimension(family, rank, fund):
    """Weyl's product ``prod <lam+rho, a> / <rho, a>``: the Euler characteristic's dimension."""
    x = rho_plus(family, rank, fund)
    r = rho_plus(family, rank, [0] * rank)
    out = Fraction(1)
    for a in e_positive_roots(family, rank):
        out *= Fraction(_dot(x, a), _dot(r, a))
    assert out.denominator == 1
    return int(out)


@pytest.fixture
def acceptance():
    def record(number, title, ok, detail=""):
        ACCEPTANCE.append((number, title, ok, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE, key=lambda t: t[0]):
        line = f"[{'PASS' if ok else 'FAIL'}] #{number} {title}"
        if detail:
            line += f" :: {detail}"
        terminalreporter.write_line(line)

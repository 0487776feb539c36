import json
import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st
from sympy import QQ, Matrix
from sympy.polys.matrices import DomainMatrix

from veryeven.bmod import nilradical_weights
from veryeven.orbits import (LabeledPartition, RichardsonNotStabilized, closure_leq, d_collapse,
                             d_partitions, dominates, hasse_dot, kp_reduction, labeled_orbits,
                             minimal_degenerations, orbit_dimension, orbit_records,
                             richardson_orbit, so_root_matrix, validate_partition)
from veryeven.orbits.richardson import _dense, jordan_type, nilradical_basis
from veryeven.prover import build_scenario
from veryeven.rootsys import ParabolicMarker, build_root_system

LP = LabeledPartition


def test_validate_examples():
    v = validate_partition((4, 4, 2, 2), 6)
    assert v and v.very_even
    v = validate_partition((4, 4, 3, 1), 6)
    assert v and not v.very_even
    assert not validate_partition((3, 3, 2), 4)
    assert not validate_partition((4, 4, 2), 6)
    assert not validate_partition((3, -1), 1)


def test_labels_enforced():
    with pytest.raises(ValueError):
        LP((4, 4))
    with pytest.raises(ValueError):
        LP((3, 1), "I")
    assert str(LP((4, 4), "II")) == "(4,4)_II"


def test_d_collapse_examples():
    assert d_collapse((5, 3)) == (5, 3)
    assert d_collapse((6, 2)) == (5, 3)
    assert d_collapse((2, 2)) == (2, 2)
    assert d_collapse((2,)) == (1, 1)
    with pytest.raises(ValueError):
        d_collapse((3,))


def _all_partitions(total, largest=None):
    largest = total if largest is None else largest
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _all_partitions(total - first, first):
            yield (first,) + rest


@pytest.mark.parametrize("n", range(1, 7))
def test_d_collapse_is_the_dominance_maximum(n):
    valid = d_partitions(n)
    for p in _all_partitions(2 * n):
        below = [q for q in valid if dominates(p, q)]
        top = [q for q in below if all(dominates(q, t) for t in below)]
        assert len(top) == 1
        c = d_collapse(p)
        assert c == top[0]
        assert d_collapse(c) == c


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=8))
def test_d_collapse_properties(parts):
    if sum(parts) % 2:
        parts = parts + [1]
    c = d_collapse(parts)
    assert validate_partition(c, sum(c) // 2)
    assert dominates(sorted(parts, reverse=True), c)
    assert d_collapse(c) == c


@pytest.mark.parametrize("n", range(2, 6))
def test_closure_is_partial_order(n):
    orbs = labeled_orbits(n)
    for a in orbs:
        assert closure_leq(a, a)
    for a, b in product(orbs, repeat=2):
        if a != b and closure_leq(a, b):
            assert not closure_leq(b, a)
    for a, b, c in product(orbs, repeat=3):
        if closure_leq(a, b) and closure_leq(b, c):
            assert closure_leq(a, c)


@pytest.mark.parametrize("n", range(2, 8))
def test_covers_brute_force(n):
    orbs = labeled_orbits(n)
    for lam in orbs:
        cov = minimal_degenerations(lam, n)
        for x in cov:
            assert x != lam and closure_leq(x, lam)
            assert not any(closure_leq(x, y) and closure_leq(y, lam) and y not in (x, lam)
                           for y in orbs)
        for x, y in product(cov, repeat=2):
            if x != y:
                assert not closure_leq(x, y)
        # every orbit strictly below is below some cover
        for y in orbs:
            if y != lam and closure_leq(y, lam):
                assert any(closure_leq(y, x) for x in cov)


def test_minimal_degeneration_examples():
    got = minimal_degenerations((4, 4, 3, 1), 6)
    assert sorted(got) == [LP((4, 4, 2, 2), "I"), LP((4, 4, 2, 2), "II")]
    for n in range(3, 7):
        assert minimal_degenerations((2, 2) + (1,) * (2 * n - 4), n) == [LP((1,) * (2 * n))]
    cov = minimal_degenerations(LP((4, 4, 2, 2), "I"), 6)
    assert LP((4, 4, 1, 1, 1, 1)) in cov and LP((3, 3, 3, 3)) in cov
    with pytest.raises(ValueError):
        minimal_degenerations((3, 3, 2), 4)


def test_very_even_labels_in_d4():
    assert closure_leq(LP((2, 2, 2, 2), "II"), LP((4, 4), "I"))      # through (3,3,1,1)
    assert not closure_leq(LP((4, 4), "I"), LP((4, 4), "II"))
    assert not closure_leq(LP((4, 4), "II"), LP((4, 4), "I"))


@pytest.mark.parametrize("n", [4, 6, 8])
def test_labels_only_separate_equal_partitions(n):
    # a non very even orbit always sits between two distinct very even ones
    orbs = labeled_orbits(n)
    for a, b in product(orbs, repeat=2):
        if a.parts != b.parts:
            assert closure_leq(a, b) == dominates(b.parts, a.parts)


def test_kp_reduction_examples():
    r = kp_reduction((4, 4, 3, 1), (4, 4, 2, 2))
    assert r.reduced_pair == ((2,), (1, 1)) and r.singularity_tag == "A1"
    assert (r.rows_removed, r.columns_removed) == (2, 1)
    r = kp_reduction((3, 1), (2, 2))
    assert r.reduced_pair == ((2,), (1, 1)) and r.columns_removed == 1 and r.rows_removed == 0
    r = kp_reduction((5, 3), (5, 3))
    assert r.reduced_pair == ((), ())
    assert kp_reduction((5, 1, 1, 1), (3, 3, 1, 1)).singularity_tag == "unclassified"
    with pytest.raises(ValueError):
        kp_reduction((2, 2), (3, 1))
    json.dumps(r.to_json())


@pytest.mark.parametrize("kab", [(1, 4, 2), (1, 6, 2), (2, 4, 2), (1, 6, 4), (1, 8, 2)])
def test_kp_reduction_for_scenarios(kab):
    k, a, b = kab
    upper = (a,) * (2 * k) + (b + 1, b - 1)
    lower = (a,) * (2 * k) + (b, b)
    r = kp_reduction(upper, lower)
    assert r.reduced_pair == ((2,), (1, 1))
    assert (r.rows_removed, r.columns_removed) == (2 * k, b - 1)


def test_dimension_examples():
    assert orbit_dimension(LP((4, 4, 2, 2), "I"), 6) == 46
    d6 = build_root_system("D", 6)
    assert 46 == 2 * len(nilradical_weights(d6, ParabolicMarker([2, 6])))
    assert orbit_dimension((11, 1), 6) == 60
    assert orbit_dimension((1,) * 12, 6) == 0
    with pytest.raises(ValueError):
        orbit_dimension((3, 3, 2), 4)


def _centraliser_dim(entries, n):
    """``dim {Y in so(2n) : [X, Y] = 0}`` with ``Y = J A``, ``A`` antisymmetric."""
    N = 2 * n
    X = Matrix(N, N, lambda i, j: entries.get((i, j), 0))
    J = Matrix(N, N, lambda r, c: 1 if r + c == N - 1 else 0)
    cols = []
    for i in range(N):
        for j in range(i + 1, N):
            A = Matrix.zeros(N, N)
            A[i, j], A[j, i] = 1, -1
            B = J * A
            cols.append(list(X * B - B * X))
    M = DomainMatrix([[QQ(int(c[r])) for c in cols] for r in range(N * N)], (N * N, len(cols)), QQ)
    return len(cols) - M.rank(), len(cols)


@pytest.mark.parametrize("rank,P", [(4, [1]), (4, [2]), (4, [4]), (4, [1, 2, 3, 4]), (5, [2]),
                                    (5, [1, 5]), (6, [2, 6]), (6, [3, 6])])
def test_dimension_against_centraliser(rank, P):
    rs = build_root_system("D", rank)
    R = random.Random(0)
    entries = {}
    for E in nilradical_basis(rs, ParabolicMarker(P)):
        c = R.choice([x for x in range(-9, 10) if x])
        for k, v in E.items():
            entries[k] = entries.get(k, 0) + c * v
    parts = jordan_type(_dense(2 * rank, entries))
    cdim, gdim = _centraliser_dim(entries, rank)
    orbit = LP(parts, "I" if all(p % 2 == 0 for p in parts) else None)
    assert orbit_dimension(orbit, rank) == gdim - cdim


def test_root_matrices_are_skew():
    for rank in (4, 5, 6):
        rs = build_root_system("D", rank)
        N = 2 * rank
        J = Matrix(N, N, lambda r, c: 1 if r + c == N - 1 else 0)
        for root in rs.positive_roots:
            M = Matrix.zeros(N, N)
            for k, v in so_root_matrix(rs, root).items():
                M[k] = v
            assert M.T * J + J * M == Matrix.zeros(N, N)
            assert all(M[i, j] == 0 for i in range(N) for j in range(i + 1))


def test_richardson_examples():
    d6 = build_root_system("D", 6)
    for seed in range(5):
        assert richardson_orbit(d6, ParabolicMarker([3, 6]), seed).parts == (4, 4, 3, 1)
        o = richardson_orbit(d6, ParabolicMarker([2, 6]), seed)
        assert o.parts == (4, 4, 2, 2) and o.label in ("I", "II")
        assert richardson_orbit(d6, ParabolicMarker(range(1, 7)), seed).parts == (11, 1)


def test_richardson_label_tracks_spin_node():
    for rank in (4, 6):
        rs = build_root_system("D", rank)
        a = richardson_orbit(rs, ParabolicMarker([rank]), 1)
        b = richardson_orbit(rs, ParabolicMarker([rank - 1]), 1)
        assert a.parts == b.parts == (2,) * rank
        assert {a.label, b.label} == {"I", "II"}


def test_richardson_errors():
    d4 = build_root_system("D", 4)
    with pytest.raises(ValueError):
        richardson_orbit(build_root_system("A", 3), ParabolicMarker([1]))
    with pytest.raises(ValueError):
        richardson_orbit(d4, ParabolicMarker([1]), trials=1)
    # the zero nilradical gives the zero orbit every time
    assert richardson_orbit(d4, ParabolicMarker(), 0).parts == (1,) * 8
    assert issubclass(RichardsonNotStabilized, RuntimeError)


@pytest.mark.parametrize("kab", [(1, 4, 2), (1, 6, 2)])
def test_richardson_dimension_identity(kab):
    sc = build_scenario(*kab)
    for P in (sc.P, sc.P_prime, sc.P_dprime):
        o = richardson_orbit(sc.rs, P, 3)
        assert orbit_dimension(o, sc.rs.rank) == 2 * len(nilradical_weights(sc.rs, P))
    k, a, b = kab
    assert richardson_orbit(sc.rs, sc.P_prime, 3).parts == tuple([a] * 2 * k + [b + 1, b - 1])
    assert richardson_orbit(sc.rs, sc.P, 3).parts == tuple([a] * 2 * k + [b, b])


def test_exports():
    dot = hasse_dot(4)
    assert dot.startswith('digraph "D4"') and '"(5,3)" -> "(4,4)_I";' in dot
    recs = orbit_records(3)
    json.dumps(recs)
    top = recs[0]
    assert top["partition"] == [5, 1] and top["dimension"] == 12
    assert top["covers"] == [{"partition": [3, 3], "label": None}]

from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kadjoint.adjoint import complement_test
from kadjoint.arrangement import boolean_arrangement, build_lattice, random_arrangement
from kadjoint.grassmann import Subspace, l_lower, random_subspace
from kadjoint.linalg import QMatrix, kernel_basis, rank_of
from kadjoint.matroid import (
    bases,
    broken_circuits,
    characteristic_polynomial_matroid,
    circuits,
    fingerprint,
    flats_lattice,
    independence_numbers,
    invariants,
    matroid_equal,
    matroid_from_vectors,
    matroid_of_restriction,
    nbc_counts,
    nbc_polynomial,
    restricted_matroid,
    whitney_numbers,
)

# ground-set elements are 0-based below; the comments give the 1-based names


@pytest.fixture
def uniform(b4, u_generic):
    return matroid_of_restriction(b4, u_generic)


@pytest.fixture
def parallel(b4, u_diag):
    return matroid_of_restriction(b4, u_diag)


@pytest.fixture
def loopy(b4, u_coord):
    return matroid_of_restriction(b4, u_coord)


def all_subsets(m):
    for r in range(m + 1):
        yield from combinations(range(m), r)


def kernel_rank(a, u, subset):
    """Oracle: k - dim(U & H_I), from normal spaces only."""
    n = a.dim
    normals = kernel_basis(u.basis).vstack(QMatrix.from_rows([a.hyperplanes[i].normal for i in subset], n))
    return u.k - (n - rank_of(normals))


def chi_by_subsets(m):
    """Oracle for loop-free matroids: sum over subsets of (-1)^|S| t^(r - rank S)."""
    r = m.full_rank
    coeffs = [0] * (r + 1)
    for s in all_subsets(m.ground_size):
        coeffs[m.rank(s)] += (-1) ** len(s)
    return tuple(coeffs)


def test_columns(parallel, loopy):
    assert [tuple(v) for v in parallel.vectors] == [(1, 0), (0, 1), (1, 0), (0, 1)]
    assert parallel.parallel_classes() == [(0, 2), (1, 3)]
    assert parallel.full_rank == 2 and parallel.loops() == ()
    assert [tuple(v) for v in loopy.vectors] == [(1, 0), (0, 1), (0, 0), (0, 0)]
    assert loopy.loops() == (2, 3)


def test_bases(uniform, parallel, loopy):
    assert bases(uniform) == list(combinations(range(4), 2))
    assert bases(parallel) == [(0, 1), (0, 3), (1, 2), (2, 3)]  # {1,2},{1,4},{2,3},{3,4}
    assert bases(loopy) == [(0, 1)]


def test_independence_numbers(uniform, parallel, loopy):
    assert independence_numbers(uniform) == (1, 4, 6)
    assert independence_numbers(parallel) == (1, 4, 4)
    assert independence_numbers(loopy) == (1, 2, 1)


def test_circuits(uniform, parallel, loopy):
    assert circuits(uniform) == list(combinations(range(4), 3))
    assert circuits(parallel) == [(0, 2), (1, 3)]
    assert circuits(loopy) == [(2,), (3,)]


def test_broken_circuits(uniform, parallel, loopy):
    assert broken_circuits(uniform) == [(0, 1), (0, 2), (1, 2)]
    assert broken_circuits(parallel) == [(0,), (1,)]
    assert () in broken_circuits(loopy)


def test_nbc_counts(uniform, parallel, loopy):
    assert nbc_counts(uniform) == (1, 4, 3)
    assert nbc_counts(parallel) == (1, 2, 1)
    assert nbc_counts(loopy) == (0, 0, 0)
    assert nbc_polynomial(uniform) == (1, -4, 3)
    assert nbc_polynomial(loopy) == (0, 0, 0)
    with pytest.raises(ValueError):
        nbc_counts(uniform, [0, 1, 2])


def test_flats_lattice(uniform, parallel, loopy):
    assert flats_lattice(uniform).rank_sizes() == (1, 4, 1)
    lat = flats_lattice(parallel)
    assert lat.rank_sizes() == (1, 2, 1)
    assert set(lat.flats) == {frozenset(), frozenset({0, 2}), frozenset({1, 3}), frozenset(range(4))}
    assert flats_lattice(loopy).flats[0] == frozenset({2, 3})


def test_characteristic_polynomial(uniform, parallel, loopy):
    assert characteristic_polynomial_matroid(uniform) == (1, -4, 3)
    assert whitney_numbers(uniform) == (1, -4, 3)
    assert characteristic_polynomial_matroid(parallel) == (1, -2, 1)
    b4 = boolean_arrangement(4)
    assert characteristic_polynomial_matroid(matroid_of_restriction(b4, Subspace.whole(4))) == (1, -4, 6, -4, 1)
    # lattice route keeps loops out of the bottom flat instead of vanishing
    assert characteristic_polynomial_matroid(loopy) == (1, -2, 1)


def test_matroid_equal(uniform, parallel, b4):
    assert matroid_equal(uniform, uniform)
    assert not matroid_equal(uniform, parallel)
    other = matroid_of_restriction(b4, Subspace.from_rows([[1, 1, 2, 3], [0, 1, -1, 2]]))
    assert matroid_equal(uniform, other)
    assert fingerprint(other) == fingerprint(uniform)
    with pytest.raises(ValueError):
        matroid_equal(uniform, matroid_from_vectors([[1, 0]]))


def test_invariants_bundle(b4, u_diag):
    m = matroid_of_restriction(b4, u_diag)
    inv = invariants(m, restricted=restricted_matroid(b4, u_diag))
    assert inv.rank == 2 and inv.bases_count == 4
    assert inv.independence_numbers == (1, 4, 4)
    assert inv.independence_numbers_restricted == (1, 2, 1)
    assert inv.signless_whitney() == inv.nbc_counts == (1, 2, 1)
    assert inv.parallel_classes == ((0, 2), (1, 3))


# -- properties -----------------------------------------------------------------


@st.composite
def sampled_pairs(draw):
    n = draw(st.integers(2, 4))
    m = draw(st.integers(n, min(n + 3, 8)))
    a = random_arrangement(m, n, draw(st.integers(0, 10_000)), bound=2)
    k = draw(st.integers(1, n))
    u = random_subspace(k, n, draw(st.integers(1, 3)), draw(st.integers(0, 10_000)))
    return a, u


@settings(max_examples=40, deadline=None)
@given(sampled_pairs())
def test_rank_axioms_and_kernel_oracle(pair):
    a, u = pair
    mat = matroid_of_restriction(a, u)
    subsets = list(all_subsets(mat.ground_size))
    assert mat.rank(()) == 0
    for s in subsets:
        fs = set(s)
        assert mat.rank(s) <= len(s)
        assert mat.rank(s) == kernel_rank(a, u, s)
        for e in range(mat.ground_size):
            if e not in fs:
                assert mat.rank(s) <= mat.rank(fs | {e})
    for s, t in combinations(subsets[:40], 2):
        fs, ft = set(s), set(t)
        assert mat.rank(fs | ft) + mat.rank(fs & ft) <= mat.rank(fs) + mat.rank(ft)


@settings(max_examples=40, deadline=None)
@given(sampled_pairs())
def test_basis_three_way(pair):
    a, u = pair
    if u.k == a.dim:
        return
    mat = matroid_of_restriction(a, u)
    lat = build_lattice(a)
    lower = {x.contains for x in l_lower(u, lat)}
    found = set(bases(mat))
    for s in combinations(range(mat.ground_size), u.k):
        independent = mat.rank(s) == u.k
        normals = QMatrix.from_rows([a.hyperplanes[i].normal for i in s], a.dim)
        if rank_of(normals) == u.k:
            closure = frozenset(i for i, h in enumerate(a.hyperplanes) if rank_of(normals.vstack(QMatrix.from_rows([h.normal]))) == u.k)
            via_flat = closure in lower
            assert via_flat == complement_test(u.basis, lat.flat_of(closure))
        else:
            via_flat = False
        assert (s in found) == independent == via_flat


@settings(max_examples=40, deadline=None)
@given(sampled_pairs(), st.integers(0, 1000))
def test_nbc_theorem_and_order_invariance(pair, seed):
    a, u = pair
    mat = matroid_of_restriction(a, u)
    chi = characteristic_polynomial_matroid(mat)
    order = [int(x) for x in np.random.default_rng(seed).permutation(mat.ground_size)]
    if mat.loops():
        assert nbc_counts(mat) == nbc_counts(mat, order) == (0,) * (mat.full_rank + 1)
        return
    assert chi == chi_by_subsets(mat)
    assert tuple(abs(w) for w in chi) == nbc_counts(mat) == nbc_counts(mat, order)
    assert all(w == 0 or (w > 0) == (i % 2 == 0) for i, w in enumerate(chi))
    # parallel elements do not change the lattice of flats
    simple = restricted_matroid(a, u)
    assert characteristic_polynomial_matroid(simple) == chi

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kadjoint.arrangement import (
    boolean_arrangement,
    build_arrangement,
    build_lattice,
    characteristic_polynomial,
    locate_flat,
    maximal_chains,
    product,
    random_arrangement,
    rank_k_flats,
    restriction,
)
from kadjoint.errors import (
    ChainBudgetExceeded,
    DuplicateHyperplaneError,
    InvalidHyperplaneError,
    InvalidSubspaceError,
    NonEssentialError,
    RangeError,
)
from kadjoint.linalg import QMatrix, kernel_basis, rank_of, row_space_basis


# -- independent oracles -------------------------------------------------------


def brute_force_flats(a):
    """Every intersection of a subset of hyperplanes, keyed by its subspace."""
    out = {}
    normals = [h.normal for h in a.hyperplanes]
    for r in range(len(normals) + 1):
        for sub in combinations(range(len(normals)), r):
            m = QMatrix.from_rows([normals[i] for i in sub], a.dim)
            space = row_space_basis(kernel_basis(m))
            out.setdefault(space.rows, rank_of(m))
    return out


def whitney_subset_sum(a):
    """chi(t) = sum over all subsets S of (-1)^|S| t^(n - rank S)."""
    n = a.dim
    coeffs = [0] * (n + 1)
    normals = [h.normal for h in a.hyperplanes]
    for r in range(len(normals) + 1):
        for sub in combinations(range(len(normals)), r):
            rk = rank_of(QMatrix.from_rows([normals[i] for i in sub], n))
            coeffs[rk] += (-1) ** r
    return tuple(coeffs)


def count_chains(lat):
    """Chains counted by dynamic programming over the contains sets, not DFS."""
    flats = lat.flats
    ways = {0: 1}
    for i in range(1, len(flats)):
        ways[i] = sum(
            ways[j]
            for j in range(i)
            if flats[j].rank == flats[i].rank - 1 and flats[j].contains <= flats[i].contains
        )
    top = max(f.rank for f in flats)
    return sum(ways[i] for i, f in enumerate(flats) if f.rank == top)


# -- construction ---------------------------------------------------------------


def test_build_arrangement_examples():
    b4 = build_arrangement([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert b4 == boolean_arrangement(4) and b4.essential
    with pytest.raises(DuplicateHyperplaneError):
        build_arrangement([[1, 0], [2, 0], [0, 1]])
    with pytest.raises(NonEssentialError):
        build_arrangement([[1, 0, 0], [0, 1, 0]])
    with pytest.raises(InvalidHyperplaneError):
        build_arrangement([[0, 0], [1, 0]])
    a = build_arrangement([[1, 0, 0], [0, 1, 0]], allow_non_essential=True)
    assert not a.essential


def test_normalization():
    a = build_arrangement([["-1/2", "1/3"], [0, -5]])
    assert [h.normal for h in a.hyperplanes] == [(3, -2), (0, 1)]


def test_random_arrangement():
    a = random_arrangement(5, 3, 7)
    assert len(a) == 5 and a.dim == 3 and a.essential
    assert a == random_arrangement(5, 3, 7)
    g = random_arrangement(5, 4, 3, generic=True)
    for sub in combinations(g.hyperplanes, 4):
        assert rank_of(QMatrix.from_rows([h.normal for h in sub])) == 4


# -- lattice --------------------------------------------------------------------


def test_lattice_examples(b4_lattice, a3_lattice):
    assert b4_lattice.rank_sizes() == (1, 4, 6, 4, 1)
    assert a3_lattice.rank_sizes() == (1, 4, 6, 1)
    b2 = build_lattice(boolean_arrangement(2))
    assert b2.mobius == (1, -1, -1, 1)


def test_rank_k_flats(b4_lattice, a3_lattice):
    assert len(rank_k_flats(b4_lattice, 2)) == 6
    assert [f.rank for f in rank_k_flats(b4_lattice, 0)] == [0]
    assert rank_k_flats(b4_lattice, 0)[0].basis == QMatrix.identity(4)
    assert len(rank_k_flats(a3_lattice, 2)) == 6
    with pytest.raises(RangeError):
        rank_k_flats(b4_lattice, 5)
    with pytest.raises(RangeError):
        rank_k_flats(b4_lattice, -1)


def test_flats_are_closed(a3_lattice):
    for f in a3_lattice.flats:
        for i, h in enumerate(a3_lattice.arrangement.hyperplanes):
            on = all(h.evaluate(row) == 0 for row in f.basis.rows)
            assert on == (i in f.contains)
        assert f.rank == 3 - f.basis.nrows


def test_characteristic_polynomial(b4_lattice, a3_lattice):
    assert characteristic_polynomial(b4_lattice) == (1, -4, 6, -4, 1)
    assert characteristic_polynomial(a3_lattice) == (1, -4, 6, -3)
    assert characteristic_polynomial(build_lattice(boolean_arrangement(2))) == (1, -2, 1)


def test_maximal_chains(a3_lattice):
    assert len(maximal_chains(build_lattice(boolean_arrangement(2)))) == 2
    assert len(maximal_chains(build_lattice(boolean_arrangement(3)))) == 6
    # every atom of A_3 lies below exactly three lines: 4 * 3 chains
    chains = maximal_chains(a3_lattice)
    assert len(chains) == count_chains(a3_lattice) == 12
    for flag in chains:
        dims = [f.dim for f in flag.subspaces]
        assert dims == [0, 1, 2, 3]
        for lo, hi in zip(flag.subspaces, flag.subspaces[1:]):
            assert lo.contains >= hi.contains
    assert chains == maximal_chains(a3_lattice)


def test_chain_cap(b4_lattice):
    with pytest.raises(ChainBudgetExceeded) as info:
        maximal_chains(b4_lattice, cap=10)
    assert "10" in str(info.value)
    assert len(maximal_chains(b4_lattice, cap=24)) == 24


def test_locate_flat(b4_lattice):
    assert locate_flat(b4_lattice, (1, 1, 1, 1)).rank == 0
    f = locate_flat(b4_lattice, (0, 0, 1, 1))
    assert f.rank == 2 and f.contains == {0, 1}
    assert locate_flat(b4_lattice, (0, 0, 0, 0)).rank == 4


def test_product_examples(a3):
    b1 = boolean_arrangement(1)
    assert product(b1, b1) == boolean_arrangement(2)
    b2 = boolean_arrangement(2)
    assert product(b2, b2) == boolean_arrangement(4)
    p = product(a3, b1)
    assert p.dim == 4 and len(p) == 5 and p.essential


def test_product_lattice_convolves(a3):
    b2 = boolean_arrangement(2)
    la, lb = build_lattice(a3), build_lattice(b2)
    lp = build_lattice(product(a3, b2))
    assert len(lp.flats) == len(la.flats) * len(lb.flats)
    sa, sb = la.rank_sizes(), lb.rank_sizes()
    conv = [sum(sa[i] * sb[r - i] for i in range(len(sa)) if 0 <= r - i < len(sb)) for r in range(len(sa) + len(sb) - 1)]
    assert list(lp.rank_sizes()) == conv


def test_restriction_examples(b4, a3):
    r = restriction(b4, QMatrix.from_rows([[1, 0, 1, 0], [0, 1, 0, 1]]))
    assert r.arrangement.dim == 2 and len(r.arrangement) == 2
    assert r.index_map == (0, 1, 0, 1)
    assert r.loops == ()

    r = restriction(b4, QMatrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0]]))
    assert len(r.arrangement) == 2 and r.loops == (2, 3)

    r = restriction(a3, QMatrix.identity(3))
    assert r.arrangement == a3 and r.index_map == (0, 1, 2, 3)

    with pytest.raises(InvalidSubspaceError):
        restriction(b4, QMatrix.from_rows([[1, 0, 0, 0], [2, 0, 0, 0]]))


# -- properties -----------------------------------------------------------------

seeds = st.integers(0, 10_000)


@st.composite
def small_arrangements(draw):
    n = draw(st.integers(2, 4))
    m = draw(st.integers(n, n + 2))
    return random_arrangement(m, n, draw(seeds), bound=2)


@settings(max_examples=25, deadline=None)
@given(small_arrangements())
def test_lattice_matches_brute_force(a):
    lat = build_lattice(a)
    oracle = brute_force_flats(a)
    assert {f.basis.rows for f in lat.flats} == set(oracle)
    for f in lat.flats:
        assert oracle[f.basis.rows] == f.rank
    assert characteristic_polynomial(lat) == whitney_subset_sum(a)


@settings(max_examples=25, deadline=None)
@given(small_arrangements())
def test_lattice_closure_and_mobius(a):
    lat = build_lattice(a)
    keys = {f.contains for f in lat.flats}
    for f in lat.flats:
        for g in lat.flats:
            both = QMatrix.from_rows([a.hyperplanes[i].normal for i in f.contains | g.contains], a.dim)
            meet = lat.flat_of(
                i for i, h in enumerate(a.hyperplanes)
                if all(x == 0 for x in kernel_basis(both).apply(h.normal))
            )
            assert meet.contains in keys
    for j, x in enumerate(lat.flats):
        if j == 0:
            continue
        assert sum(mu for i, mu in enumerate(lat.mobius) if lat.leq(i, j)) == 0


@settings(max_examples=20, deadline=None)
@given(small_arrangements())
def test_chains_are_graded(a):
    lat = build_lattice(a)
    chains = maximal_chains(lat)
    assert len(chains) == count_chains(lat)
    for flag in chains:
        assert [f.dim for f in flag.subspaces] == list(range(a.dim + 1))


@settings(max_examples=40, deadline=None)
@given(small_arrangements(), st.data())
def test_locate_flat_by_scan(a, data):
    lat = build_lattice(a)
    # points built inside a random flat so that non-generic positions occur
    f = data.draw(st.sampled_from(lat.flats))
    coeffs = [data.draw(st.integers(-3, 3)) for _ in range(f.basis.nrows)]
    point = [sum((c * row[j] for c, row in zip(coeffs, f.basis.rows)), 0) for j in range(a.dim)]
    p = locate_flat(lat, point)

    def inside(flat):
        return all(a.hyperplanes[i].evaluate(point) == 0 for i in flat.contains)

    assert inside(p)
    for q in lat.flats:
        if q.contains > p.contains:
            assert not inside(q)

"""k-adjoint arrangements, tensor products and the product decomposition.

Coordinates of the ``C(n, k)``-dimensional space are indexed by the sorted
1-based k-subsets of ``[n]`` in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

from .arrangement import (
    Arrangement,
    Flat,
    IntersectionLattice,
    build_arrangement,
    build_lattice,
    empty_arrangement,
    product,
    rank_k_flats,
)
from .errors import ConsistencyError, DimensionError, DuplicateHyperplaneError, RangeError
from .linalg import QMatrix, det, minor, normalize_vector, rank_of

Subset = tuple[int, ...]


@dataclass(frozen=True)
class KSubsetIndex:
    n: int
    k: int

    @cached_property
    def subsets(self) -> tuple[Subset, ...]:
        return tuple(combinations(range(1, self.n + 1), self.k))

    @cached_property
    def _positions(self) -> dict[Subset, int]:
        return {s: i for i, s in enumerate(self.subsets)}

    def position(self, subset: Sequence[int]) -> int:
        return self._positions[tuple(sorted(subset))]

    def __len__(self) -> int:
        return comb(self.n, self.k)


def format_subset(subset: Sequence[int]) -> str:
    return "{" + ",".join(str(i) for i in subset) + "}"


def signed_minor_vector(basis: QMatrix, k: int) -> tuple[Fraction, ...]:
    """Raw a_I for every k-subset I: sign(I) times the minor on the complementary columns.

    ``basis`` is any (n-k) x n matrix whose rows span the flat.
    """
    n = basis.ncols
    rows = range(basis.nrows)
    base_sign = k * (k + 1) // 2
    out = []
    for subset in KSubsetIndex(n, k).subsets:
        cols = [j for j in range(n) if j + 1 not in subset]
        value = minor(basis, rows, cols)
        if (base_sign + sum(subset)) % 2:
            value = -value
        out.append(value)
    return tuple(out)


def adjoint_coefficients(x: Flat, idx: KSubsetIndex) -> tuple[Fraction, ...]:
    """Raw coefficient vector of the adjoint hyperplane H(X) for a rank-k flat."""
    if idx.k >= idx.n:
        raise RangeError(f"adjoint coefficients need k < n, got k={idx.k}, n={idx.n}")
    if x.rank != idx.k:
        raise RangeError(f"flat has rank {x.rank}, expected {idx.k}")
    if x.basis.ncols != idx.n:
        raise DimensionError(f"flat lives in dimension {x.basis.ncols}, index expects {idx.n}")
    return signed_minor_vector(x.basis, idx.k)


@dataclass(frozen=True)
class AdjointHyperplane:
    raw: tuple[Fraction, ...]
    coeffs: tuple[int, ...]
    source: Flat


@dataclass(frozen=True, eq=False)
class AdjointArrangement:
    k: int
    index: KSubsetIndex
    base: Arrangement
    hyperplanes: tuple[AdjointHyperplane, ...]

    def source(self, i: int) -> Flat:
        return self.hyperplanes[i].source

    def hyperplane_of(self, flat: Flat) -> int:
        for i, h in enumerate(self.hyperplanes):
            if h.source.contains == flat.contains:
                return i
        raise KeyError(flat.contains)


def k_adjoint(a: Arrangement, k: int, lattice: IntersectionLattice | None = None) -> AdjointArrangement:
    """One hyperplane H(X) per rank-k flat X.

    ``k = 0`` gives the origin of F^1 and ``k = n`` the empty arrangement of
    F^1.  Distinct flats must give distinct hyperplanes; a collision raises
    :class:`ConsistencyError` naming both flats.
    """
    n = a.dim
    if not 0 <= k <= n:
        raise RangeError(f"k={k} outside 0..{n}")
    idx = KSubsetIndex(n, k)
    if k == n:
        return AdjointArrangement(k, idx, empty_arrangement(1), ())
    lat = lattice if lattice is not None else build_lattice(a)
    hyps = []
    for x in rank_k_flats(lat, k):
        raw = signed_minor_vector(x.basis, k)
        hyps.append(AdjointHyperplane(raw, normalize_vector(raw), x))
    try:
        base = build_arrangement([h.coeffs for h in hyps], len(idx), allow_non_essential=True)
    except DuplicateHyperplaneError as exc:
        raise ConsistencyError(f"two rank-{k} flats share an adjoint hyperplane: {exc}") from exc
    return AdjointArrangement(k, idx, base, tuple(hyps))


def top_adjoint_factor(a: Arrangement) -> Arrangement:
    """The rank-n term used inside product decompositions: the origin of F^1.

    Evaluating the adjoint formula at the single rank-n flat {0} gives the
    coefficient 1 on the one coordinate.  This, not the empty arrangement,
    is what makes the product formula hold (e.g. for B_1 x B_1 = B_2).
    """
    return build_arrangement([(1,)], 1)


def tensor(a: Arrangement, b: Arrangement) -> Arrangement:
    """Hyperplanes with coefficient a_i * b_j on coordinate (i, j), flattened row-major."""
    normals = [
        tuple(x * y for x in h.normal for y in g.normal) for h in a.hyperplanes for g in b.hyperplanes
    ]
    return build_arrangement(
        normals, a.dim * b.dim, allow_non_essential=not (a.essential and b.essential) or not normals
    )


def _factor_adjoint(a: Arrangement, i: int) -> Arrangement:
    if i == a.dim:
        return top_adjoint_factor(a)
    return k_adjoint(a, i).base


def product_adjoint_rhs(a: Arrangement, b: Arrangement, k: int) -> Arrangement:
    """The arrangement prod_i A^(i) (x) B^(k-i), blocks in increasing i."""
    n, m = a.dim, b.dim
    if not 0 <= k <= n + m:
        raise RangeError(f"k={k} outside 0..{n + m}")
    result: Arrangement | None = None
    for i in range(k + 1):
        if i > n or k - i > m:
            continue
        block = tensor(_factor_adjoint(a, i), _factor_adjoint(b, k - i))
        result = block if result is None else product(result, block)
    return result


def split_subset(subset: Sequence[int], n: int) -> tuple[Subset, Subset]:
    """J -> (J & [n], (J - [n]) - n)."""
    s = sorted(subset)
    return tuple(j for j in s if j <= n), tuple(j - n for j in s if j > n)


def join_subsets(first: Sequence[int], second: Sequence[int], n: int) -> Subset:
    return tuple(sorted(first)) + tuple(j + n for j in sorted(second))


def product_index_bijection(n: int, m: int, k: int) -> dict[Subset, tuple[Subset, Subset]]:
    return {j: split_subset(j, n) for j in KSubsetIndex(n + m, k).subsets}


def product_coordinate_map(n: int, m: int, k: int) -> tuple[int, ...]:
    """Position in the block layout of :func:`product_adjoint_rhs` for each lex k-subset of [n+m]."""
    offsets = {}
    offset = 0
    for i in range(k + 1):
        if i > n or k - i > m:
            continue
        offsets[i] = offset
        offset += comb(n, i) * comb(m, k - i)
    out = []
    for j in KSubsetIndex(n + m, k).subsets:
        first, second = split_subset(j, n)
        i = len(first)
        width = comb(m, k - i)
        out.append(
            offsets[i]
            + KSubsetIndex(n, i).position(first) * width
            + KSubsetIndex(m, k - i).position(second)
        )
    return tuple(out)


def laplace_pairing(u_basis: QMatrix, x: Flat) -> Fraction:
    """sum_I a_I(X) Delta_I(U), checked against det of U's rows stacked over X's.

    Both sides use the same representatives, so the equality is exact.
    """
    n = u_basis.ncols
    k = u_basis.nrows
    if x.basis.ncols != n:
        raise DimensionError(f"subspace in dimension {n}, flat in {x.basis.ncols}")
    if x.rank != k or x.basis.nrows != n - k:
        raise DimensionError(f"flat of rank {x.rank} cannot pair with a {k}-dimensional subspace")
    idx = KSubsetIndex(n, k)
    raw = signed_minor_vector(x.basis, k)
    rows = range(k)
    pairing = sum(
        (c * minor(u_basis, rows, [j - 1 for j in s]) for c, s in zip(raw, idx.subsets) if c != 0),
        Fraction(0),
    )
    stacked = det(u_basis.vstack(x.basis))
    if pairing != stacked:
        raise ConsistencyError(f"Laplace pairing {pairing} differs from stacked determinant {stacked}")
    return pairing


def complement_test(u_basis: QMatrix, x: Flat) -> bool:
    """True when U + X is the whole space, by the rank of the stacked bases."""
    return rank_of(u_basis.vstack(x.basis)) == u_basis.ncols

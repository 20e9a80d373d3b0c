"""Subspaces, Plücker vectors, adjoint strata and Schubert symbols."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .adjoint import AdjointArrangement, KSubsetIndex, complement_test, signed_minor_vector
from .arrangement import Flag, Flat, IntersectionLattice, locate_flat, rank_k_flats
from .errors import ConsistencyError, DimensionError, InvalidSubspaceError, RangeError, SamplingError
from .linalg import QMatrix, minor, normalize_vector, rank_of, rref

DEFAULT_BOUND = 5
MAX_SAMPLING_ATTEMPTS = 1000


@dataclass(frozen=True)
class Subspace:
    k: int
    n: int
    basis: QMatrix

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], n: int | None = None) -> Subspace:
        m = QMatrix.from_rows(rows, n)
        res = rref(m)
        if res.rank != m.nrows:
            raise InvalidSubspaceError(f"{m.nrows} basis rows span only a {res.rank}-dimensional space")
        return cls(res.rank, m.ncols, QMatrix(res.rref.rows[: res.rank], m.ncols))

    @classmethod
    def whole(cls, n: int) -> Subspace:
        return cls(n, n, QMatrix.identity(n))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(0, n, QMatrix((), n))


@dataclass(frozen=True)
class PluckerVector:
    idx: KSubsetIndex
    coords: tuple[int, ...]

    def zero_pattern(self) -> tuple[bool, ...]:
        return tuple(c == 0 for c in self.coords)


def plucker_vector(rep: QMatrix) -> PluckerVector:
    """Normalized maximal minors of any full-rank k x n representative."""
    k, n = rep.shape
    idx = KSubsetIndex(n, k)
    rows = range(k)
    minors = [minor(rep, rows, [j - 1 for j in s]) for s in idx.subsets]
    try:
        return PluckerVector(idx, normalize_vector(minors))
    except ValueError:
        raise InvalidSubspaceError("representative does not have full row rank") from None


def plucker(u: Subspace) -> PluckerVector:
    return plucker_vector(u.basis)


def locate_stratum(u: Subspace, adj: AdjointArrangement, adj_lattice: IntersectionLattice) -> Flat:
    """The flat P of L(A^(k)) whose relative interior holds the Plücker vector of U."""
    if u.k != adj.k or u.n != adj.index.n:
        raise DimensionError(f"subspace Gr({u.k},{u.n}) against a {adj.k}-adjoint in dimension {adj.index.n}")
    return locate_flat(adj_lattice, plucker(u).coords)


def _check_dim(u: Subspace, lat: IntersectionLattice):
    if u.n != lat.arrangement.dim:
        raise DimensionError(f"subspace in dimension {u.n}, arrangement in {lat.arrangement.dim}")


def _pairing_nonzero(u: Subspace, x: Flat) -> bool:
    raw = signed_minor_vector(x.basis, u.k)
    idx = KSubsetIndex(u.n, u.k)
    rows = range(u.k)
    total = sum(
        (c * minor(u.basis, rows, [j - 1 for j in s]) for c, s in zip(raw, idx.subsets) if c != 0),
        Fraction(0),
    )
    return total != 0


def l_lower(u: Subspace, lat: IntersectionLattice) -> list[Flat]:
    """Rank-k flats complementary to U.

    Decided by the rank of the stacked bases and confirmed by the adjoint
    pairing; a disagreement raises :class:`ConsistencyError`.
    """
    _check_dim(u, lat)
    out = []
    for x in rank_k_flats(lat, u.k):
        direct = complement_test(u.basis, x)
        if 0 < u.k < u.n and direct != _pairing_nonzero(u, x):
            raise ConsistencyError(f"complement test and adjoint pairing disagree on flat {sorted(x.contains)}")
        if direct:
            out.append(x)
    return out


def l_upper(u: Subspace, lat: IntersectionLattice) -> list[Flat]:
    _check_dim(u, lat)
    lower = {x.contains for x in l_lower(u, lat)}
    out = [x for x in rank_k_flats(lat, u.k) if x.contains not in lower]
    for x in out:
        if rank_of(u.basis.vstack(x.basis)) >= u.n:
            raise ConsistencyError(f"flat {sorted(x.contains)} is complementary yet not in L_U")
    return out


def intersection_dim(u: Subspace, f: Flat) -> int:
    """dim(U & F) = dim U + dim F - dim(U + F)."""
    return u.k + f.dim - rank_of(u.basis.vstack(f.basis))


def _jumps(dims: Sequence[int]) -> tuple[int, ...]:
    return tuple(i for i in range(1, len(dims)) if dims[i] > dims[i - 1])


def schubert_symbol(u: Subspace, flag: Flag) -> tuple[int, ...]:
    """The positions i in 1..n where dim(U & F_i) goes up."""
    if flag.subspaces[-1].basis.ncols != u.n:
        raise DimensionError("flag and subspace live in different dimensions")
    dims = [intersection_dim(u, f) for f in flag.subspaces]
    sigma = _jumps(dims)
    if len(sigma) != u.k:
        raise ConsistencyError(f"Schubert symbol {sigma} does not have {u.k} elements")
    return sigma


@dataclass(frozen=True)
class SchubertSignature:
    per_chain: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(enumerate(self.per_chain))


def refined_signature(u: Subspace, chains: Sequence[Flag]) -> SchubertSignature:
    """Schubert symbol of U for every flag, in the order of ``chains``.

    Flats shared between chains are intersected with U only once.
    """
    cache: dict[frozenset, int] = {}

    def dim_with(f: Flat) -> int:
        d = cache.get(f.contains)
        if d is None:
            d = cache[f.contains] = intersection_dim(u, f)
        return d

    out = []
    for flag in chains:
        sigma = _jumps([dim_with(f) for f in flag.subspaces])
        if len(sigma) != u.k:
            raise ConsistencyError(f"Schubert symbol {sigma} does not have {u.k} elements")
        out.append(sigma)
    return SchubertSignature(tuple(out))


def _as_generator(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_subspace(k: int, n: int, bound: int = DEFAULT_BOUND, seed=None) -> Subspace:
    """Row space of a random integer k x n matrix with entries in [-bound, bound].

    Rank-deficient draws are redrawn, at most 1000 times.  ``seed`` is an
    int, a sequence of ints, or a :class:`numpy.random.Generator`.
    """
    if not 0 <= k <= n:
        raise RangeError(f"k={k} outside 0..{n}")
    if bound < 1:
        raise RangeError(f"bound must be at least 1, got {bound}")
    if k == 0:
        return Subspace.zero(n)
    rng = _as_generator(seed)
    for _ in range(MAX_SAMPLING_ATTEMPTS):
        entries = rng.integers(-bound, bound, size=(k, n), endpoint=True)
        m = QMatrix.from_rows([[int(x) for x in row] for row in entries], n)
        res = rref(m)
        if res.rank == k:
            return Subspace(k, n, QMatrix(res.rref.rows, n))
    raise SamplingError(f"no rank-{k} draw in {MAX_SAMPLING_ATTEMPTS} attempts")

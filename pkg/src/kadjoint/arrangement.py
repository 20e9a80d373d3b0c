"""Linear hyperplane arrangements and their intersection lattices.

Hyperplanes are indexed 0-based in the order given.  A flat is stored with
the set of hyperplanes containing it (always closed), a canonical RREF basis
of the subspace itself and its rank ``n - dim``.  Flats are ordered by reverse
inclusion of subspaces, which is inclusion of their ``contains`` sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ChainBudgetExceeded,
    DimensionError,
    DuplicateHyperplaneError,
    InvalidHyperplaneError,
    InvalidSubspaceError,
    NonEssentialError,
    RangeError,
)
from .linalg import (
    QMatrix,
    in_row_space,
    kernel_basis,
    normalize_vector,
    rank_of,
    rref,
)

DEFAULT_CHAIN_CAP = 10_000


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[int, ...]

    @classmethod
    def from_normal(cls, normal: Sequence) -> Hyperplane:
        try:
            return cls(normalize_vector(normal))
        except ValueError:
            raise InvalidHyperplaneError("hyperplane normal must be nonzero") from None

    @property
    def dim(self) -> int:
        return len(self.normal)

    def evaluate(self, point: Sequence) -> Fraction:
        return sum((Fraction(a) * b for a, b in zip(self.normal, point)), Fraction(0))


@dataclass(frozen=True)
class Arrangement:
    dim: int
    hyperplanes: tuple[Hyperplane, ...]
    essential: bool

    def __len__(self) -> int:
        return len(self.hyperplanes)

    @property
    def normal_matrix(self) -> QMatrix:
        return QMatrix.from_rows((h.normal for h in self.hyperplanes), self.dim)

    def normal_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(h.normal for h in self.hyperplanes)


def build_arrangement(
    normals: Iterable[Sequence], dim: int | None = None, *, allow_non_essential: bool = False
) -> Arrangement:
    """Normalize the given normals into an arrangement.

    Proportional normals describe the same hyperplane and are rejected.  So
    is an arrangement whose normals do not span the ambient space, unless
    ``allow_non_essential`` is set (used for intermediate constructions such
    as empty tensor factors and adjoint arrangements).
    """
    vecs = [list(v) for v in normals]
    if dim is None:
        if not vecs:
            raise DimensionError("ambient dimension required for an empty arrangement")
        dim = len(vecs[0])
    hyperplanes: list[Hyperplane] = []
    seen: dict[tuple[int, ...], int] = {}
    for i, v in enumerate(vecs):
        if len(v) != dim:
            raise DimensionError(f"hyperplane {i + 1} has {len(v)} coordinates, expected {dim}")
        try:
            h = Hyperplane.from_normal(v)
        except InvalidHyperplaneError:
            raise InvalidHyperplaneError(f"hyperplane {i + 1} has a zero normal") from None
        if h.normal in seen:
            raise DuplicateHyperplaneError(
                f"hyperplanes {seen[h.normal] + 1} and {i + 1} coincide after normalization"
            )
        seen[h.normal] = i
        hyperplanes.append(h)
    rank = rank_of(QMatrix.from_rows((h.normal for h in hyperplanes), dim)) if hyperplanes else 0
    essential = rank == dim
    if not essential and not allow_non_essential:
        raise NonEssentialError(f"normals have rank {rank} < ambient dimension {dim}")
    return Arrangement(dim, tuple(hyperplanes), essential)


def boolean_arrangement(n: int) -> Arrangement:
    return build_arrangement(
        [[int(i == j) for j in range(n)] for i in range(n)], n, allow_non_essential=(n == 0)
    )


def random_arrangement(m: int, n: int, seed, bound: int = 3, *, generic: bool = False) -> Arrangement:
    """Seeded essential arrangement of ``m`` hyperplanes with integer normals in [-bound, bound].

    With ``generic`` every n of the normals are independent.  Draws that
    fail the requirements are discarded and redrawn.
    """
    if m < n:
        raise RangeError(f"{m} hyperplanes cannot be essential in dimension {n}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for _ in range(1000):
        rows = [[int(x) for x in r] for r in rng.integers(-bound, bound, size=(m, n), endpoint=True)]
        if any(not any(r) for r in rows):
            continue
        if generic and any(
            rank_of(QMatrix.from_rows([rows[i] for i in c], n)) < n for c in combinations(range(m), n)
        ):
            continue
        try:
            return build_arrangement(rows, n)
        except (DuplicateHyperplaneError, NonEssentialError):
            continue
    raise RangeError(f"could not draw a suitable arrangement of {m} hyperplanes in dimension {n}")


@dataclass(frozen=True)
class Flat:
    contains: frozenset[int]
    basis: QMatrix
    rank: int

    @property
    def dim(self) -> int:
        return self.basis.nrows

    def sorted_contains(self) -> tuple[int, ...]:
        return tuple(sorted(self.contains))


@dataclass(frozen=True)
class Flag:
    """Nested subspaces ``F_0 < F_1 < ... < F_n`` with ``dim F_i = i``."""

    subspaces: tuple[Flat, ...]


@dataclass(frozen=True, eq=False)
class IntersectionLattice:
    arrangement: Arrangement
    flats: tuple[Flat, ...]
    hasse_edges: tuple[tuple[int, int], ...]
    mobius: tuple[int, ...]
    _index: dict = field(repr=False)

    @property
    def rank(self) -> int:
        return max(f.rank for f in self.flats)

    def index_of(self, contains: Iterable[int]) -> int:
        return self._index[frozenset(contains)]

    def flat_of(self, contains: Iterable[int]) -> Flat:
        return self.flats[self.index_of(contains)]

    def rank_sizes(self) -> tuple[int, ...]:
        sizes = [0] * (self.rank + 1)
        for f in self.flats:
            sizes[f.rank] += 1
        return tuple(sizes)

    def leq(self, i: int, j: int) -> bool:
        return self.flats[i].contains <= self.flats[j].contains

    def upper_covers(self, i: int) -> list[int]:
        return [b for a, b in self.hasse_edges if a == i]


def mobius_from_bottom(sets: Sequence[frozenset], ranks: Sequence[int]) -> list[int]:
    """mu(0, x) for a ranked family of sets ordered by inclusion.

    ``sets`` must be sorted by rank with the unique bottom element first.
    """
    mu: list[int] = []
    for i, s in enumerate(sets):
        if i == 0:
            mu.append(1)
            continue
        mu.append(-sum(mu[j] for j in range(i) if ranks[j] < ranks[i] and sets[j] <= s))
    return mu


def covering_pairs(sets: Sequence[frozenset], ranks: Sequence[int]) -> list[tuple[int, int]]:
    edges = []
    for i, s in enumerate(sets):
        for j, t in enumerate(sets):
            if ranks[j] == ranks[i] + 1 and s <= t:
                edges.append((i, j))
    return edges


def _flat_from_normals(a: Arrangement, normals_rref: QMatrix, pivots: Sequence[int]) -> Flat:
    contains = frozenset(
        i for i, h in enumerate(a.hyperplanes) if in_row_space(normals_rref, pivots, h.normal)
    )
    basis = kernel_basis(normals_rref)
    return Flat(contains, rref(basis).rref if basis.nrows else basis, len(pivots))


def build_lattice(a: Arrangement) -> IntersectionLattice:
    """Breadth-first closure from the whole space, intersecting with one hyperplane at a time.

    Flats are deduplicated by the canonical RREF of their normal space.
    Works for non-essential arrangements too; the top element is then the
    common intersection rather than the origin.
    """
    n = a.dim
    start = _flat_from_normals(a, QMatrix((), n), ())
    seen = {(): None}
    found: list[tuple[Flat, QMatrix, tuple[int, ...]]] = [(start, QMatrix((), n), ())]
    queue = deque([0])
    while queue:
        flat, normals, _ = found[queue.popleft()]
        for i, h in enumerate(a.hyperplanes):
            if i in flat.contains:
                continue
            res = rref(normals.vstack(QMatrix.from_rows([h.normal], n)))
            key = res.rref.rows
            if key in seen:
                continue
            seen[key] = None
            child = _flat_from_normals(a, res.rref, res.pivot_columns)
            found.append((child, res.rref, res.pivot_columns))
            queue.append(len(found) - 1)
    flats = sorted((f for f, _, _ in found), key=lambda f: (f.rank, sorted(f.contains)))
    sets = [f.contains for f in flats]
    ranks = [f.rank for f in flats]
    return IntersectionLattice(
        a,
        tuple(flats),
        tuple(covering_pairs(sets, ranks)),
        tuple(mobius_from_bottom(sets, ranks)),
        {s: i for i, s in enumerate(sets)},
    )


def rank_k_flats(lat: IntersectionLattice, k: int) -> list[Flat]:
    if not 0 <= k <= lat.arrangement.dim:
        raise RangeError(f"rank {k} outside 0..{lat.arrangement.dim}")
    return [f for f in lat.flats if f.rank == k]


@dataclass(frozen=True)
class Restriction:
    arrangement: Arrangement
    index_map: tuple[int | None, ...]  # None marks a hyperplane containing U

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.index_map) if j is None)


def restriction(a: Arrangement, u_basis: QMatrix) -> Restriction:
    """Restrict to the row space U of ``u_basis``, in coordinates of that basis.

    Hyperplane i becomes the hyperplane of U with normal ``u_basis @ alpha_i``.
    Zero products mean U lies in the hyperplane; proportional products are
    merged, and the surjection onto the merged hyperplanes is returned.
    """
    if u_basis.ncols != a.dim:
        raise DimensionError(f"subspace lives in dimension {u_basis.ncols}, arrangement in {a.dim}")
    k = u_basis.nrows
    if rank_of(u_basis) != k:
        raise InvalidSubspaceError("subspace basis rows are linearly dependent")
    normals: list[tuple[int, ...]] = []
    position: dict[tuple[int, ...], int] = {}
    index_map: list[int | None] = []
    for h in a.hyperplanes:
        v = u_basis.apply(h.normal)
        if all(x == 0 for x in v):
            index_map.append(None)
            continue
        key = normalize_vector(v)
        if key not in position:
            position[key] = len(normals)
            normals.append(key)
        index_map.append(position[key])
    restricted = build_arrangement(normals, k, allow_non_essential=not a.essential)
    return Restriction(restricted, tuple(index_map))


def locate_flat(lat: IntersectionLattice, point: Sequence) -> Flat:
    """The flat whose relative interior holds ``point``."""
    a = lat.arrangement
    if len(point) != a.dim:
        raise DimensionError(f"point of length {len(point)} in dimension {a.dim}")
    vanishing = [i for i, h in enumerate(a.hyperplanes) if h.evaluate(point) == 0]
    return lat.flat_of(vanishing)


def empty_arrangement(dim: int) -> Arrangement:
    return Arrangement(dim, (), dim == 0)


def product(a: Arrangement, b: Arrangement) -> Arrangement:
    n, m = a.dim, b.dim
    normals = [h.normal + (0,) * m for h in a.hyperplanes]
    normals += [(0,) * n + h.normal for h in b.hyperplanes]
    return build_arrangement(normals, n + m, allow_non_essential=not (a.essential and b.essential))


def maximal_chains(lat: IntersectionLattice, cap: int = DEFAULT_CHAIN_CAP) -> list[Flag]:
    """All maximal chains as flags, depth first in flat-index order."""
    up: dict[int, list[int]] = {i: [] for i in range(len(lat.flats))}
    for i, j in lat.hasse_edges:
        up[i].append(j)
    chains: list[Flag] = []
    stack: list[tuple[int, tuple[int, ...]]] = [(0, (0,))]
    while stack:
        node, path = stack.pop()
        if not up[node]:
            if len(chains) >= cap:
                raise ChainBudgetExceeded(len(chains) + 1, cap)
            chains.append(Flag(tuple(lat.flats[i] for i in reversed(path))))
            continue
        for nxt in reversed(up[node]):
            stack.append((nxt, path + (nxt,)))
    return chains


def characteristic_polynomial(lat: IntersectionLattice) -> tuple[int, ...]:
    """Coefficients of sum mu(0, X) t^(n - rank X), highest degree first."""
    n = lat.arrangement.dim
    coeffs = [0] * (n + 1)
    for f, mu in zip(lat.flats, lat.mobius):
        coeffs[f.rank] += mu
    return tuple(coeffs)

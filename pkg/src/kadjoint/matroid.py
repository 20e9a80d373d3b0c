"""Vector matroids of restrictions and their invariants.

Ground-set elements are 0-based hyperplane indices.  Subsets are returned
as sorted tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .arrangement import Arrangement, covering_pairs, mobius_from_bottom, restriction
from .grassmann import Subspace
from .linalg import QMatrix, normalize_vector, rank_of

Subset = tuple[int, ...]


@dataclass(eq=False)
class VectorMatroid:
    """Matroid of the columns ``vectors`` in F^k, ranks memoized by subset."""

    ground_size: int
    dim: int
    vectors: tuple[tuple[Fraction, ...], ...]
    _rank_cache: dict[frozenset, int] = field(default_factory=dict, repr=False)

    def rank(self, subset: Iterable[int] = None) -> int:
        key = frozenset(range(self.ground_size)) if subset is None else frozenset(subset)
        r = self._rank_cache.get(key)
        if r is None:
            if key:
                r = rank_of(QMatrix(tuple(self.vectors[i] for i in sorted(key)), self.dim))
            else:
                r = 0
            self._rank_cache[key] = r
        return r

    @property
    def full_rank(self) -> int:
        return self.rank()

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = tuple(subset)
        return self.rank(s) == len(s)

    def loops(self) -> Subset:
        return tuple(i for i in range(self.ground_size) if self.rank((i,)) == 0)

    def parallel_classes(self) -> list[Subset]:
        classes: dict[tuple[int, ...], list[int]] = {}
        for i, v in enumerate(self.vectors):
            if any(x != 0 for x in v):
                classes.setdefault(normalize_vector(v), []).append(i)
        return sorted(tuple(c) for c in classes.values())

    def closure(self, subset: Iterable[int]) -> frozenset[int]:
        s = frozenset(subset)
        r = self.rank(s)
        return frozenset(i for i in range(self.ground_size) if i in s or self.rank(s | {i}) == r)


def matroid_from_vectors(vectors: Sequence[Sequence], dim: int | None = None) -> VectorMatroid:
    cols = tuple(tuple(Fraction(x) for x in v) for v in vectors)
    if dim is None:
        dim = len(cols[0]) if cols else 0
    return VectorMatroid(len(cols), dim, cols)


def matroid_of_restriction(a: Arrangement, u: Subspace) -> VectorMatroid:
    """Column i is ``A_U alpha_i``.

    Its span has the same dimension as the span of the orthogonal
    projections of the normals onto U, since both equal k minus the
    dimension of U cut with the corresponding hyperplanes.
    """
    cols = tuple(u.basis.apply(h.normal) for h in a.hyperplanes)
    return VectorMatroid(len(cols), u.k, cols)


def bases(m: VectorMatroid) -> list[Subset]:
    r = m.full_rank
    return [s for s in combinations(range(m.ground_size), r) if m.rank(s) == r]


def independent_sets(m: VectorMatroid) -> list[Subset]:
    out = []
    for size in range(m.full_rank + 1):
        out.extend(s for s in combinations(range(m.ground_size), size) if m.rank(s) == size)
    return out


def independence_numbers(m: VectorMatroid) -> tuple[int, ...]:
    counts = [0] * (m.full_rank + 1)
    for s in independent_sets(m):
        counts[len(s)] += 1
    return tuple(counts)


def circuits(m: VectorMatroid) -> list[Subset]:
    """Minimal dependent sets, by increasing size."""
    out = []
    for size in range(1, m.full_rank + 2):
        for s in combinations(range(m.ground_size), size):
            if m.rank(s) == size - 1 and all(m.rank(s[:i] + s[i + 1 :]) == size - 1 for i in range(size)):
                out.append(s)
    return out


def _order_key(order: Sequence[int] | None, m: VectorMatroid):
    if order is None:
        return lambda e: e
    if sorted(order) != list(range(m.ground_size)):
        raise ValueError(f"order must be a permutation of 0..{m.ground_size - 1}")
    rank_in_order = {e: i for i, e in enumerate(order)}
    return rank_in_order.__getitem__


def broken_circuits(m: VectorMatroid, order: Sequence[int] | None = None) -> list[Subset]:
    """Circuits minus their largest element; ``order`` lists the elements from smallest to largest."""
    key = _order_key(order, m)
    found = set()
    for c in circuits(m):
        top = max(c, key=key)
        found.add(tuple(e for e in c if e != top))
    return sorted(found, key=lambda s: (len(s), s))


def nbc_sets(m: VectorMatroid, order: Sequence[int] | None = None) -> list[Subset]:
    bcs = [frozenset(b) for b in broken_circuits(m, order)]
    out = []
    for size in range(m.full_rank + 1):
        for s in combinations(range(m.ground_size), size):
            fs = frozenset(s)
            if not any(b <= fs for b in bcs):
                out.append(s)
    return out


def nbc_counts(m: VectorMatroid, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Number of sets of each size 0..rank containing no broken circuit.

    A loop makes the empty set a broken circuit, so every count is zero.
    """
    counts = [0] * (m.full_rank + 1)
    for s in nbc_sets(m, order):
        counts[len(s)] += 1
    return tuple(counts)


@dataclass(frozen=True)
class MatroidLattice:
    flats: tuple[frozenset[int], ...]
    ranks: tuple[int, ...]
    mobius: tuple[int, ...]
    hasse_edges: tuple[tuple[int, int], ...]

    def rank_sizes(self) -> tuple[int, ...]:
        sizes = [0] * (max(self.ranks) + 1)
        for r in self.ranks:
            sizes[r] += 1
        return tuple(sizes)


def flats_lattice(m: VectorMatroid) -> MatroidLattice:
    closed = {m.closure(s) for s in independent_sets(m)}
    flats = sorted(closed, key=lambda f: (m.rank(f), sorted(f)))
    ranks = [m.rank(f) for f in flats]
    return MatroidLattice(
        tuple(flats),
        tuple(ranks),
        tuple(mobius_from_bottom(flats, ranks)),
        tuple(covering_pairs(flats, ranks)),
    )


def characteristic_polynomial_matroid(m: VectorMatroid) -> tuple[int, ...]:
    """sum over flats of mu(0, x) t^(r - rank x), highest degree first.

    The bottom flat is the closure of the empty set, so loops do not zero
    this polynomial; compare :func:`nbc_polynomial`.
    """
    lat = flats_lattice(m)
    r = m.full_rank
    coeffs = [0] * (r + 1)
    for rank, mu in zip(lat.ranks, lat.mobius):
        coeffs[rank] += mu
    return tuple(coeffs)


def whitney_numbers(m: VectorMatroid) -> tuple[int, ...]:
    return characteristic_polynomial_matroid(m)


def nbc_polynomial(m: VectorMatroid, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """The signed NBC counts, identically zero when a loop is present."""
    return tuple((-1) ** i * c for i, c in enumerate(nbc_counts(m, order)))


def matroid_equal(m1: VectorMatroid, m2: VectorMatroid) -> bool:
    if m1.ground_size != m2.ground_size:
        raise ValueError(f"ground sets differ in size: {m1.ground_size} vs {m2.ground_size}")
    return bases(m1) == bases(m2)


def fingerprint(m: VectorMatroid) -> tuple[Subset, ...]:
    return tuple(bases(m))


@dataclass(frozen=True)
class MatroidInvariants:
    rank: int
    independence_numbers: tuple[int, ...]
    whitney: tuple[int, ...]
    char_poly: tuple[int, ...]
    nbc_counts: tuple[int, ...]
    loops: Subset
    parallel_classes: tuple[Subset, ...]
    bases_count: int
    independence_numbers_restricted: tuple[int, ...] | None = None

    def signless_whitney(self) -> tuple[int, ...]:
        return tuple(abs(w) for w in self.whitney)


def invariants(
    m: VectorMatroid, order: Sequence[int] | None = None, *, restricted: VectorMatroid | None = None
) -> MatroidInvariants:
    """Collect the invariants of ``m`` on its full ground set.

    ``restricted`` is the matroid of the deduplicated restriction; its
    independence numbers are carried alongside when given.
    """
    chi = characteristic_polynomial_matroid(m)
    return MatroidInvariants(
        rank=m.full_rank,
        independence_numbers=independence_numbers(m),
        whitney=chi,
        char_poly=chi,
        nbc_counts=nbc_counts(m, order),
        loops=m.loops(),
        parallel_classes=tuple(m.parallel_classes()),
        bases_count=len(bases(m)),
        independence_numbers_restricted=None if restricted is None else independence_numbers(restricted),
    )


def restricted_matroid(a: Arrangement, u: Subspace) -> VectorMatroid:
    """Matroid of the normals of the deduplicated restriction of ``a`` to U."""
    res = restriction(a, u.basis)
    return matroid_from_vectors([h.normal for h in res.arrangement.hyperplanes], u.k)

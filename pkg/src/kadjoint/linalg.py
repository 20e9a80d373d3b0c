"""Exact linear algebra over the rationals.

Everything here works on :class:`QMatrix`, an immutable row-major grid of
:class:`fractions.Fraction`.  Subspaces are represented canonically by the
nonzero rows of their reduced row echelon form, so two matrices span the
same row space exactly when :func:`row_space_basis` returns equal matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionError

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p"``/``"p/q"`` strings to a Fraction."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            p = int(num)
            q = int(den) if sep else 1
        except ValueError:
            raise ValueError(f"not a rational literal: {value!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return Fraction(p, q)
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class QMatrix:
    """Immutable rational matrix; ``ncols`` is kept so 0-row matrices have a shape."""

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise DimensionError(f"row of length {len(r)} in matrix with {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> QMatrix:
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if ncols is None:
            if not data:
                raise DimensionError("column count required for a matrix without rows")
            ncols = len(data[0])
        return cls(data, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> QMatrix:
        zero = Fraction(0)
        return cls(tuple((zero,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls(
            tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), n
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> QMatrix:
        return QMatrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return QMatrix(
            tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self.rows),
            other.ncols,
        )

    def apply(self, v: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} against {self.ncols} columns")
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def vstack(self, other: QMatrix) -> QMatrix:
        if self.ncols != other.ncols:
            raise DimensionError(f"cannot stack {self.shape} on {other.shape}")
        return QMatrix(self.rows + other.rows, self.ncols)

    def submatrix(self, row_set: Sequence[int], col_set: Sequence[int]) -> QMatrix:
        return QMatrix(
            tuple(tuple(self.rows[i][j] for j in col_set) for i in row_set), len(col_set)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.rows)
        return f"QMatrix({self.nrows}x{self.ncols}: [{body}])"


@dataclass(frozen=True)
class RrefResult:
    rref: QMatrix
    pivot_columns: tuple[int, ...]
    rank: int


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    # in-place Gauss-Jordan on a list-of-lists copy
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f != 0:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: QMatrix) -> RrefResult:
    """Reduced row echelon form, keeping the input shape (zero rows at the bottom)."""
    rows, pivots = _rref_rows([list(r) for r in m.rows], m.ncols)
    return RrefResult(QMatrix(tuple(tuple(r) for r in rows), m.ncols), tuple(pivots), len(pivots))


def row_space_basis(m: QMatrix) -> QMatrix:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    res = rref(m)
    return QMatrix(res.rref.rows[: res.rank], m.ncols)


def rank_of(m: QMatrix) -> int:
    return rref(m).rank


def kernel_basis(m: QMatrix) -> QMatrix:
    """Basis of ``{x : m x = 0}`` as rows, one per free column of the RREF."""
    res = rref(m)
    n = m.ncols
    pivots = res.pivot_columns
    free = [c for c in range(n) if c not in set(pivots)]
    out = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row_idx, p in enumerate(pivots):
            v[p] = -res.rref.rows[row_idx][f]
        out.append(tuple(v))
    return QMatrix(tuple(out), n)


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m: QMatrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is scaled by the lcm of its denominators first so the
    elimination runs on integers; the scale is divided back out.
    """
    if m.nrows != m.ncols:
        raise DimensionError(f"determinant of non-square {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    scale = 1
    ints = []
    for r in m.rows:
        d = lcm(*(x.denominator for x in r))
        scale *= d
        ints.append([x.numerator * (d // x.denominator) for x in r])
    return Fraction(_bareiss(ints), scale)


def minor(m: QMatrix, row_set: Iterable[int], col_set: Iterable[int]) -> Fraction:
    rs = sorted(row_set)
    cs = sorted(col_set)
    if len(rs) != len(cs):
        raise DimensionError(f"minor needs equal row/column counts, got {len(rs)} and {len(cs)}")
    if any(not 0 <= i < m.nrows for i in rs) or any(not 0 <= j < m.ncols for j in cs):
        raise DimensionError(f"minor index out of range for {m.nrows}x{m.ncols} matrix")
    return det(m.submatrix(rs, cs))


def normalize_vector(v: Sequence) -> tuple[int, ...]:
    """Projective normal form: integer entries, gcd 1, first nonzero entry positive.

    Raises ``ValueError`` for the zero vector.
    """
    fr = [as_rational(x) for x in v]
    first = next((x for x in fr if x != 0), None)
    if first is None:
        raise ValueError("zero vector has no projective normal form")
    d = lcm(*(x.denominator for x in fr)) if fr else 1
    ints = [x.numerator * (d // x.denominator) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if first < 0:
        g = -g
    return tuple(x // g for x in ints)


def in_row_space(basis_rref: QMatrix, pivots: Sequence[int], v: Sequence[Fraction]) -> bool:
    """Membership of ``v`` in the row space of an RREF matrix with the given pivots."""
    w = list(v)
    for row, p in zip(basis_rref.rows, pivots):
        f = w[p]
        if f != 0:
            w = [a - f * b for a, b in zip(w, row)]
    return all(x == 0 for x in w)

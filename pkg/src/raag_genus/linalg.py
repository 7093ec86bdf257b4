"""Exact integer linear algebra.

Entries are Python integers throughout, so nothing overflows. Rank and
determinant use fraction-free (Bareiss) elimination from :mod:`.kernels`;
the Smith form and the skew-symmetric normal form are computed here by
explicit unimodular row/column operations whose inverses are tracked too.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from . import kernels
from .errors import MalformedMatrix, NotSkewSymmetric, NotSquare


@dataclass(frozen=True)
class IntMatrix:
    nrows: int
    ncols: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise MalformedMatrix(f"entry count does not match {self.nrows}x{self.ncols}")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "IntMatrix":
        ncols = nrows if ncols is None else ncols
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, entries: Sequence[int], nrows: int | None = None, ncols: int | None = None) -> "IntMatrix":
        nrows = len(entries) if nrows is None else nrows
        ncols = nrows if ncols is None else ncols
        return cls(
            nrows,
            ncols,
            tuple(tuple(entries[i] if i == j and i < len(entries) else 0 for j in range(ncols)) for i in range(nrows)),
        )

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(
            self.ncols,
            self.nrows,
            tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise MalformedMatrix(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        cols = list(zip(*other.rows)) if other.nrows else [()] * other.ncols
        return IntMatrix(
            self.nrows,
            other.ncols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows),
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.nrows, self.ncols, tuple(tuple(-x for x in r) for r in self.rows))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise MalformedMatrix("shape mismatch in addition")
        return IntMatrix(
            self.nrows, self.ncols, tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        )

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        return IntMatrix(len(row_idx), len(col_idx), tuple(tuple(self.rows[i][j] for j in col_idx) for i in row_idx))

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "IntMatrix":
        try:
            rows = [[int(x) for x in r] for r in data]
        except (TypeError, ValueError) as exc:
            raise MalformedMatrix(f"matrix entries must be integers or decimal strings: {exc}") from None
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise MalformedMatrix("ragged matrix")
        return cls.from_rows(rows)


class SkewIntMatrix(IntMatrix):
    """Square integer matrix with M = -M^T."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_square:
            raise NotSkewSymmetric("skew-symmetric matrices must be square")
        for i in range(self.nrows):
            for j in range(i, self.ncols):
                if self.rows[i][j] != -self.rows[j][i]:
                    raise NotSkewSymmetric(f"entries ({i},{j}) and ({j},{i}) are not negatives of each other")

    @classmethod
    def of(cls, m: IntMatrix) -> "SkewIntMatrix":
        return cls(m.nrows, m.ncols, m.rows)


def _as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix.from_rows(m)


def rank(m) -> int:
    """Rank over the rationals."""
    m = _as_matrix(m)
    return kernels.bareiss_rank([list(r) for r in m.rows], m.ncols)


def determinant(m) -> int:
    m = _as_matrix(m)
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.nrows}x{m.ncols} matrix")
    return kernels.bareiss_det([list(r) for r in m.rows])


def is_unimodular(m) -> bool:
    m = _as_matrix(m)
    return m.is_square and abs(determinant(m)) == 1


def _identity_lists(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _freeze(a: list[list[int]], ncols: int) -> IntMatrix:
    return IntMatrix(len(a), ncols, tuple(tuple(r) for r in a))


@dataclass(frozen=True)
class SmithForm:
    """``U @ M @ V == D`` with ``U``, ``V`` unimodular.

    ``U_inv`` and ``V_inv`` are the exact inverses, so ``M == U_inv @ D @ V_inv``.
    """

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def invariant_factors(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.nrows, self.D.ncols))]

    @property
    def nonzero_factors(self) -> list[int]:
        return [d for d in self.invariant_factors if d]


def smith_normal_form(m) -> SmithForm:
    m = _as_matrix(m)
    nr, nc = m.nrows, m.ncols
    D = m.to_lists()
    U, Ui = _identity_lists(nr), _identity_lists(nr)
    V, Vi = _identity_lists(nc), _identity_lists(nc)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]
        for r in Ui:
            r[src] -= q * r[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for r in D:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]
        Vi[src] = [a - q * b for a, b in zip(Vi[src], Vi[dst])]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = D[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, nr):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, nc):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                # a remainder smaller than the pivot is left in row/column t
                best = None
                for i in range(t, nr):
                    x = D[i][t]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, t)
                for j in range(t, nc):
                    x = D[t][j]
                    if x and abs(x) < best[0]:
                        best = (abs(x), t, j)
                _, i, j = best
                if i != t:
                    swap_rows(t, i)
                if j != t:
                    swap_cols(t, j)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            negate_row(t)
        t += 1
    return SmithForm(_freeze(U, nr), _freeze(D, nc), _freeze(V, nc), _freeze(Ui, nr), _freeze(Vi, nc))


@dataclass(frozen=True)
class SkewNormalForm:
    """``U @ M @ U.T`` is the direct sum of blocks ``[[0, l], [-l, 0]]`` for
    each ``l`` in ``lambdas`` followed by zeros. ``U_inv`` is the exact inverse
    of ``U``; its columns ``2i`` and ``2i+1`` give the i-th elementary wedge."""

    U: IntMatrix
    lambdas: tuple[int, ...]
    size: int
    U_inv: IntMatrix

    @property
    def block_matrix(self) -> IntMatrix:
        return hyperbolic_blocks(self.lambdas, self.size)


def hyperbolic_blocks(lambdas: Sequence[int], size: int) -> IntMatrix:
    a = [[0] * size for _ in range(size)]
    for i, lam in enumerate(lambdas):
        a[2 * i][2 * i + 1] = lam
        a[2 * i + 1][2 * i] = -lam
    return _freeze(a, size)


def skew_normal_form(m) -> SkewNormalForm:
    """Unimodular congruence to hyperbolic blocks with l_1 | l_2 | ... .

    Pivots on a nonzero entry of minimal absolute value (first in row-major
    order), clears the two pivot rows by simultaneous row and column
    operations, and restarts whenever a smaller remainder appears. A final
    pass merges blocks whose entries violate the divisibility chain.
    """
    m = _as_matrix(m)
    if not isinstance(m, SkewIntMatrix):
        m = SkewIntMatrix.of(m)
    n = m.nrows
    A = m.to_lists()
    U, Ui = _identity_lists(n), _identity_lists(n)

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for r in A:
            r[i], r[j] = r[j], r[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def addmul(k, l, q):
        # basis change e_k += q e_l, applied to rows and mirrored on columns
        A[k] = [a + q * b for a, b in zip(A[k], A[l])]
        for r in A:
            r[k] += q * r[l]
        U[k] = [a + q * b for a, b in zip(U[k], U[l])]
        for r in Ui:
            r[l] -= q * r[k]

    def reduce_from(t):
        while t + 1 < n:
            best = None
            for i in range(t, n):
                row = A[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                return
            _, i, j = best
            swap(t, i)
            swap(t + 1, j)
            p = A[t][t + 1]
            clean = True
            for k in range(t + 2, n):
                if A[t][k]:
                    addmul(k, t + 1, -(A[t][k] // p))
                    clean = clean and A[t][k] == 0
                if A[t + 1][k]:
                    addmul(k, t, A[t + 1][k] // p)
                    clean = clean and A[t + 1][k] == 0
            if not clean:
                continue
            if p < 0:
                swap(t, t + 1)
            t += 2

    reduce_from(0)
    while True:
        k = 0
        while 2 * k + 1 < n and A[2 * k][2 * k + 1]:
            k += 1
        lambdas = [A[2 * i][2 * i + 1] for i in range(k)]
        bad = next(((i, j) for i in range(k) for j in range(i + 1, k) if lambdas[j] % lambdas[i]), None)
        if bad is None:
            break
        i, j = bad
        addmul(2 * i, 2 * j, 1)
        reduce_from(2 * i)
    return SkewNormalForm(_freeze(U, n), tuple(lambdas), n, _freeze(Ui, n))


def content(vec: Iterable[int]) -> int:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g


def primitive(vec: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Split a nonzero vector as ``scale * direction`` with the direction
    primitive and its first nonzero entry positive."""
    g = content(vec)
    if g == 0:
        raise ValueError("zero vector has no direction")
    first = next(x for x in vec if x)
    if first < 0:
        g = -g
    return g, tuple(x // g for x in vec)

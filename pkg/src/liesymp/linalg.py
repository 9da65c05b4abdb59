"""Exact dense linear algebra over the rationals (or any exact field).

Everything here works with ``fractions.Fraction`` entries by default but is
written field-agnostically: any element type supporting +, -, *, / and
``== 0`` can be used (see :mod:`liesymp.qext` for a quadratic extension).

Pivoting is deterministic (first nonzero entry in column order), so echelon
forms, kernel bases and solutions are reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Q = Fraction

__all__ = ["Q", "Matrix", "zeros", "identity", "from_rows", "from_cols", "as_scalar"]


def as_scalar(x):
    """Coerce ints/strings to Fraction; pass exact field elements through."""
    if isinstance(x, (int, str)):
        return Fraction(x)
    return x


_as_scalar = as_scalar


class Matrix:
    """Immutable dense matrix with exact field entries, row-major storage."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self._e = tuple(_as_scalar(x) for x in entries)

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def zero(rows: int, cols: int, zero=Q(0)) -> "Matrix":
        return Matrix(rows, cols, [zero] * (rows * cols))

    @staticmethod
    def identity(n: int, one=Q(1), zero=Q(0)) -> "Matrix":
        return Matrix(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @staticmethod
    def column(entries: Sequence) -> "Matrix":
        entries = list(entries)
        return Matrix(len(entries), 1, entries)

    # -- access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self._e[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._e[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self._e[j :: self.cols]

    def entries(self) -> tuple:
        return self._e

    def column_vector(self) -> tuple:
        if self.cols != 1:
            raise ValueError("not a column vector")
        return self._e

    # -- structural ops -------------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [self._e[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)])

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return Matrix(self.rows, self.cols + other.cols, out)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self._e == other._e)

    def __hash__(self):
        return hash((self.rows, self.cols, self._e))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self._e, other._e)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self._e, other._e)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [-a for a in self._e])

    def scale(self, c) -> "Matrix":
        c = _as_scalar(c)
        return Matrix(self.rows, self.cols, [c * a for a in self._e])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        n, m, k = self.rows, other.cols, self.cols
        out = []
        for i in range(n):
            ri = self.row(i)
            for j in range(m):
                cj = other.col(j)
                s = ri[0] * cj[0]
                for t in range(1, k):
                    s = s + ri[t] * cj[t]
                out.append(s)
        return Matrix(n, m, out)

    def mul_vec(self, v: Sequence) -> tuple:
        if self.cols != len(v):
            raise ValueError("dimension mismatch")
        return tuple(sum((self[i, j] * v[j] for j in range(self.cols)),
                         self[i, 0] * 0) for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._e)

    # -- elimination ----------------------------------------------------------

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns.

        Pivot choice: first row with a nonzero entry in the leftmost
        unresolved column (no magnitude-based pivoting; exact arithmetic
        makes that unnecessary and determinism desirable).
        """
        m = [list(self.row(i)) for i in range(self.rows)]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            p = m[r][c]
            m[r] = [x / p for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        flat = [x for row in m for x in row]
        return Matrix(self.rows, self.cols, flat), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list["Matrix"]:
        """Basis of the right null space, one column per echelon free variable.

        Free variables run in increasing column order; in each basis vector
        the corresponding free coordinate is 1 and the other free coordinates
        are 0.
        """
        R, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for f in free:
            v = [Q(0)] * self.cols
            v[f] = Q(1)
            for r, c in enumerate(pivots):
                v[c] = -R[r, f]
            basis.append(Matrix.column(v))
        return basis

    def solve(self, b: "Matrix") -> "Matrix | None":
        """One exact solution of ``self @ x = b``, or None if inconsistent.

        Free variables are set to zero, so the result is deterministic.
        """
        if b.rows != self.rows or b.cols != 1:
            raise ValueError("right-hand side shape mismatch")
        aug = self.hstack(b)
        R, pivots = aug.rref()
        for r, c in enumerate(pivots):
            if c == self.cols:
                return None
        x = [Q(0)] * self.cols
        for r, c in enumerate(pivots):
            x[c] = R[r, self.cols]
        return Matrix.column(x)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("not square")
        aug = self.hstack(Matrix.identity(self.rows))
        R, pivots = aug.rref()
        if pivots[: self.rows] != list(range(self.rows)):
            raise ValueError("singular matrix")
        out = []
        for i in range(self.rows):
            out.extend(R.row(i)[self.rows :])
        return Matrix(self.rows, self.cols, out)

    def det(self):
        """Determinant by fraction-free-ish Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("not square")
        n = self.rows
        m = [list(self.row(i)) for i in range(n)]
        det = Q(1)
        for c in range(n):
            pr = None
            for i in range(c, n):
                if m[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                return Q(0)
            if pr != c:
                m[c], m[pr] = m[pr], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] / inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det


def zeros(rows: int, cols: int) -> Matrix:
    return Matrix.zero(rows, cols)


def identity(n: int) -> Matrix:
    return Matrix.identity(n)


def from_rows(rows: Iterable[Sequence]) -> Matrix:
    rows = [list(r) for r in rows]
    if not rows:
        raise ValueError("empty matrix")
    return Matrix(len(rows), len(rows[0]), [x for r in rows for x in r])


def from_cols(cols: Iterable[Sequence]) -> Matrix:
    return from_rows(cols).transpose()

"""Dense exact linear algebra over the rationals.

Matrices are immutable once built; row reduction always picks the first
nonzero entry in column order and swaps rows deterministically, so the RREF
of a matrix -- and hence the basis matrix of a :class:`Subspace` -- is a
canonical form.  Two subspaces are equal iff their basis matrices are
identical.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import QQ, ZERO, ONE
from .polys import Poly


class Matrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries: Iterable[Sequence], cols: int | None = None):
        data = tuple(tuple(QQ(x) for x in row) for row in entries)
        self.data = data
        self.rows = len(data)
        self.cols = len(data[0]) if data else (cols or 0)
        for row in data:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        cols = [tuple(c) for c in columns]
        rows = len(cols[0]) if cols else 0
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(rows)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = QQ(c)
        return Matrix([[c * x for x in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in matrix product")
        ot = other.data
        out = []
        for row in self.data:
            new = [ZERO] * other.cols
            for k, a in enumerate(row):
                if a:
                    ok = ot[k]
                    for j in range(other.cols):
                        if ok[j]:
                            new[j] += a * ok[j]
            out.append(new)
        return Matrix(out)

    def matvec(self, v: Sequence) -> tuple:
        if self.cols != len(v):
            raise ValueError("dimension mismatch in matvec")
        out = []
        for row in self.data:
            s = ZERO
            for a, x in zip(row, v):
                if a and x:
                    s += a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), ZERO)

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.data)

    def row_list(self) -> list[list]:
        return [list(row) for row in self.data]

    def rref(self) -> tuple["Matrix", tuple[int, ...], int]:
        """Reduced row-echelon form; returns (reduced, pivot columns, rank)."""
        m = self.row_list()
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            pivot_row = None
            for i in range(r, rows):
                if m[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            if pivot_row != r:
                m[r], m[pivot_row] = m[pivot_row], m[r]
            pv = m[r][c]
            if pv != 1:
                inv = ONE / pv
                m[r] = [x * inv for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    mr = m[r]
                    m[i] = [x - f * y for x, y in zip(m[i], mr)]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return Matrix(m), tuple(pivots), r

    def rank(self) -> int:
        return self.rref()[2]

    def kernel(self) -> "Subspace":
        """Right kernel {v : self @ v = 0} as a canonical subspace."""
        reduced, pivots, rank = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [ZERO] * self.cols
            v[f] = ONE
            for r, p in enumerate(pivots):
                v[p] = -reduced.data[r][f]
            basis.append(v)
        return Subspace.from_vectors(self.cols, basis)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = self.row_list()
        n = self.rows
        sign = 1
        det = ONE
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if m[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                return ZERO
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                sign = -sign
            pv = m[c][c]
            det *= pv
            inv = ONE / pv
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [x - f * y for x, y in zip(m[i], m[c])]
        return det if sign == 1 else -det

    def char_poly(self) -> Poly:
        """Monic characteristic polynomial det(t*I - self), Faddeev-LeVerrier."""
        if self.rows != self.cols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        n = self.rows
        coeffs = [ZERO] * (n + 1)
        coeffs[n] = ONE
        M = Matrix.identity(n)
        for k in range(1, n + 1):
            AM = self * M
            c = -AM.trace() / k
            coeffs[n - k] = c
            if k < n:
                M = Matrix(
                    [
                        [
                            AM.data[i][j] + (c if i == j else ZERO)
                            for j in range(n)
                        ]
                        for i in range(n)
                    ]
                )
        return Poly(coeffs)


class Subspace:
    """Subspace of K^n in canonical form: RREF basis with no zero rows."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Matrix):
        self.ambient_dim = ambient_dim
        self.basis = basis

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if not vecs:
            return cls(ambient_dim, Matrix.zeros(0, ambient_dim))
        reduced, _, rank = Matrix(vecs).rref()
        return cls(ambient_dim, Matrix(reduced.data[:rank], cols=ambient_dim))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.zeros(0, ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of K^{self.ambient_dim})"

    def basis_vectors(self) -> list[tuple]:
        return [tuple(row) for row in self.basis.data]

    def contains_vector(self, v: Sequence) -> bool:
        """Membership by reduction against the RREF basis."""
        w = [QQ(x) for x in v]
        pivots = self._pivots()
        for r, p in enumerate(pivots):
            if w[p]:
                f = w[p]
                row = self.basis.data[r]
                w = [x - f * y for x, y in zip(w, row)]
        return all(x == 0 for x in w)

    def _pivots(self) -> list[int]:
        pivots = []
        for row in self.basis.data:
            for j, x in enumerate(row):
                if x:
                    pivots.append(j)
                    break
        return pivots

    def contains(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains_vector(v) for v in other.basis_vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(
            self.ambient_dim, list(self.basis.data) + list(other.basis.data)
        )

    def equations(self) -> Matrix:
        """A matrix E with self = {v : E @ v = 0} (rows span the annihilator)."""
        if self.dim == 0:
            return Matrix.identity(self.ambient_dim)
        return self.basis.kernel().basis

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        stacked = Matrix(
            list(self.equations().data) + list(other.equations().data),
            cols=self.ambient_dim,
        )
        return stacked.kernel()

    def _check_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")


def subspace_ops(a: Subspace, b: Subspace) -> dict:
    """Sum, intersection and containment of two subspaces of the same ambient."""
    return {
        "sum": a.sum(b),
        "intersection": a.intersect(b),
        "containment": a.contains(b),
    }


def solve(a: Matrix, b: Sequence):
    """One solution x of a @ x = b, or None if inconsistent."""
    n = a.cols
    aug = Matrix([list(row) + [QQ(x)] for row, x in zip(a.data, b)])
    reduced, pivots, rank = aug.rref()
    if n in pivots:
        return None
    x = [ZERO] * n
    for r, p in enumerate(pivots):
        x[p] = reduced.data[r][n]
    return tuple(x)

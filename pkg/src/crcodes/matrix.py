"""Dense exact linear algebra over GF(q), plus an exact rational solver.

Matrices are immutable: entries live in nested tuples of encoded field
elements.  Everything here is deliberately plain Python; the problem
sizes are small and exactness matters more than speed.
"""

from __future__ import annotations

from fractions import Fraction
from operator import index

from .field import Field


class MatrixGF:
    """A rows x cols matrix over a Field.

    ``cols`` must be passed explicitly when constructing a matrix with
    zero rows, since it cannot be inferred from the data.
    """

    __slots__ = ("field", "nrows", "ncols", "data")

    def __init__(self, field: Field, data, ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if rows:
            ncols = len(rows[0])
            for row in rows:
                if len(row) != ncols:
                    raise ValueError("ragged rows")
        elif ncols is None:
            raise ValueError("ncols required for a matrix with no rows")
        q = field.q
        for row in rows:
            for x in row:
                if not 0 <= x < q:
                    raise ValueError(f"entry {x} out of range for GF({q})")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.data = rows

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "MatrixGF":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "MatrixGF":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, field: Field, columns, nrows: int | None = None) -> "MatrixGF":
        columns = [tuple(c) for c in columns]
        if columns:
            nrows = len(columns[0])
        elif nrows is None:
            raise ValueError("nrows required for a matrix with no columns")
        return cls(field, [[c[i] for c in columns] for i in range(nrows)], len(columns))

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "MatrixGF":
        return MatrixGF(self.field, self.columns() or [], self.nrows)

    def hstack(self, other: "MatrixGF") -> "MatrixGF":
        if other.field != self.field or other.nrows != self.nrows:
            raise ValueError("shape or field mismatch")
        return MatrixGF(
            self.field,
            [self.data[i] + other.data[i] for i in range(self.nrows)],
            self.ncols + other.ncols,
        )

    def vstack(self, other: "MatrixGF") -> "MatrixGF":
        if other.field != self.field or other.ncols != self.ncols:
            raise ValueError("shape or field mismatch")
        return MatrixGF(self.field, self.data + other.data, self.ncols)

    def drop_column(self, j: int) -> "MatrixGF":
        return MatrixGF(
            self.field,
            [row[:j] + row[j + 1 :] for row in self.data],
            self.ncols - 1,
        )

    def mul(self, other: "MatrixGF") -> "MatrixGF":
        if other.field != self.field or self.ncols != other.nrows:
            raise ValueError("shape or field mismatch")
        f = self.field
        out = []
        bcols = other.columns()
        for row in self.data:
            out_row = []
            for col in bcols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = f.add(acc, f.mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return MatrixGF(f, out, other.ncols)

    def mul_vector(self, vec) -> tuple[int, ...]:
        f = self.field
        out = []
        for row in self.data:
            acc = 0
            for a, b in zip(row, vec):
                if a and b:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)

    def scale(self, s: int) -> "MatrixGF":
        f = self.field
        return MatrixGF(
            self.field, [[f.mul(s, x) for x in row] for row in self.data], self.ncols
        )

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, MatrixGF)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.data))

    def __repr__(self):
        return f"MatrixGF({self.field!r}, {self.nrows}x{self.ncols})"


def rref(M: MatrixGF) -> tuple[MatrixGF, int, list[int]]:
    """Reduced row echelon form: returns (R, rank, pivot_columns).

    Ties break toward the lowest row and column index, so the output is a
    canonical representative of the row space.
    """
    f = M.field
    rows = [list(r) for r in M.data]
    nrows, ncols = M.nrows, M.ncols
    pivots: list[int] = []
    pr = 0
    for col in range(ncols):
        if pr == nrows:
            break
        sel = None
        for i in range(pr, nrows):
            if rows[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        rows[pr], rows[sel] = rows[sel], rows[pr]
        inv = f.inv(rows[pr][col])
        if inv != 1:
            rows[pr] = [f.mul(inv, x) for x in rows[pr]]
        prow = rows[pr]
        for i in range(nrows):
            if i != pr and rows[i][col] != 0:
                c = rows[i][col]
                rows[i] = [f.sub(x, f.mul(c, px)) for x, px in zip(rows[i], prow)]
        pivots.append(col)
        pr += 1
    return MatrixGF(f, rows, ncols), pr, pivots


def rank(M: MatrixGF) -> int:
    return rref(M)[1]


def row_space_basis(M: MatrixGF) -> MatrixGF:
    """Canonical full-rank basis of the row space (rref minus zero rows)."""
    R, rk, _ = rref(M)
    return MatrixGF(M.field, R.data[:rk], M.ncols)


def kernel_basis(M: MatrixGF) -> MatrixGF:
    """Canonical basis of the right null space {v : M v = 0}, one row per
    free column of the rref, ordered by free column index."""
    f = M.field
    R, rk, pivots = rref(M)
    pivot_set = set(pivots)
    free = [c for c in range(M.ncols) if c not in pivot_set]
    rows = []
    for fc in free:
        vec = [0] * M.ncols
        vec[fc] = 1
        for i, pc in enumerate(pivots):
            e = R.data[i][fc]
            if e:
                vec[pc] = f.neg(e)
        rows.append(vec)
    return MatrixGF(f, rows, M.ncols)


def solve_rational(A, b) -> list[Fraction] | None:
    """Exact rational solution of A x = b for integer A, b; None if the
    system is inconsistent.

    Fraction-free (Bareiss) forward elimination keeps every intermediate
    value an integer; back-substitution then produces exact Fractions.
    Underdetermined systems get free variables fixed at zero.  Python
    integers are unbounded, so eliminations never overflow.  The number
    of unknowns is capped at 64; extra equations are fine.
    """
    rows = [[index(x) for x in row] for row in A]
    rhs = [index(x) for x in b]
    if len(rows) != len(rhs):
        raise ValueError("A and b disagree on the number of equations")
    if rows and len(rows[0]) > 64:
        raise ValueError("too many unknowns (limit 64)")
    ncols = len(rows[0]) if rows else 0
    aug = [rows[i] + [rhs[i]] for i in range(len(rows))]
    nrows = len(aug)

    pivots: list[int] = []
    pr = 0
    prev_pivot = 1
    for col in range(ncols):
        if pr == nrows:
            break
        sel = None
        for i in range(pr, nrows):
            if aug[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        aug[pr], aug[sel] = aug[sel], aug[pr]
        piv = aug[pr][col]
        prow = aug[pr]
        for i in range(pr + 1, nrows):
            row = aug[i]
            factor = row[col]
            for j in range(col, ncols + 1):
                val, rem = divmod(row[j] * piv - factor * prow[j], prev_pivot)
                if rem:
                    raise AssertionError("fraction-free elimination lost exactness")
                row[j] = val
        prev_pivot = piv
        pivots.append(col)
        pr += 1

    # rows below the last pivot must be all-zero on the coefficient side
    for i in range(pr, nrows):
        if any(aug[i][j] for j in range(ncols)):
            raise AssertionError("elimination left a stray coefficient")
        if aug[i][ncols] != 0:
            return None

    x = [Fraction(0)] * ncols
    for i in range(pr - 1, -1, -1):
        col = pivots[i]
        acc = Fraction(aug[i][ncols])
        for j in range(col + 1, ncols):
            if aug[i][j]:
                acc -= Fraction(aug[i][j]) * x[j]
        x[col] = acc / aug[i][col]
    return x

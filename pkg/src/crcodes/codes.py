"""Linear codes over GF(q): construction, duality, weight analysis and the
projective transformations used throughout the package.

A LinearCode stores both a generator and a parity-check matrix in reduced
row echelon form, so two equal codes (same codeword set over the same
field) always hold identical matrices and compare equal.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .budgets import DEFAULT_BUDGETS, BudgetExceeded, Budgets
from .field import GF, Field
from .matrix import MatrixGF, kernel_basis, rref, row_space_basis


class EmptyMatrix(ValueError):
    pass


class NotProjective(ValueError):
    pass


class AlreadyFullPointSet(ValueError):
    pass


class NonIntegerResult(ArithmeticError):
    """A weight-distribution transform produced a non-integral count."""


class LowerBound(int):
    """A minimum distance known only to be at least this value."""

    exact = False

    def __repr__(self):
        return f"LowerBound({int(self)})"


# ---------------------------------------------------------------------------
# projective helpers


def canonical_column(field: Field, col) -> tuple[int, ...]:
    """Scale a column so its first nonzero entry is 1 (zero stays zero)."""
    col = tuple(col)
    for x in col:
        if x:
            if x == 1:
                return col
            inv = field.inv(x)
            return tuple(field.mul(inv, y) for y in col)
    return col


def pg_points(field: Field, m: int) -> list[tuple[int, ...]]:
    """The points of PG(m-1, q) as canonical length-m columns, ordered
    lexicographically by their coordinate tuples."""
    if m < 1:
        raise ValueError("m must be >= 1")
    points = []

    def walk(prefix):
        if len(prefix) == m:
            points.append(tuple(prefix))
            return
        for x in range(field.q):
            walk(prefix + [x])

    walk([])
    out = []
    for vec in points:
        first = next((x for x in vec if x), None)
        if first == 1:
            out.append(vec)
    return out


def num_pg_points(q: int, m: int) -> int:
    return (q**m - 1) // (q - 1)


# ---------------------------------------------------------------------------
# the code object


class LinearCode:
    """An [n, k] linear code over GF(q), canonicalized at construction."""

    __slots__ = ("field", "n", "k", "G", "H")

    def __init__(self, field: Field, G: MatrixGF, H: MatrixGF, _checked=False):
        self.field = field
        self.n = G.ncols
        self.k = G.nrows
        self.G = G
        self.H = H
        if not _checked:
            if G.ncols != H.ncols:
                raise ValueError("generator and parity check disagree on length")
            if not G.mul(H.transpose()).is_zero():
                raise ValueError("generator rows are not annihilated by H")

    @classmethod
    def from_parity(cls, H: MatrixGF) -> "LinearCode":
        if H.ncols == 0:
            raise EmptyMatrix("a code needs at least one coordinate")
        Hc = row_space_basis(H)
        G = row_space_basis(kernel_basis(Hc))
        code = cls(H.field, G, Hc)
        return code

    @classmethod
    def from_generator(cls, G: MatrixGF) -> "LinearCode":
        if G.ncols == 0:
            raise EmptyMatrix("a code needs at least one coordinate")
        Gc = row_space_basis(G)
        H = row_space_basis(kernel_basis(Gc))
        return cls(G.field, Gc, H)

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def is_nontrivial(self) -> bool:
        """2 <= k <= n-2: neither near-empty nor near-everything."""
        return 2 <= self.k <= self.n - 2

    def dual(self) -> "LinearCode":
        return LinearCode(self.field, self.H, self.G, _checked=True)

    def punctured(self, pos: int) -> "LinearCode":
        """Delete coordinate pos from every codeword."""
        if not 0 <= pos < self.n:
            raise ValueError(f"position {pos} out of range")
        if self.n == 1:
            raise ValueError("cannot puncture a length-1 code")
        if self.k == 0:
            return LinearCode.from_parity(MatrixGF.identity(self.field, self.n - 1))
        return LinearCode.from_generator(self.G.drop_column(pos))

    def extended(self) -> "LinearCode":
        """Append an overall parity coordinate (coordinates sum to zero)."""
        f = self.field
        rows = []
        for row in self.G.data:
            acc = 0
            for x in row:
                acc = f.add(acc, x)
            rows.append(list(row) + [f.neg(acc)])
        if not rows:
            return LinearCode.from_parity(MatrixGF.identity(f, self.n + 1))
        return LinearCode.from_generator(MatrixGF(f, rows, self.n + 1))

    def complementary(self) -> "LinearCode":
        """Code whose parity columns are the projective points missed by H.

        Requires H to be projective: no zero columns, no two columns that
        are scalar multiples of each other.  The resulting parity check is
        rank-reduced, so the complementary code's redundancy can be lower
        than n - k.
        """
        f = self.field
        m = self.redundancy
        if m == 0:
            raise NotProjective("the whole space has no projective parity check")
        cols = self.H.columns()
        seen = set()
        for col in cols:
            if all(x == 0 for x in col):
                raise NotProjective("parity check has a zero column")
            canon = canonical_column(f, col)
            if canon in seen:
                raise NotProjective("parity check has projectively equal columns")
            seen.add(canon)
        missing = [pt for pt in pg_points(f, m) if pt not in seen]
        if not missing:
            raise AlreadyFullPointSet(
                "parity check already uses every projective point"
            )
        return LinearCode.from_parity(MatrixGF.from_columns(f, missing))

    def lifted(self, r: int) -> "LinearCode":
        """Reinterpret the parity-check entries over GF(q^r), r >= 2."""
        if r < 2:
            raise ValueError("lifting degree must be >= 2")
        f = self.field
        target = GF(f.q**r)
        table = f.embed_table(target)
        rows = [[table[x] for x in row] for row in self.H.data]
        return LinearCode.from_parity(MatrixGF(target, rows, self.n))

    def __eq__(self, other):
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.G == other.G
        )

    def __hash__(self):
        return hash((self.field, self.G))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """Codeword-set equality (canonical generators make this a comparison)."""
    return a.field == b.field and a.n == b.n and a.G == b.G


# ---------------------------------------------------------------------------
# enumeration and weight analysis


def iter_rowspace(M: MatrixGF):
    """Yield every vector in the row space of M, q^rows of them, in
    odometer order over the message digits (digit 0 fastest)."""
    f = M.field
    q = f.q
    k = M.nrows
    n = M.ncols
    cur = [0] * n
    yield tuple(cur)
    if k == 0:
        return
    # scaled[j][s] = s * row_j, so each odometer step is one row add
    scaled = [[None] * q for _ in range(k)]
    for j in range(k):
        row = M.data[j]
        for s in range(1, q):
            scaled[j][s] = [f.mul(s, x) for x in row]
    digits = [0] * k
    add = f.add
    total = q**k
    for _ in range(total - 1):
        j = 0
        while digits[j] == q - 1:
            delta = f.sub(0, q - 1)
            srow = scaled[j][delta] if delta else None
            if srow is not None:
                for c in range(n):
                    cur[c] = add(cur[c], srow[c])
            digits[j] = 0
            j += 1
        old = digits[j]
        digits[j] = old + 1
        delta = f.sub(old + 1, old)
        srow = scaled[j][delta]
        for c in range(n):
            cur[c] = add(cur[c], srow[c])
        yield tuple(cur)


def iter_codewords(code: LinearCode):
    yield from iter_rowspace(code.G)


def weight_distribution(
    code: LinearCode, budget: Budgets = DEFAULT_BUDGETS
) -> list[int]:
    """Counts [A_0, ..., A_n] by full codeword enumeration (q^k words).

    Raises BudgetExceeded when q^k is over budget; in that case enumerate
    the dual instead and apply macwilliams_transform.
    """
    total = code.field.q**code.k
    if total > budget.max_codewords:
        raise BudgetExceeded("max_codewords", total, budget.max_codewords)
    counts = [0] * (code.n + 1)
    for word in iter_codewords(code):
        counts[sum(1 for x in word if x)] += 1
    return counts


def _krawtchouk(q: int, n: int, j: int, i: int) -> int:
    acc = 0
    for t in range(min(i, j) + 1):
        acc += (-1) ** t * (q - 1) ** (j - t) * comb(i, t) * comb(n - i, j - t)
    return acc


def macwilliams_transform(counts: list[int], q: int) -> list[int]:
    """Weight distribution of the dual code, computed exactly.

    counts must be a full distribution [A_0..A_n] with sum q^k; the result
    is [B_0..B_n] with B_j = (1/q^k) * sum_i A_i K_j(i).  A non-integral
    B_j raises NonIntegerResult, which means the input was not the weight
    distribution of a linear code over GF(q).
    """
    n = len(counts) - 1
    size = sum(counts)
    if counts[0] != 1 or size <= 0:
        raise ValueError("counts must describe a code containing only one zero word")
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a in enumerate(counts):
            if a:
                acc += a * _krawtchouk(q, n, j, i)
        b, rem = divmod(acc, size)
        if rem:
            raise NonIntegerResult(f"B_{j} = {acc}/{size} is not an integer")
        out.append(b)
    return out


def nonzero_weights(counts: list[int]) -> list[int]:
    return [w for w in range(1, len(counts)) if counts[w]]


def is_equidistant(code: LinearCode, budget: Budgets = DEFAULT_BUDGETS) -> bool:
    """True when all nonzero codewords share one weight (k >= 1)."""
    if code.k < 1:
        raise ValueError("the zero code has no nonzero weights")
    return len(nonzero_weights(weight_distribution(code, budget))) == 1


def is_antipodal(code: LinearCode, budget: Budgets = DEFAULT_BUDGETS) -> bool:
    """True when the code contains a word of full weight n."""
    counts = weight_distribution(code, budget)
    return counts[code.n] > 0


def external_distance(code: LinearCode, budget: Budgets = DEFAULT_BUDGETS) -> int:
    """Number of distinct nonzero weights in the dual code."""
    return len(nonzero_weights(weight_distribution(code.dual(), budget)))


def _columns_dependent(field: Field, cols) -> bool:
    """True when the given columns are linearly dependent over the field."""
    t = len(cols)
    work = [list(col) for col in cols]  # one row per column
    m = len(work[0])
    rank = 0
    for pos in range(m):
        sel = None
        for i in range(rank, t):
            if work[i][pos]:
                sel = i
                break
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        inv = field.inv(work[rank][pos])
        if inv != 1:
            work[rank] = [field.mul(inv, x) for x in work[rank]]
        prow = work[rank]
        for i in range(t):
            if i != rank and work[i][pos]:
                c = work[i][pos]
                work[i] = [field.sub(x, field.mul(c, px)) for x, px in zip(work[i], prow)]
        rank += 1
        if rank == t:
            return False
    return rank < t


def min_distance(code: LinearCode, budget: Budgets = DEFAULT_BUDGETS) -> int:
    """Exact minimum distance, or LowerBound(6) when it exceeds 5 and the
    codeword space is over budget.

    Strategy: d=1 iff H has a zero column, d=2 iff two columns are
    projectively equal, then search dependent column subsets of sizes
    3..5, and finally fall back to full enumeration.
    """
    if code.k < 1:
        raise ValueError("minimum distance needs k >= 1")
    f = code.field
    if code.redundancy == 0:
        return 1
    cols = code.H.columns()
    canon = []
    for col in cols:
        if all(x == 0 for x in col):
            return 1
        canon.append(canonical_column(f, col))
    if len(set(canon)) < len(canon):
        return 2
    for t in (3, 4, 5):
        if t > code.n:
            break
        for subset in combinations(cols, t):
            if _columns_dependent(f, subset):
                return t
    if f.q**code.k <= budget.max_codewords:
        counts = weight_distribution(code, budget)
        return nonzero_weights(counts)[0]
    return LowerBound(6)


# ---------------------------------------------------------------------------
# weight relation between a projective code and its complementary code


def complementary_parity_columns(code: LinearCode) -> MatrixGF:
    """The unreduced (n-k)-row parity check of the complementary code:
    every projective point H misses, in lexicographic order."""
    f = code.field
    m = code.redundancy
    seen = {canonical_column(f, col) for col in code.H.columns()}
    missing = [pt for pt in pg_points(f, m) if pt not in seen]
    return MatrixGF.from_columns(f, missing, m)

"""Constructions of the code families under study: Hamming parity
matrices, zero-column padding, scaled concatenation, difference
matrices, latin-square codes, the antipodal length-4 family, plane
arcs (hyperovals and Denniston-style maximal arcs), external-line
codes, lifted codes, and a catalog of small instances paired with
their expected parameters and intersection arrays.

All column orderings are pinned lexicographic, so every construction
is bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import LinearCode, canonical_column, num_pg_points, pg_points
from .field import GF, Field, NotPrime, factor_prime_power
from .matrix import MatrixGF, rank
from .regularity import IntersectionArray


class ParameterRange(ValueError):
    pass


class ZeroScalar(ValueError):
    pass


class ConstraintViolated(ValueError):
    pass


class NotCharacteristicTwo(ValueError):
    pass


class ArcPropertyFailed(AssertionError):
    """The pinned geometric realization misses its line-intersection
    profile; the realization, not the checker, is suspect."""


def hamming_parity(q: int, m: int) -> MatrixGF:
    """m x (q^m-1)/(q-1) matrix whose columns are the canonical
    representatives of all projective points, in lexicographic order."""
    if m < 1:
        raise ParameterRange(f"Hamming redundancy must be >= 1, got {m}")
    f = GF(q)
    return MatrixGF.from_columns(f, pg_points(f, m))


def hamming_code(q: int, m: int) -> LinearCode:
    return LinearCode.from_parity(hamming_parity(q, m))


def construction_I(H: MatrixGF, u: int) -> MatrixGF:
    """Append u > 0 zero columns; [n,k] becomes [n+u, k+u] with d = 1."""
    if u < 1:
        raise ParameterRange(f"zero-column count must be >= 1, got {u}")
    return H.hstack(MatrixGF.zeros(H.field, H.nrows, u))


def construction_II(H: MatrixGF, scalars) -> MatrixGF:
    """Concatenate nonzero scalar multiples of H side by side."""
    scalars = list(scalars)
    if not scalars:
        raise ParameterRange("at least one scalar is required")
    if any(s == 0 for s in scalars):
        raise ZeroScalar("scalars must be nonzero")
    out = H.scale(scalars[0])
    for s in scalars[1:]:
        out = out.hstack(H.scale(s))
    return out


def difference_matrix(q: int, m: int) -> MatrixGF:
    """(m+1) x q^m matrix: all length-m vectors as columns, in
    lexicographic order, each with an extra final coordinate 1."""
    if m < 1:
        raise ParameterRange(f"difference matrix needs m >= 1, got {m}")
    f = GF(q)
    cols = []
    vec = [0] * m
    while True:
        cols.append(tuple(vec) + (1,))
        j = m - 1
        while j >= 0 and vec[j] == q - 1:
            vec[j] = 0
            j -= 1
        if j < 0:
            break
        vec[j] += 1
    return MatrixGF.from_columns(f, cols)


def difference_matrix_code(q: int, m: int) -> LinearCode:
    if q < 3:
        raise ParameterRange(f"difference-matrix code needs q >= 3, got {q}")
    return LinearCode.from_parity(difference_matrix(q, m))


def latin_square_code(q: int, n: int) -> LinearCode:
    """[n, n-2, 3]_q code: the difference matrix D_1 with its last
    q - n columns removed."""
    if q < 3:
        raise ParameterRange(f"latin-square code needs q >= 3, got {q}")
    if not 3 <= n <= q:
        raise ParameterRange(f"length must satisfy 3 <= n <= q, got n={n}, q={q}")
    D1 = difference_matrix(q, 1)
    H = MatrixGF.from_columns(D1.field, [D1.column(j) for j in range(n)])
    return LinearCode.from_parity(H)


def antipodal_d1(q: int, xi_i: int, xi_j: int) -> LinearCode:
    """The [4,2,3]_q code with parity check [[1,1,1,1],[0,1,xi_i,xi_j]],
    where xi_i, xi_j are distinct, outside {0,1}, and xi_i+xi_j+1 = 0."""
    if q < 4:
        raise ParameterRange(f"needs q >= 4, got {q}")
    f = GF(q)
    if xi_i == xi_j:
        raise ConstraintViolated("the two elements must be distinct")
    if xi_i in (0, 1) or xi_j in (0, 1):
        raise ConstraintViolated("the two elements must avoid 0 and 1")
    if not 0 <= xi_i < q or not 0 <= xi_j < q:
        raise ConstraintViolated(f"elements must lie in 0..{q - 1}")
    if f.add(f.add(xi_i, xi_j), 1) != 0:
        raise ConstraintViolated("the two elements must sum with 1 to zero")
    return LinearCode.from_parity(MatrixGF(f, [[1, 1, 1, 1], [0, 1, xi_i, xi_j]]))


def antipodal_d1_pair(q: int) -> tuple[int, int] | None:
    """Smallest valid element pair for antipodal_d1, or None when the
    field has no such pair (q = 5 is the one small case)."""
    f = GF(q)
    for a in range(2, q):
        for b in range(a + 1, q):
            if f.add(f.add(a, b), 1) == 0:
                return (a, b)
    return None


def d1_antipodal_code(q: int) -> LinearCode:
    """The length-4 member of the latin-square family, presented with
    the summing-to-zero column pair when one exists."""
    pair = antipodal_d1_pair(q)
    if pair is None:
        return latin_square_code(q, 4)
    return antipodal_d1(q, *pair)


# -- plane point sets ------------------------------------------------------


def _dot(f: Field, a, b) -> int:
    acc = 0
    for x, y in zip(a, b):
        acc = f.add(acc, f.mul(x, y))
    return acc


@dataclass(frozen=True)
class ProjectivePointSet:
    """Pairwise-distinct canonical points of PG(dim, q)."""

    field: Field
    dim: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = set()
        for pt in self.points:
            if len(pt) != self.dim + 1:
                raise ValueError(f"point {pt} has wrong length")
            if canonical_column(self.field, pt) != tuple(pt):
                raise ValueError(f"point {pt} is not in canonical form")
            if pt in seen:
                raise ValueError(f"duplicate point {pt}")
            seen.add(pt)

    def __len__(self):
        return len(self.points)

    def line_profile(self) -> dict[int, int]:
        """How many lines meet the set in 0, 1, 2, ... points (dim 2)."""
        if self.dim != 2:
            raise ValueError("line profiles are defined for plane point sets")
        f = self.field
        prof: dict[int, int] = {}
        for line in pg_points(f, 3):
            c = sum(1 for pt in self.points if _dot(f, line, pt) == 0)
            prof[c] = prof.get(c, 0) + 1
        return prof


def _check_arc_profile(s: ProjectivePointSet, allowed: set[int], what: str):
    prof = s.line_profile()
    if not set(prof) <= allowed:
        raise ArcPropertyFailed(
            f"{what}: line intersections {sorted(prof)} not within {sorted(allowed)}"
        )


def hyperoval(q: int) -> ProjectivePointSet:
    """The q+2 points (1,t,t^2) plus (0,1,0) and (0,0,1) in PG(2,q) for
    q = 2^r >= 4; every line meets the set in 0 or 2 points."""
    f = GF(q)
    if f.p != 2 or q < 4:
        raise NotCharacteristicTwo(f"hyperovals need q = 2^r >= 4, got {q}")
    pts = [(1, t, f.mul(t, t)) for t in f.elements()]
    pts.extend([(0, 1, 0), (0, 0, 1)])
    s = ProjectivePointSet(f, 2, tuple(pts))
    _check_arc_profile(s, {0, 2}, f"hyperoval over GF({q})")
    return s


def _irreducible_form_coeff(f: Field) -> int:
    # smallest c with x^2 + xy + c*y^2 vanishing only at the origin,
    # i.e. t^2 + t + c without roots
    for c in f.elements():
        if all(f.add(f.add(f.mul(t, t), t), c) != 0 for t in f.elements()):
            return c
    raise ArcPropertyFailed(f"no irreducible quadratic form over GF({f.q})")


def denniston_arc(q: int, h: int) -> ProjectivePointSet:
    """Degree-h maximal arc in PG(2,q): the points (1,x,y) with
    x^2 + xy + c*y^2 inside the order-h additive subgroup {0..h-1},
    for q = 2^r >= 4 and h = 2^s with 0 < s < r.  Every line meets the
    set in 0 or h points."""
    f = GF(q)
    if f.p != 2 or q < 4:
        raise ParameterRange(f"needs q = 2^r >= 4, got {q}")
    try:
        hp, hs = factor_prime_power(h)
    except NotPrime:
        raise ParameterRange(f"degree must be a power of 2, got {h}") from None
    if hp != 2 or not 0 < hs < f.r:
        raise ParameterRange(f"degree must be 2^s with 0 < s < {f.r}, got {h}")
    c = _irreducible_form_coeff(f)
    pts = []
    for x in f.elements():
        for y in f.elements():
            val = f.add(f.add(f.mul(x, x), f.mul(x, y)), f.mul(c, f.mul(y, y)))
            if val < h:
                pts.append((1, x, y))
    s = ProjectivePointSet(f, 2, tuple(pts))
    if len(pts) != q * (h - 1) + h:
        raise ArcPropertyFailed(
            f"arc size {len(pts)} differs from {q * (h - 1) + h}"
        )
    _check_arc_profile(s, {0, h}, f"degree-{h} arc over GF({q})")
    return s


def point_set_code(s: ProjectivePointSet) -> LinearCode:
    """The code whose parity-check columns are the given points."""
    return LinearCode.from_parity(MatrixGF.from_columns(s.field, s.points))


def external_lines(s: ProjectivePointSet) -> ProjectivePointSet:
    """Lines of PG(2,q) meeting the set in no point, as dual points."""
    f = s.field
    ext = tuple(
        line
        for line in pg_points(f, 3)
        if all(_dot(f, line, pt) != 0 for pt in s.points)
    )
    return ProjectivePointSet(f, 2, ext)


def external_lines_code(s: ProjectivePointSet) -> LinearCode:
    return point_set_code(external_lines(s))


def extendable_hamming_code(q: int) -> LinearCode:
    """A [q+1, q-1, 3]_q Hamming-code presentation whose overall parity
    extension has minimum distance 4 (q = 2^r >= 4 only; extension is
    sensitive to the scaling of parity columns, and the lexicographic
    canonical presentation does not extend to distance 4).

    Derived from the hyperoval: move one of its external lines to the
    x0 = 0 line, normalize, and translate one point to the origin; the
    remaining columns are nonzero representatives of every point of
    PG(1,q) in the scaling a hyperoval demands.
    """
    f = GF(q)
    s = hyperoval(q)
    lines = pg_points(f, 3)
    ell = next(
        line
        for line in lines
        if all(_dot(f, line, pt) != 0 for pt in s.points)
    )
    rows = [list(ell)]
    for i in range(3):
        unit = [0, 0, 0]
        unit[i] = 1
        if rank(MatrixGF(f, rows + [unit])) == len(rows) + 1:
            rows.append(unit)
        if len(rows) == 3:
            break
    T = MatrixGF(f, rows)
    moved = [T.mul_vector(pt) for pt in s.points]
    norm = sorted(
        tuple(f.mul(f.inv(v[0]), x) for x in v)[1:] for v in moved
    )
    origin = norm[0]
    shifted = sorted(
        tuple(f.sub(a, b) for a, b in zip(v, origin)) for v in norm
    )
    assert shifted[0] == (0, 0) and all(any(v) for v in shifted[1:])
    return LinearCode.from_parity(MatrixGF.from_columns(f, shifted[1:]))


# -- the catalog -----------------------------------------------------------


@dataclass(frozen=True)
class FamilyDescriptor:
    """One catalog instance: family id, parameters, and the expected
    code parameters and intersection array."""

    family: str
    params: tuple[tuple[str, int], ...]
    n: int
    k: int
    d: int
    rho: int
    array: IntersectionArray

    @property
    def slug(self) -> str:
        tail = "-".join(f"{key}{val}" for key, val in self.params)
        return f"{self.family}-{tail}" if tail else self.family

    def params_dict(self) -> dict[str, int]:
        return dict(self.params)


def _exact_div(a: int, b: int) -> int:
    quot, rem = divmod(a, b)
    if rem:
        raise ParameterRange(f"{a} is not divisible by {b}")
    return quot


def build_family(family: str, **params) -> tuple[FamilyDescriptor, LinearCode]:
    """Instantiate one catalog family member; every family id is listed
    in the module docstring of `cli`.  Raises ParameterRange on missing
    or out-of-range parameters."""

    def need(*names) -> list[int]:
        vals = []
        for name in names:
            if name not in params or params[name] is None:
                raise ParameterRange(f"family {family!r} needs parameter {name!r}")
            vals.append(int(params[name]))
        extra = set(params) - {n for n in names} - {
            k for k in params if params[k] is None
        }
        if extra:
            raise ParameterRange(f"family {family!r} does not take {sorted(extra)}")
        return vals

    if family == "i":
        (m,) = need("m")
        if m < 2:
            raise ParameterRange("family i needs m >= 2")
        code = hamming_code(2, m).extended()
        n = 2**m
        desc = FamilyDescriptor(
            "i", (("m", m),), n, n - m - 1, 4, 2,
            IntersectionArray.from_levels(2, n, (n, n - 1), (1, n)),
        )
    elif family == "ii":
        (q,) = need("q")
        code = point_set_code(hyperoval(q))
        n = q + 2
        desc = FamilyDescriptor(
            "ii", (("q", q),), n, q - 1, 4, 2,
            IntersectionArray.from_levels(
                q, n, ((q + 2) * (q - 1), q * q - 1), (1, q + 2)
            ),
        )
    elif family == "iii":
        q, m = need("q", "m")
        code = difference_matrix_code(q, m)
        n = q**m
        desc = FamilyDescriptor(
            "iii", (("q", q), ("m", m)), n, n - m - 1, 3, 2,
            IntersectionArray.from_levels(
                q, n, (n * (q - 1), n - 1), (1, n * (q - 1))
            ),
        )
    elif family == "iv":
        q, n = need("q", "n")
        code = latin_square_code(q, n)
        desc = FamilyDescriptor(
            "iv", (("q", q), ("n", n)), n, n - 2, 3, 2,
            IntersectionArray.from_levels(
                q, n, (n * (q - 1), (q - n + 1) * (n - 1)), (1, n * (n - 1))
            ),
        )
    elif family == "v":
        (q,) = need("q")
        code = external_lines_code(hyperoval(q))
        n = _exact_div(q * (q - 1), 2)
        desc = FamilyDescriptor(
            "v", (("q", q),), n, n - 3, 4, 2,
            IntersectionArray.from_levels(
                q, n,
                ((q - 1) * n, _exact_div((q - 2) * (q + 1) * (q + 2), 4)),
                (1, _exact_div(q * (q - 1) * (q - 2), 4)),
            ),
        )
    elif family == "vi":
        q, h = need("q", "h")
        code = point_set_code(denniston_arc(q, h))
        n = q * (h - 1) + h
        desc = FamilyDescriptor(
            "vi", (("q", q), ("h", h)), n, n - 3, 4, 2,
            IntersectionArray.from_levels(
                q, n,
                ((q - 1) * n, (q + 1) * (h - 1) * (q - h + 1)),
                (1, (h - 1) * n),
            ),
        )
    elif family == "vii":
        q, h = need("q", "h")
        code = external_lines_code(denniston_arc(q, h))
        n = _exact_div(q * (q - h + 1), h)
        desc = FamilyDescriptor(
            "vii", (("q", q), ("h", h)), n, n - 3, 4, 2,
            IntersectionArray.from_levels(
                q, n,
                ((q - 1) * n, _exact_div((q + 1) * (q - h) * (q * (h - 1) + h), h * h)),
                (1, _exact_div(q * (q - h) * (q - h + 1), h * h)),
            ),
        )
    elif family == "lifted":
        q, r = need("q", "r")
        if r < 2:
            raise ParameterRange("lifted family needs r >= 2")
        code = hamming_code(q, 2).lifted(r)
        big = q**r
        n = q + 1
        desc = FamilyDescriptor(
            "lifted", (("q", q), ("r", r)), n, q - 1, 3, 2,
            IntersectionArray.from_levels(
                big, n,
                ((q + 1) * (big - 1), q * q * (q ** (r - 1) - 1)),
                (1, q * (q + 1)),
            ),
        )
    elif family == "d1antipodal":
        (q,) = need("q")
        if q < 4:
            raise ParameterRange("the antipodal length-4 family needs q >= 4")
        code = d1_antipodal_code(q)
        desc = FamilyDescriptor(
            "d1antipodal", (("q", q),), 4, 2, 3, 2,
            IntersectionArray.from_levels(
                q, 4, (4 * (q - 1), 3 * (q - 3)), (1, 12)
            ),
        )
    else:
        raise ParameterRange(f"unknown family {family!r}")
    if (code.n, code.k) != (desc.n, desc.k):
        raise ArcPropertyFailed(
            f"{desc.slug}: built [{code.n},{code.k}], expected [{desc.n},{desc.k}]"
        )
    return desc, code


def _prime_powers(lo: int, hi: int) -> list[int]:
    out = []
    for q in range(max(lo, 2), hi + 1):
        try:
            factor_prime_power(q)
        except NotPrime:
            continue
        out.append(q)
    return out


def _two_powers(lo: int, hi: int) -> list[int]:
    q = 4
    out = []
    while q <= hi:
        if q >= lo:
            out.append(q)
        q *= 2
    return out


def family_catalog(qn_bound: int) -> list[tuple[FamilyDescriptor, LinearCode]]:
    """All family instances with q*n <= qn_bound (q the field order the
    code lives over), in a fixed order."""
    if qn_bound < 4:
        raise ParameterRange(f"bound must be >= 4, got {qn_bound}")
    out = []

    m = 2
    while 2 * 2**m <= qn_bound:
        out.append(build_family("i", m=m))
        m += 1
    for q in _two_powers(4, qn_bound):
        if q * (q + 2) <= qn_bound:
            out.append(build_family("ii", q=q))
    for q in _prime_powers(3, qn_bound):
        m = 1
        while q * q**m <= qn_bound:
            out.append(build_family("iii", q=q, m=m))
            m += 1
    for q in _prime_powers(4, qn_bound):
        for n in range(3, q):
            if q * n <= qn_bound:
                out.append(build_family("iv", q=q, n=n))
    for q in _two_powers(4, qn_bound):
        if q * (q * (q - 1) // 2) <= qn_bound:
            out.append(build_family("v", q=q))
    for q in _two_powers(4, qn_bound):
        h = 2
        while h < q:
            if q * (q * (h - 1) + h) <= qn_bound:
                out.append(build_family("vi", q=q, h=h))
            h *= 2
    for q in _two_powers(4, qn_bound):
        h = 2
        while h < q:
            if q * (q * (q - h + 1) // h) <= qn_bound:
                out.append(build_family("vii", q=q, h=h))
            h *= 2
    q = 2
    while q * q * (q + 1) <= qn_bound:
        r = 2
        while q**r * (q + 1) <= qn_bound:
            out.append(build_family("lifted", q=q, r=r))
            r += 1
        q += 1
        while True:
            try:
                factor_prime_power(q)
                break
            except NotPrime:
                q += 1
    for q in _prime_powers(4, qn_bound // 4):
        if 4 * q <= qn_bound:
            out.append(build_family("d1antipodal", q=q))
    return out

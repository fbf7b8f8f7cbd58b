"""Exact arithmetic in GF(p^r) for prime powers q = p^r up to 2**14.

Element encoding: the integer e in 0..q-1 stands for the polynomial whose
coefficient of x^i is the i-th base-p digit of e, least significant digit
first.  0 and 1 therefore always encode the additive and multiplicative
identities, and for r = 1 the arithmetic is plain integers mod p.

Multiplication and inversion in extension fields go through log/antilog
tables built once per field (O(q) memory); addition is digitwise mod p,
which in characteristic 2 is integer XOR.

Fields are immutable after construction.  ``GF(q)`` caches one instance
per (p, r, modulus) so equal fields are identical objects.
"""

from __future__ import annotations

ORDER_CEILING = 1 << 14


class NotPrime(ValueError):
    pass


class OrderTooLarge(ValueError):
    pass


class ReducibleModulus(ValueError):
    pass


class IncompatibleModulusTable(ValueError):
    """No subfield embedding is available between the pinned moduli."""


# Pinned default moduli, one per (p, r); coefficient lists are low-order
# first and monic.  Every extension field the test corpus touches is listed
# here.  Pairs not in the table fall back to the irreducible polynomial
# with the smallest integer encoding, found by deterministic search, so
# element encodings are reproducible run to run either way.
_DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),                    # 1 + x + x^2
    (2, 3): (1, 1, 0, 1),                 # 1 + x + x^3
    (2, 4): (1, 1, 0, 0, 1),              # 1 + x + x^4
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),                    # 2 + 2x + x^2
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by den over GF(p); coefficients low-order first."""
    num = _poly_trim(list(num))
    dd = len(den) - 1
    lead_inv = pow(den[-1], p - 2, p)
    while len(num) - 1 >= dd:
        shift = len(num) - 1 - dd
        factor = (num[-1] * lead_inv) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        _poly_trim(num)
    return num


def _poly_is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg//2."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        # iterate all monic polynomials of degree d over GF(p)
        for code in range(p**d):
            den = []
            e = code
            for _ in range(d):
                e, digit = divmod(e, p)
                den.append(digit)
            den.append(1)
            if not _poly_trim(_poly_mod(list(coeffs), den, p)):
                return False
    return True


def _search_default_modulus(p: int, r: int) -> tuple[int, ...]:
    # smallest encoding wins; encoding of a monic degree-r polynomial is
    # sum(c_i * p^i) including the leading 1
    for code in range(p**r):
        coeffs = []
        e = code
        for _ in range(r):
            e, digit = divmod(e, p)
            coeffs.append(digit)
        coeffs.append(1)
        if _poly_is_irreducible(tuple(coeffs), p):
            return tuple(coeffs)
    raise ReducibleModulus(f"no irreducible polynomial of degree {r} over GF({p})")


def default_modulus(p: int, r: int) -> tuple[int, ...]:
    if r == 1:
        return (0, 1)
    got = _DEFAULT_MODULI.get((p, r))
    if got is None:
        got = _search_default_modulus(p, r)
    return got


class Field:
    """GF(p^r) with a fixed modulus polynomial.

    Parameters
    ----------
    p : prime characteristic
    r : extension degree (default 1)
    modulus : optional coefficient list (low-order first, monic, length
        r + 1).  When omitted the pinned default for (p, r) is used.

    Raises NotPrime, OrderTooLarge or ReducibleModulus on bad input.
    Division by zero raises ZeroDivisionError.
    """

    __slots__ = ("p", "r", "q", "modulus", "_dig", "_exp", "_log", "_hash")

    def __init__(self, p: int, r: int = 1, modulus=None):
        if not _is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if r < 1:
            raise ValueError(f"extension degree must be >= 1, got {r}")
        q = p**r
        if q > ORDER_CEILING:
            raise OrderTooLarge(f"q = {q} exceeds the ceiling {ORDER_CEILING}")
        if modulus is None:
            modulus = default_modulus(p, r)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise ReducibleModulus(
                f"modulus must be monic of degree {r}, got {list(modulus)}"
            )
        if r > 1 and not _poly_is_irreducible(modulus, p):
            raise ReducibleModulus(
                f"{list(modulus)} is reducible over GF({p})"
            )
        self.p = p
        self.r = r
        self.q = q
        self.modulus = modulus
        if r > 1:
            self._dig = [self._int_digits(e) for e in range(q)]
            self._build_log_tables()
        else:
            self._dig = None
            self._exp = None
            self._log = None
        self._hash = hash((p, r, modulus))

    # -- encoding helpers ------------------------------------------------

    def _int_digits(self, e: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.r):
            e, d = divmod(e, self.p)
            out.append(d)
        return tuple(out)

    def digits(self, a: int) -> tuple[int, ...]:
        """Base-p digits of a, least significant first (the coefficients)."""
        if self.r == 1:
            return (a,)
        return self._dig[a]

    def from_digits(self, digits) -> int:
        e = 0
        for d in reversed(list(digits)):
            e = e * self.p + (int(d) % self.p)
        return e

    # -- table construction ----------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        # polynomial product of the digit vectors, reduced mod (p, modulus)
        p, r = self.p, self.r
        da, db = self._dig[a], self._dig[b]
        prod = [0] * (2 * r - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        rem = _poly_mod(prod, list(self.modulus), p)
        rem += [0] * (r - len(rem))
        e = 0
        for d in reversed(rem[:r]):
            e = e * p + d
        return e

    def _build_log_tables(self):
        q = self.q
        for g in range(2, q):
            exp = [1]
            cur = g
            while cur != 1:
                exp.append(cur)
                cur = self._raw_mul(cur, g)
            if len(exp) == q - 1:
                self._exp = exp
                log = [0] * q
                for i, e in enumerate(exp):
                    log[e] = i
                self._log = log
                return
        raise RuntimeError("no multiplicative generator found")  # unreachable

    # -- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        da, db = self._dig[a], self._dig[b]
        e = 0
        for i in range(self.r - 1, -1, -1):
            e = e * p + (da[i] + db[i]) % p
        return e

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.r == 1:
            return (-a) % self.p
        p = self.p
        da = self._dig[a]
        e = 0
        for i in range(self.r - 1, -1, -1):
            e = e * p + (-da[i]) % p
        return e

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no multiplicative inverse")
            return 0
        if self.r == 1:
            return pow(a, e % (self.p - 1) if e >= 0 else e, self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def elements(self) -> list[int]:
        """All field elements in encoding order."""
        return list(range(self.q))

    # -- subfield embedding -------------------------------------------------

    def embed_table(self, target: "Field") -> list[int]:
        """Embedding of this field into target, as an encoding-lookup list.

        Requires the same characteristic and self.r | target.r.  The image
        of x is the root of this field's modulus in target with the
        smallest encoding, which makes the embedding canonical for fixed
        moduli on both sides.
        """
        if target.p != self.p or target.r % self.r != 0:
            raise IncompatibleModulusTable(
                f"GF({self.q}) does not embed into GF({target.q})"
            )
        if self.r == 1:
            return list(range(self.p))
        root = None
        for e in range(target.q):
            acc = 0
            for c in reversed(self.modulus):
                acc = target.add(target.mul(acc, e), c)
            if acc == 0:
                root = e
                break
        if root is None:
            raise IncompatibleModulusTable(
                f"modulus of GF({self.q}) has no root in GF({target.q})"
            )
        table = []
        for a in range(self.q):
            acc = 0
            power = 1
            for c in self.digits(a):
                if c:
                    acc = target.add(acc, target.mul(c, power))
                power = target.mul(power, root)
            table.append(acc)
        if len(set(table)) != self.q:
            raise IncompatibleModulusTable("embedding is not injective")
        return table

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.q}, poly={list(self.modulus)})"


_GF_CACHE: dict[tuple, Field] = {}


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, r) with q = p^r, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = 2
    while p * p <= q:
        if q % p == 0:
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise NotPrime(f"{q} is not a prime power")
            return p, r
        p += 1
    return q, 1


def GF(q: int, modulus=None) -> Field:
    """Cached field of order q (q = p^r with the default or given modulus)."""
    p, r = factor_prime_power(q)
    key = (p, r, tuple(modulus) if modulus is not None else None)
    field = _GF_CACHE.get(key)
    if field is None:
        field = Field(p, r, modulus)
        _GF_CACHE[key] = field
    return field

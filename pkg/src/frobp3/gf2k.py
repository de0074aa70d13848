"""Exact arithmetic in binary fields GF(2^n) and their quadratic towers.

Field elements are coefficient bitvectors packed into Python ints: bit i is
the coefficient of t^i.  A base field carries an explicit irreducible
modulus over GF(2).  A quadratic tower step GF(2^(2m)) = GF(2^m)[u]/(u^2+u+w),
with trace(w) = 1, packs the u^0 component into the low m bits and the u^1
component into the high m bits; towers are never re-flattened to a single
modulus, so embedding the parent field is the identity on bits and degree
bookkeeping stays exact.

Also provides the characteristic-2 quadratic solver: all in-field roots of
t^2 + c*t + d, found through the GF(2)-linear map s -> s^2 + s, which works
uniformly for any field degree.
"""

from __future__ import annotations

import functools

MAX_BASE_DEGREE = 64
MAX_TOWER_DEGREE = 1024


# ---------------------------------------------------------------------------
# GF(2)[t] on int bitvectors (bit i = coefficient of t^i).

def _pmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _pmod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _pmulmod(a: int, b: int, m: int) -> int:
    return _pmod(_pmul(a, b), m)


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def _pinvmod(a: int, m: int) -> int:
    """Inverse of a modulo m in GF(2)[t] (extended Euclid); a nonzero mod m."""
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1:
        # divide r0 by r1
        q = 0
        r = r0
        d1 = r1.bit_length()
        while r.bit_length() >= d1:
            shift = r.bit_length() - d1
            q ^= 1 << shift
            r ^= r1 << shift
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _pmul(q, s1)
    if r0 != 1:
        raise ZeroDivisionError("element not invertible")
    return _pmod(s0, m)


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f: int) -> bool:
    """Rabin irreducibility test for a GF(2) polynomial given as a bitvector."""
    n = f.bit_length() - 1
    if n <= 0:
        return False
    # t^(2^n) == t mod f
    x = 0b10
    acc = x
    for _ in range(n):
        acc = _pmulmod(acc, acc, f)
    if acc != _pmod(x, f):
        return False
    for q in _prime_factors(n):
        acc = x
        for _ in range(n // q):
            acc = _pmulmod(acc, acc, f)
        if _pgcd(acc ^ _pmod(x, f), f) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(n: int) -> int:
    """Lexicographically first irreducible polynomial of degree n over GF(2)."""
    if not 1 <= n <= MAX_BASE_DEGREE:
        raise ValueError(f"degree {n} outside supported range 1..{MAX_BASE_DEGREE}")
    for m in range(1 << n, 1 << (n + 1)):
        if is_irreducible(m):
            return m
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


# ---------------------------------------------------------------------------
# Fields.

def _byte_tables(basis_images: list[int], degree: int) -> list[list[int]]:
    """Byte-indexed lookup tables for the GF(2)-linear map sending the basis
    bit i to basis_images[i]; the map of a value is the XOR of one lookup per
    byte."""
    tables = []
    for byte_pos in range(0, degree, 8):
        tbl = [0] * 256
        for bit in range(min(8, degree - byte_pos)):
            img = basis_images[byte_pos + bit]
            step = 1 << bit
            for v in range(step, 256, 2 * step):
                for u in range(v, v + step):
                    tbl[u] ^= img
        tables.append(tbl)
    return tables


def _apply_tables(tables: list[list[int]], a: int) -> int:
    r = 0
    i = 0
    while a:
        r ^= tables[i][a & 0xFF]
        a >>= 8
        i += 1
    return r


class BinaryField:
    """GF(2^degree), either a base field with explicit modulus or a tower step.

    Instances are immutable values; all element operations are pure.  Equality
    is structural on (degree, modulus / tower chain).  Base fields build
    byte-lookup tables for the GF(2)-linear maps (squaring, square root,
    modular reduction) and a trace bitmask, so the hot operations cost a
    handful of table lookups.
    """

    def __init__(self, degree: int, modulus: int | None = None):
        if not 1 <= degree <= MAX_BASE_DEGREE:
            raise ValueError(f"degree {degree} outside supported range 1..{MAX_BASE_DEGREE}")
        if modulus is None:
            modulus = default_modulus(degree)
        if modulus.bit_length() != degree + 1:
            raise ValueError("modulus degree does not match field degree")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus {modulus:#x} is reducible over GF(2)")
        self.degree = degree
        self.modulus: int | None = modulus
        self.tower_parent: BinaryField | None = None
        self.tower_w: int | None = None
        self._init_common()

    @classmethod
    def _tower(cls, parent: "BinaryField", w_bits: int) -> "BinaryField":
        self = object.__new__(cls)
        self.degree = 2 * parent.degree
        if self.degree > MAX_TOWER_DEGREE:
            raise ValueError(f"tower degree {self.degree} exceeds cap {MAX_TOWER_DEGREE}")
        self.modulus = None
        self.tower_parent = parent
        self.tower_w = w_bits
        self._init_common()
        return self

    def _init_common(self):
        self.order = 1 << self.degree
        self.mask = self.order - 1
        if self.tower_parent is not None:
            self.fingerprint = ("tower", self.tower_parent.fingerprint, self.tower_w)
        else:
            self.fingerprint = ("base", self.degree, self.modulus)
        self.zero = FieldElement(0, self)
        self.one = FieldElement(1, self)
        self._as_basis = None
        self._quad_ext = None
        self._tables_ready = False

    def _build_tables(self):
        """Lookup tables for base-field squaring, square root, reduction, trace."""
        n = self.degree
        m = self.modulus
        # t^(n+j) mod m for the high half of a 2n-bit product
        red_basis = []
        x = _pmod(1 << n, m)
        for _ in range(n):
            red_basis.append(x)
            x <<= 1
            if x >> n:
                x ^= m
        self._red_tables = _byte_tables(red_basis, n)
        # squaring: bit i -> t^(2i) mod m
        sq_basis = []
        for i in range(n):
            p = 1 << (2 * i)
            if 2 * i >= n:
                p = _apply_tables(self._red_tables, p >> n) ^ (p & self.mask)
            sq_basis.append(p)
        self._sq_tables = _byte_tables(sq_basis, n)
        # trace mask: trace(a) = parity(a & mask)
        mask = 0
        for i in range(n):
            acc = 0
            x = 1 << i
            for _ in range(n):
                acc ^= x
                x = _apply_tables(self._sq_tables, x)
            mask |= (acc & 1) << i
        self._trace_mask = mask
        # square root: the inverse linear map of squaring
        sqrt_basis = []
        for i in range(n):
            x = 1 << i
            for _ in range(n - 1):
                x = _apply_tables(self._sq_tables, x)
            sqrt_basis.append(x)
        self._sqrt_tables = _byte_tables(sqrt_basis, n)
        self._tables_ready = True

    # -- value semantics

    def __eq__(self, other):
        return self is other or (
            isinstance(other, BinaryField) and self.fingerprint == other.fingerprint)

    def __hash__(self):
        return hash(self.fingerprint)

    def __repr__(self):
        if self.tower_parent is not None:
            return f"GF(2^{self.degree})[tower/{self.tower_parent!r}]"
        return f"GF(2^{self.degree})[{self.modulus:#x}]"

    def describe(self) -> dict:
        """JSON-friendly structural description (for reproducible output headers)."""
        if self.tower_parent is not None:
            return {"degree": self.degree, "tower": {
                "parent": self.tower_parent.describe(), "w": format(self.tower_w, "x")}}
        return {"degree": self.degree, "modulus": format(self.modulus, "x")}

    # -- element construction

    def element(self, bits: int) -> "FieldElement":
        if not 0 <= bits < self.order:
            raise ValueError(f"bits {bits:#x} out of range for {self!r}")
        return FieldElement(bits, self)

    def from_hex(self, s: str) -> "FieldElement":
        return self.element(int(s, 16))

    def elements(self):
        """All field elements in increasing bit order (small fields only)."""
        for b in range(self.order):
            yield FieldElement(b, self)

    def random_element(self, rng) -> "FieldElement":
        return FieldElement(rng.randrange(self.order), self)

    def random_nonzero(self, rng) -> "FieldElement":
        return FieldElement(rng.randrange(1, self.order), self)

    # -- int-level arithmetic

    def _mul(self, a: int, b: int) -> int:
        if self.tower_parent is None:
            if not self._tables_ready:
                self._build_tables()
            # 3-bit windowed carry-less product, then byte-table reduction
            t2 = a << 1
            t4 = t2 << 1
            tbl = (0, a, t2, t2 ^ a, t4, t4 ^ a, t4 ^ t2, t4 ^ t2 ^ a)
            r = 0
            shift = 0
            while b:
                nib = b & 7
                if nib:
                    r ^= tbl[nib] << shift
                b >>= 3
                shift += 3
            hi = r >> self.degree
            r &= self.mask
            if hi:
                r ^= _apply_tables(self._red_tables, hi)
            return r
        p = self.tower_parent
        h = p.degree
        m = p.mask
        a0, a1 = a & m, a >> h
        b0, b1 = b & m, b >> h
        m00 = p._mul(a0, b0)
        m11 = p._mul(a1, b1)
        mid = p._mul(a0 ^ a1, b0 ^ b1) ^ m00 ^ m11
        # u^2 = u + w
        lo = m00 ^ p._mul(m11, self.tower_w)
        hi = mid ^ m11
        return lo | (hi << h)

    def _square(self, a: int) -> int:
        if self.tower_parent is None:
            if not self._tables_ready:
                self._build_tables()
            return _apply_tables(self._sq_tables, a)
        p = self.tower_parent
        h = p.degree
        a0, a1 = a & p.mask, a >> h
        s1 = p._square(a1)
        lo = p._square(a0) ^ p._mul(s1, self.tower_w)
        return lo | (s1 << h)

    def _inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        if self.tower_parent is None:
            return _pinvmod(a, self.modulus)
        p = self.tower_parent
        h = p.degree
        a0, a1 = a & p.mask, a >> h
        # norm over the parent: a * conj(a), conj(a) = (a0+a1) + a1*u
        norm = p._mul(a0, a0 ^ a1) ^ p._mul(p._square(a1), self.tower_w)
        ninv = p._inv(norm)
        return p._mul(a0 ^ a1, ninv) | (p._mul(a1, ninv) << h)

    def _sqrt(self, a: int) -> int:
        if self.tower_parent is None:
            if not self._tables_ready:
                self._build_tables()
            return _apply_tables(self._sqrt_tables, a)
        p = self.tower_parent
        h = p.degree
        a0, a1 = a & p.mask, a >> h
        r1 = p._sqrt(a1)
        r0 = p._sqrt(a0 ^ p._mul(a1, self.tower_w))
        return r0 | (r1 << h)

    def _trace(self, a: int) -> int:
        if self.tower_parent is not None:
            # transitivity: the relative trace of a0 + a1*u down to the parent is a1
            return self.tower_parent._trace(a >> self.tower_parent.degree)
        if not self._tables_ready:
            self._build_tables()
        return (a & self._trace_mask).bit_count() & 1

    # -- solver for s^2 + s = e, cached row-echelon basis per field

    def _artin_schreier_basis(self):
        if self._as_basis is None:
            basis = {}
            for i in range(self.degree):
                vec = self._square(1 << i) ^ (1 << i)
                sol = 1 << i
                while vec:
                    lead = vec.bit_length() - 1
                    if lead in basis:
                        bv, bs = basis[lead]
                        vec ^= bv
                        sol ^= bs
                    else:
                        basis[lead] = (vec, sol)
                        break
            self._as_basis = basis
        return self._as_basis

    def _solve_s2_plus_s(self, e: int) -> int | None:
        """One solution of s^2 + s = e, or None (the other solution is s ^ 1)."""
        basis = self._artin_schreier_basis()
        s = 0
        while e:
            lead = e.bit_length() - 1
            if lead not in basis:
                return None
            bv, bs = basis[lead]
            e ^= bv
            s ^= bs
        return s


class FieldElement:
    """Element of a BinaryField; immutable, reduced, compared bitwise."""

    __slots__ = ("bits", "field")

    def __init__(self, bits: int, field: BinaryField):
        self.bits = bits
        self.field = field

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if self.field is not other.field and self.field != other.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(self.bits ^ other.bits, self.field)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        self._check(other)
        return FieldElement(self.field._mul(self.bits, other.bits), self.field)

    def __truediv__(self, other):
        self._check(other)
        return FieldElement(
            self.field._mul(self.bits, self.field._inv(other.bits)), self.field)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent; use inv()")
        r = 1
        a = self.bits
        f = self.field
        while e:
            if e & 1:
                r = f._mul(r, a)
            a = f._square(a)
            e >>= 1
        return FieldElement(r, f)

    def inv(self):
        return FieldElement(self.field._inv(self.bits), self.field)

    def square(self):
        return FieldElement(self.field._square(self.bits), self.field)

    def sqrt(self):
        """The unique square root (squaring is bijective in characteristic 2)."""
        return FieldElement(self.field._sqrt(self.bits), self.field)

    def trace(self):
        """Absolute trace down to GF(2), returned as a field element (0 or 1)."""
        return FieldElement(self.field._trace(self.bits), self.field)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        return (isinstance(other, FieldElement) and self.bits == other.bits
                and (self.field is other.field or self.field == other.field))

    def __hash__(self):
        return hash((self.bits, self.field.fingerprint))

    def __repr__(self):
        return f"<{self.bits:x}:GF(2^{self.field.degree})>"

    def hex(self) -> str:
        return format(self.bits, "x")


# ---------------------------------------------------------------------------
# Quadratic towers.

def trace_one_element(field: BinaryField) -> FieldElement:
    """First element (in bit order) with absolute trace 1; always exists.

    By linearity every element below the first trace-1 basis vector has
    trace 0, so the minimum is that single basis bit.
    """
    for i in range(field.degree):
        if field._trace(1 << i):
            return FieldElement(1 << i, field)
    raise AssertionError("unreachable: trace is onto GF(2)")


def quadratic_extension(field: BinaryField) -> BinaryField:
    """GF(2^(2n)) as the tower step field[u]/(u^2 + u + w) with trace(w) = 1.

    Repeated calls return the same object, so embeddings stay consistent.
    """
    if field._quad_ext is None:
        w = trace_one_element(field)
        field._quad_ext = BinaryField._tower(field, w.bits)
    return field._quad_ext


def embed(ext: BinaryField, a: FieldElement) -> FieldElement:
    """Natural inclusion of a parent-field element into its tower extension."""
    if ext.tower_parent is None or ext.tower_parent != a.field:
        raise ValueError("ext is not a quadratic extension of the element's field")
    return FieldElement(a.bits, ext)


def in_parent(x: FieldElement) -> bool:
    """True when a tower-field element lies in the parent field (u-component 0)."""
    f = x.field
    if f.tower_parent is None:
        raise ValueError("element does not live in a tower extension")
    return (x.bits >> f.tower_parent.degree) == 0


def to_parent(x: FieldElement) -> FieldElement:
    if not in_parent(x):
        raise ValueError("element has a nonzero u-component")
    return FieldElement(x.bits, x.field.tower_parent)


# ---------------------------------------------------------------------------
# The characteristic-2 quadratic t^2 + c*t + d.

def artin_schreier_roots(c: FieldElement, d: FieldElement) -> list[FieldElement]:
    """All in-field roots of t^2 + c*t + d, in increasing bit order.

    c = 0 gives the single root sqrt(d).  Otherwise substituting t = c*s
    reduces to s^2 + s = d/c^2, which has two solutions exactly when the
    trace of d/c^2 vanishes, and none otherwise.
    """
    c._check(d)
    f = c.field
    if c.is_zero():
        return [d.sqrt()]
    e = d / c.square()
    s = f._solve_s2_plus_s(e.bits)
    if s is None:
        return []
    r1 = f._mul(c.bits, s)
    r2 = r1 ^ c.bits
    return [FieldElement(b, f) for b in sorted((r1, r2))]

"""Exact sparse multivariate polynomials over binary fields.

Used to verify polynomial identities symbolically (exact equality of
canonical forms, not sampling).  Coefficients live in any BinaryField;
addition is characteristic-2, so p + p = 0 and (p + q)^2 = p^2 + q^2.

Monomials are tuples of (variable index, exponent) pairs sorted by the
fixed variable order below; the order also fixes the graded-lex canonical
form used for leading-term selection and deterministic serialization.
"""

from __future__ import annotations

from .gf2k import BinaryField, FieldElement

# Fixed total order on variable names; extensible through ensure_var.
_VAR_NAMES: list[str] = [
    "x00", "x01", "x10", "x11",
    "l00", "l01", "l10", "l11",
    "z1", "z2", "z3", "z4", "z5", "z6",
    "s", "t",
]
_VAR_INDEX: dict[str, int] = {n: i for i, n in enumerate(_VAR_NAMES)}


def ensure_var(name: str) -> int:
    """Index of a registered variable, registering it if new."""
    if name not in _VAR_INDEX:
        _VAR_INDEX[name] = len(_VAR_NAMES)
        _VAR_NAMES.append(name)
    return _VAR_INDEX[name]


def var_name(index: int) -> str:
    return _VAR_NAMES[index]


Monomial = tuple  # ((var_index, exponent), ...) sorted, exponents > 0


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_key(m: Monomial):
    """Graded-lex sort key: total degree first, then exponents in var order."""
    deg = sum(e for _, e in m)
    dense = [0] * len(_VAR_NAMES)
    for v, e in m:
        dense[v] = e
    return (deg, tuple(dense))


class SparsePoly:
    """Immutable sparse polynomial; no zero coefficients are stored."""

    __slots__ = ("terms", "field")

    def __init__(self, terms: dict, field: BinaryField):
        self.terms = {m: c for m, c in terms.items() if c.bits}
        self.field = field

    # -- constructors

    @classmethod
    def zero(cls, field: BinaryField) -> "SparsePoly":
        return cls({}, field)

    @classmethod
    def const(cls, c: FieldElement) -> "SparsePoly":
        return cls({(): c}, c.field)

    @classmethod
    def var(cls, name: str, field: BinaryField) -> "SparsePoly":
        v = ensure_var(name)
        return cls({((v, 1),): field.one}, field)

    # -- ring operations

    def _check(self, other: "SparsePoly"):
        if self.field != other.field:
            raise ValueError("coefficient-field mismatch")

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            prev = terms.get(m)
            if prev is None:
                terms[m] = c
            else:
                s = prev + c
                if s.bits:
                    terms[m] = s
                else:
                    del terms[m]
        return SparsePoly(terms, self.field)

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            other = SparsePoly.const(other)
        self._check(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                c = c1 * c2
                prev = terms.get(m)
                if prev is None:
                    if c.bits:
                        terms[m] = c
                else:
                    s = prev + c
                    if s.bits:
                        terms[m] = s
                    else:
                        del terms[m]
        return SparsePoly(terms, self.field)

    __rmul__ = __mul__

    def square(self) -> "SparsePoly":
        """Frobenius: square every coefficient and double every exponent."""
        return SparsePoly(
            {tuple((v, 2 * e) for v, e in m): c.square()
             for m, c in self.terms.items()},
            self.field)

    def __pow__(self, e: int) -> "SparsePoly":
        if e < 0:
            raise ValueError("negative exponent")
        result = SparsePoly.const(self.field.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base.square()
        return result

    # -- composition and evaluation

    def substitute(self, assignment: dict) -> "SparsePoly":
        """Exact composition; variables absent from the assignment stay fixed.

        Assignment values may be SparsePoly or FieldElement (treated as
        constants); keys are variable names.
        """
        mapping: dict[int, SparsePoly] = {}
        for name, val in assignment.items():
            if isinstance(val, FieldElement):
                val = SparsePoly.const(val)
            mapping[ensure_var(name)] = val
        out = SparsePoly.zero(self.field)
        pow_cache: dict[tuple[int, int], SparsePoly] = {}
        for m, c in self.terms.items():
            prod = SparsePoly.const(c)
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    f = pow_cache.get(key)
                    if f is None:
                        f = mapping[v] ** e
                        pow_cache[key] = f
                    prod = prod * f
                else:
                    prod = prod * SparsePoly({((v, e),): self.field.one}, self.field)
            out = out + prod
        return out

    def evaluate(self, assignment: dict) -> FieldElement:
        """Value at a full numeric point; every variable must be assigned."""
        vals = {ensure_var(name): v for name, v in assignment.items()}
        acc = self.field.zero
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                term = term * (vals[v] ** e)
            acc = acc + term
        return acc

    # -- structure

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def variables(self) -> set[str]:
        return {var_name(v) for m in self.terms for v, _ in m}

    def leading(self) -> tuple[Monomial, FieldElement]:
        m = max(self.terms, key=_mono_key)
        return m, self.terms[m]

    def __eq__(self, other):
        return (isinstance(other, SparsePoly) and self.field == other.field
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field.fingerprint,
                     frozenset((m, c.bits) for m, c in self.terms.items())))

    def __repr__(self):
        return f"SparsePoly({self.to_text()!r})"

    def to_text(self) -> str:
        """Deterministic human-readable form, graded-lex descending."""
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_mono_key, reverse=True):
            c = self.terms[m]
            factors = [f"{var_name(v)}^{e}" if e > 1 else var_name(v) for v, e in m]
            if c.bits != 1 or not factors:
                factors.insert(0, c.hex())
            parts.append("*".join(factors))
        return " + ".join(parts)


def proportional(p: SparsePoly, q: SparsePoly) -> FieldElement | None:
    """The nonzero scalar mu with p = mu*q if one exists, else None.

    mu is read off the (shared) leading monomial and then verified on
    every term, so the answer is exact.
    """
    p._check(q)
    if p.is_zero() and q.is_zero():
        return p.field.one
    if p.is_zero() or q.is_zero():
        return None
    mp, cp = p.leading()
    mq, cq = q.leading()
    if mp != mq:
        return None
    mu = cp / cq
    if p == q * mu:
        return mu
    return None

"""Points of P^3 indexed by (Z/2Z)^2, the coset quadrics, and the maps they cut out.

Coordinates x_g are indexed by the four group elements g in {00, 01, 10, 11}
(encoded as the ints 0..3 with XOR as the group law).  The four quadrics pair
coordinates along cosets:

    P_00 = (x00 + x01 + x10 + x11)^2
    P_01 = x01*x00 + x11*x10
    P_10 = x10*x00 + x11*x01
    P_11 = x11*x00 + x10*x01

Scaled by a vector of nonzero theta constants (lambda_g) they define the
quadratic self-map of P^3

    verschiebung:        x -> (lambda_g * P_g(x))_g
    absolute_frobenius:  x -> (lambda_g * P_g(x)^2)_g

whose common indeterminacy locus is the single point (1:1:1:1).  The module
also evaluates the characteristic-2 Kummer quartic cut out by these data, the
boundary conic inside the hyperplane {x00 = 0}, the 2-torsion coordinate
translations, and the linear projection from Pluecker coordinates used for
the odd-determinant picture.
"""

from __future__ import annotations

from .gf2k import BinaryField, FieldElement, embed
from .polyring import SparsePoly

# Group (Z/2Z)^2: elements as ints 0..3, group law XOR, labels b1b2.
GROUP = (0, 1, 2, 3)
G00, G01, G10, G11 = GROUP
GROUP_LABELS = ("00", "01", "10", "11")

# The three index-2 subgroups.
INDEX2_SUBGROUPS = (frozenset({0, 1}), frozenset({0, 2}), frozenset({0, 3}))

X_VARS = ("x00", "x01", "x10", "x11")
L_VARS = ("l00", "l01", "l10", "l11")
Z_VARS = ("z1", "z2", "z3", "z4", "z5", "z6")


def g_label(g: int) -> str:
    return GROUP_LABELS[g]


def g_from_label(s: str) -> int:
    return GROUP_LABELS.index(s)


class ProjPoint:
    """Point of P^3 with coordinates indexed by the group, canonically normalized.

    The stored representative has its first nonzero coordinate (in the order
    00, 01, 10, 11) equal to 1, which makes equality and hashing exact.
    """

    __slots__ = ("coords", "field")

    def __init__(self, coords, field: BinaryField | None = None):
        coords = tuple(coords)
        if len(coords) != 4:
            raise ValueError("a projective point needs 4 coordinates")
        if field is None:
            field = coords[0].field
        pivot = None
        for c in coords:
            if c.bits:
                pivot = c
                break
        if pivot is None:
            raise ValueError("all coordinates are zero")
        if pivot.bits != 1:
            inv = pivot.inv()
            coords = tuple(c * inv for c in coords)
        self.coords = coords
        self.field = field

    @classmethod
    def from_bits(cls, field: BinaryField, bits) -> "ProjPoint":
        return cls(tuple(field.element(b) for b in bits), field)

    @classmethod
    def from_hex(cls, field: BinaryField, text: str) -> "ProjPoint":
        return cls(tuple(field.from_hex(p) for p in text.split(":")), field)

    def bits(self) -> tuple[int, int, int, int]:
        return tuple(c.bits for c in self.coords)

    def __getitem__(self, g: int) -> FieldElement:
        return self.coords[g]

    def __eq__(self, other):
        return (isinstance(other, ProjPoint) and self.bits() == other.bits()
                and self.field == other.field)

    def __hash__(self):
        return hash((self.bits(), self.field.fingerprint))

    def __repr__(self):
        return "(" + ":".join(c.hex() for c in self.coords) + ")"

    def to_hex(self) -> str:
        return ":".join(c.hex() for c in self.coords)

    def embed(self, ext: BinaryField) -> "ProjPoint":
        return ProjPoint(tuple(embed(ext, c) for c in self.coords), ext)


class ThetaConstants:
    """The 4-vector (lambda_g) of nonzero constants parametrizing the maps."""

    __slots__ = ("lam", "field")

    def __init__(self, lam):
        lam = tuple(lam)
        if len(lam) != 4:
            raise ValueError("need 4 theta constants")
        if any(not l.bits for l in lam):
            raise ValueError("theta constants must all be nonzero")
        self.lam = lam
        self.field = lam[0].field

    @classmethod
    def ones(cls, field: BinaryField) -> "ThetaConstants":
        return cls((field.one,) * 4)

    @classmethod
    def from_hex(cls, field: BinaryField, parts) -> "ThetaConstants":
        return cls(tuple(field.from_hex(p) for p in parts))

    @classmethod
    def random(cls, field: BinaryField, rng) -> "ThetaConstants":
        return cls(tuple(field.random_nonzero(rng) for _ in range(4)))

    def __getitem__(self, g: int) -> FieldElement:
        return self.lam[g]

    def __eq__(self, other):
        return (isinstance(other, ThetaConstants)
                and self.bits() == other.bits() and self.field == other.field)

    def bits(self) -> tuple[int, int, int, int]:
        return tuple(l.bits for l in self.lam)

    def to_hex(self) -> list[str]:
        return [l.hex() for l in self.lam]

    def squared(self) -> "ThetaConstants":
        return ThetaConstants(tuple(l.square() for l in self.lam))

    def embed(self, ext: BinaryField) -> "ThetaConstants":
        return ThetaConstants(tuple(embed(ext, l) for l in self.lam))

    def __repr__(self):
        return "lambda(" + ",".join(l.hex() for l in self.lam) + ")"


# ---------------------------------------------------------------------------
# Quadrics and the two maps.

def quadric_values(x: ProjPoint) -> tuple[FieldElement, ...]:
    """(P_00, P_01, P_10, P_11) at the normalized representative of x."""
    c0, c1, c2, c3 = x.coords
    s = c0 + c1 + c2 + c3
    return (s * s, c1 * c0 + c3 * c2, c2 * c0 + c3 * c1, c3 * c0 + c2 * c1)


def quadric_eval(g: int, x: ProjPoint) -> FieldElement:
    return quadric_values(x)[g]


def base_point(field: BinaryField) -> ProjPoint:
    """(1:1:1:1), the common zero of the four quadrics."""
    return ProjPoint((field.one,) * 4, field)


def is_base_point(x: ProjPoint) -> bool:
    return all(c.bits == 1 for c in x.coords)


def _check_compatible(lam: ThetaConstants, x: ProjPoint):
    if lam.field != x.field:
        raise ValueError("theta constants and point live in different fields")


def verschiebung(lam: ThetaConstants, x: ProjPoint) -> ProjPoint | None:
    """Image (lambda_g * P_g(x))_g, or None on the indeterminacy point."""
    _check_compatible(lam, x)
    p = quadric_values(x)
    if not any(v.bits for v in p):
        return None
    return ProjPoint(tuple(lam[g] * p[g] for g in GROUP), x.field)


def absolute_frobenius(lam: ThetaConstants, x: ProjPoint) -> ProjPoint | None:
    """Image (lambda_g * P_g(x)^2)_g; equals verschiebung at squared coordinates."""
    _check_compatible(lam, x)
    p = quadric_values(x)
    if not any(v.bits for v in p):
        return None
    return ProjPoint(tuple(lam[g] * p[g].square() for g in GROUP), x.field)


def square_coords(x: ProjPoint) -> ProjPoint:
    return ProjPoint(tuple(c.square() for c in x.coords), x.field)


def translate(a: int, x: ProjPoint) -> ProjPoint:
    """Coordinate permutation y_g = x_(g+a); an involution for every a."""
    return ProjPoint(tuple(x.coords[g ^ a] for g in GROUP), x.field)


# ---------------------------------------------------------------------------
# Kummer quartic, hyperplanes, conic.

def _kummer_coeffs(lam: ThetaConstants):
    """Coefficients (q10, q01, q11, r) of the denominator-cleared quartic.

    The quartic is stored multiplied through by lambda_00, which leaves the
    zero set unchanged because lambda_00 is nonzero:

        q10*(x00^2 x10^2 + x01^2 x11^2) + q01*(x00^2 x01^2 + x10^2 x11^2)
        + q11*(x00^2 x11^2 + x01^2 x10^2) + r*x00 x01 x10 x11
    """
    l00, l01, l10, l11 = lam.lam
    return (l00 * l10.square(), l00 * l01.square(), l00 * l11.square(),
            l10 * l01 * l11)


def kummer_eval(lam: ThetaConstants, x: ProjPoint) -> FieldElement:
    """Denominator-cleared Kummer quartic at the normalized representative.

    Zero exactly on the strictly semistable boundary surface.
    """
    _check_compatible(lam, x)
    q10, q01, q11, r = _kummer_coeffs(lam)
    a, b, c, d = (c.square() for c in x.coords)   # x_g^2
    x00, x01, x10, x11 = x.coords
    return (q10 * (a * c + b * d) + q01 * (a * b + c * d) + q11 * (a * d + b * c)
            + r * (x00 * x01 * x10 * x11))


def kummer1_eval(lam: ThetaConstants, x: ProjPoint) -> FieldElement:
    """Source-side quartic: every coefficient of the cleared form squared.

    Convention: this equals kummer_eval with each lambda_g replaced by its
    square (the coefficient map is multiplicative, so squaring the lambdas
    squares every cleared coefficient).
    """
    return kummer_eval(lam.squared(), x)


def on_H(x: ProjPoint) -> bool:
    """Membership in the hyperplane {x00 = 0} (complement of the image)."""
    return x.coords[0].bits == 0


def on_H1(x: ProjPoint) -> bool:
    """Membership in the contracted hyperplane {x00 + x01 + x10 + x11 = 0}."""
    s = x.coords[0] + x.coords[1] + x.coords[2] + x.coords[3]
    return s.bits == 0


def conic_eval(lam: ThetaConstants, x: ProjPoint) -> FieldElement:
    """The conic lambda_10*x01*x11 + lambda_01*x10*x11 + lambda_11*x01*x10.

    Inside {x00 = 0} its square cuts out the boundary quartic.
    """
    _check_compatible(lam, x)
    _, x01, x10, x11 = x.coords
    return lam[G10] * x01 * x11 + lam[G01] * x10 * x11 + lam[G11] * x01 * x10


def sample_kummer_point(lam: ThetaConstants, rng, max_tries: int = 256) -> ProjPoint:
    """A random point on the boundary quartic, by solving for x00.

    The cleared quartic is quadratic in x00:
        A*x00^2 + B*x00 + C with
        A = lambda00*(lambda10^2 x10^2 + lambda01^2 x01^2 + lambda11^2 x11^2)
        B = lambda10*lambda01*lambda11 * x01*x10*x11
        C = K restricted to x00 = 0,
    so after drawing (x01, x10, x11) the remaining coordinate comes from the
    characteristic-2 quadratic solver (retrying draws whose trace obstruction
    leaves no rational root).
    """
    from .gf2k import artin_schreier_roots

    f = lam.field
    zero = f.zero
    q10, q01, q11, r_coef = _kummer_coeffs(lam)
    for _ in range(max_tries):
        x01, x10, x11 = (f.random_element(rng) for _ in range(3))
        if not (x01.bits or x10.bits or x11.bits):
            continue
        s01, s10, s11 = x01.square(), x10.square(), x11.square()
        a_coef = q10 * s10 + q01 * s01 + q11 * s11
        b_coef = r_coef * x01 * x10 * x11
        c_coef = q10 * s01 * s11 + q01 * s10 * s11 + q11 * s01 * s10
        if a_coef.bits:
            roots = artin_schreier_roots(b_coef / a_coef, c_coef / a_coef)
        elif b_coef.bits:
            roots = [c_coef / b_coef]
        else:
            roots = [zero] if not c_coef.bits else []
        for root in roots:
            pt = ProjPoint((root, x01, x10, x11), f)
            if kummer_eval(lam, pt).bits == 0:
                return pt
    raise RuntimeError("no boundary point found; try more draws")


# ---------------------------------------------------------------------------
# Pluecker coordinates and the odd-determinant projection.

class PluckerPoint:
    """Point of P^5 in coordinates (z1..z6); z1z4 + z2z5 + z3z6 = 0 on the
    Grassmannian of lines."""

    __slots__ = ("z", "field")

    def __init__(self, z, field: BinaryField | None = None):
        z = tuple(z)
        if len(z) != 6:
            raise ValueError("a Pluecker point needs 6 coordinates")
        if all(not c.bits for c in z):
            raise ValueError("all coordinates are zero")
        self.z = z
        self.field = field if field is not None else z[0].field

    @classmethod
    def from_bits(cls, field: BinaryField, bits) -> "PluckerPoint":
        return cls(tuple(field.element(b) for b in bits), field)

    def __getitem__(self, i: int) -> FieldElement:
        return self.z[i]

    def __repr__(self):
        return "(" + ":".join(c.hex() for c in self.z) + ")"


def grassmann_eval(z: PluckerPoint) -> FieldElement:
    z1, z2, z3, z4, z5, z6 = z.z
    return z1 * z4 + z2 * z5 + z3 * z6


def odd_projection(z: PluckerPoint) -> ProjPoint | None:
    """Linear projection (0 : z1+z4 : z2+z5 : z3+z6) in coordinates
    (x00 : x01 : x10 : x11); None exactly on the center z1+z4 = z2+z5 = z3+z6 = 0.

    Every image point lies in the hyperplane {x00 = 0}.
    """
    z1, z2, z3, z4, z5, z6 = z.z
    a, b, c = z1 + z4, z2 + z5, z3 + z6
    if not (a.bits or b.bits or c.bits):
        return None
    return ProjPoint((z.field.zero, a, b, c), z.field)


# ---------------------------------------------------------------------------
# Enumeration of P^3 over small fields.

def p3_size(field: BinaryField) -> int:
    q = field.order
    return q ** 3 + q ** 2 + q + 1


def enumerate_p3(field: BinaryField):
    """All points of P^3(field), each exactly once, in a fixed order.

    Order: pivot position ascending, then trailing coordinate bits ascending.
    """
    one = 1
    for pivot in range(4):
        head = (0,) * pivot + (one,)
        tail = 3 - pivot
        for n in range(field.order ** tail):
            bits = []
            m = n
            for _ in range(tail):
                bits.append(m & field.mask)
                m >>= field.degree
            yield ProjPoint.from_bits(field, head + tuple(bits))


# ---------------------------------------------------------------------------
# Symbolic forms (exact identity checking lives on top of these).

def quadric_poly(g: int, field: BinaryField) -> SparsePoly:
    """P_g as a polynomial in x00..x11 with coefficients in `field`."""
    x = [SparsePoly.var(n, field) for n in X_VARS]
    if g == 0:
        s = x[0] + x[1] + x[2] + x[3]
        return s * s
    h = min(k for k in GROUP if k not in (0, g))
    return x[g] * x[0] + x[g ^ h] * x[h]


def sum_poly(field: BinaryField) -> SparsePoly:
    x = [SparsePoly.var(n, field) for n in X_VARS]
    return x[0] + x[1] + x[2] + x[3]


def invariant_quartics(field: BinaryField) -> dict[str, SparsePoly]:
    """The five translation-invariant quartics S, R, Q10, Q01, Q11."""
    x00, x01, x10, x11 = (SparsePoly.var(n, field) for n in X_VARS)
    sq = {n: SparsePoly.var(n, field).square() for n in X_VARS}
    return {
        "S": sq["x00"].square() + sq["x01"].square() + sq["x10"].square()
             + sq["x11"].square(),
        "R": x00 * x01 * x10 * x11,
        "Q10": sq["x00"] * sq["x10"] + sq["x01"] * sq["x11"],
        "Q01": sq["x00"] * sq["x01"] + sq["x10"] * sq["x11"],
        "Q11": sq["x00"] * sq["x11"] + sq["x01"] * sq["x10"],
    }


def kummer_poly(lam: ThetaConstants) -> SparsePoly:
    """The cleared Kummer quartic as a polynomial in x00..x11 (numeric lambdas)."""
    q10, q01, q11, r = _kummer_coeffs(lam)
    basis = invariant_quartics(lam.field)
    return (basis["Q10"] * q10 + basis["Q01"] * q01 + basis["Q11"] * q11
            + basis["R"] * r)


def kummer1_poly(lam: ThetaConstants) -> SparsePoly:
    return kummer_poly(lam.squared())


def conic_poly(lam: ThetaConstants) -> SparsePoly:
    x00, x01, x10, x11 = (SparsePoly.var(n, lam.field) for n in X_VARS)
    return x01 * x11 * lam[G10] + x10 * x11 * lam[G01] + x01 * x10 * lam[G11]


def kummer_poly_symbolic(field: BinaryField) -> SparsePoly:
    """The cleared quartic with the lambdas kept as variables l00..l11."""
    l = [SparsePoly.var(n, field) for n in L_VARS]
    basis = invariant_quartics(field)
    return (basis["Q10"] * l[0] * l[2].square()
            + basis["Q01"] * l[0] * l[1].square()
            + basis["Q11"] * l[0] * l[3].square()
            + basis["R"] * l[2] * l[1] * l[3])


def conic_poly_symbolic(field: BinaryField) -> SparsePoly:
    l = [SparsePoly.var(n, field) for n in L_VARS]
    x00, x01, x10, x11 = (SparsePoly.var(n, field) for n in X_VARS)
    return x01 * x11 * l[2] + x10 * x11 * l[1] + x01 * x10 * l[3]

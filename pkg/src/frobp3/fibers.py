"""Closed-form preimages of the quadric map, and the fiber trichotomy.

For a target a = (a00:a01:a10:a11) and constants lambda, the preimages under
verschiebung solve P_g(x) = b_g with b_g = a_g / lambda_g.  Writing
c = sqrt(b00) (so the coordinate sum of any preimage is c), the pairwise
coordinate sums alpha = x00+x11, beta = x01+x10 and gamma = x00+x01,
delta = x11+x10 are the roots of

    t^2 + c*t + (b01 + b10)      and      t^2 + c*t + (b11 + b10)

and the fiber is classified by c:

* c != 0 (target off {x00 = 0}): exactly four distinct points,
      x00 = (b10 + gamma*alpha)/c      x01 = (b10 + gamma*beta)/c
      x10 = (b10 + beta*delta)/c       x11 = (b10 + delta*alpha)/c
  together with the three variants swapping alpha<->beta and/or
  gamma<->delta.  Roots are taken in the base field when the trace
  conditions allow, else in the quadratic extension, where both
  quadratics always split.
* c = 0 and b01*b10 + b01*b11 + b10*b11 != 0: the fiber is empty.
* c = 0 on the conic (that expression = 0): the fiber is the projective
  line cut out by {x00+x01+x10+x11 = 0} and
  {(alpha+gamma)*x00 + alpha*x01 + gamma*x11 = 0} with alpha = sqrt(b01+b10),
  gamma = sqrt(b11+b10); the line always passes through (1:1:1:1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2k import BinaryField, FieldElement, artin_schreier_roots, embed, quadratic_extension
from .moduli import (GROUP, ProjPoint, ThetaConstants, base_point, enumerate_p3,
                     is_base_point, p3_size, translate, verschiebung)

# Empty fibers are confirmed by enumerating P^3 only below this point count.
DEFAULT_ENUM_LIMIT = 5000


@dataclass(frozen=True)
class FiberDerivation:
    """Intermediate quantities of the fiber computation, kept for auditing."""
    b: tuple           # (b00, b01, b10, b11) over the base field
    c: FieldElement    # sqrt(b00), base field
    alpha: FieldElement | None
    beta: FieldElement | None
    gamma: FieldElement | None
    delta: FieldElement | None
    extension_used: bool

    def to_json_dict(self) -> dict:
        opt = lambda e: e.hex() if e is not None else None
        return {
            "b": [e.hex() for e in self.b],
            "c": self.c.hex(),
            "alpha": opt(self.alpha), "beta": opt(self.beta),
            "gamma": opt(self.gamma), "delta": opt(self.delta),
            "extension_used": self.extension_used,
        }


@dataclass(frozen=True)
class GenericFour:
    """Four distinct preimage points, each mapping forward to the target."""
    points: tuple
    derivation: FiberDerivation
    kind = "four"

    def to_json_dict(self) -> dict:
        return {"kind": self.kind,
                "points": [p.to_hex() for p in self.points],
                "extension_used": self.derivation.extension_used,
                "field": self.points[0].field.describe(),
                "derivation": self.derivation.to_json_dict()}


@dataclass(frozen=True)
class EmptyFiber:
    """No preimage over any extension; obstruction is the nonzero certificate."""
    obstruction: FieldElement
    derivation: FiberDerivation
    kind = "empty"

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "points": [],
                "extension_used": False,
                "obstruction": self.obstruction.hex(),
                "derivation": self.derivation.to_json_dict()}


@dataclass(frozen=True)
class LineFiber:
    """A projective line of preimages: intersection of two hyperplanes.

    h1 and h2 are the coefficient vectors of the hyperplanes on
    (x00, x01, x10, x11); span holds two points spanning the line.
    All line points except (1:1:1:1) map forward to the target.
    """
    h1: tuple
    h2: tuple
    span: tuple
    derivation: FiberDerivation
    kind = "line"

    def points(self, field: BinaryField | None = None):
        """Every point of the line rational over `field` (default: its own)."""
        p, q = self.span
        if field is not None and field != p.field:
            p, q = p.embed(field), q.embed(field)
        f = p.field
        yield q
        for e in f.elements():
            yield ProjPoint(tuple(a + e * b for a, b in zip(p.coords, q.coords)), f)

    def to_json_dict(self) -> dict:
        return {"kind": self.kind,
                "points": [p.to_hex() for p in self.span],   # spanning pair
                "extension_used": False,
                "hyperplanes": [[e.hex() for e in self.h1],
                                [e.hex() for e in self.h2]],
                "span": [p.to_hex() for p in self.span],
                "derivation": self.derivation.to_json_dict()}


FiberResult = GenericFour | EmptyFiber | LineFiber


def _line_span(h2_coeffs, field: BinaryField) -> tuple[ProjPoint, ProjPoint]:
    """Two points spanning {sum x_g = 0} cut by the hyperplane h2_coeffs.

    Gaussian elimination on the 2x4 system; the two rows are independent
    whenever h2 is not proportional to (1,1,1,1), which holds because
    alpha = gamma = 0 would force an empty-fiber target instead.
    """
    one = field.one
    rows = [[one, one, one, one], list(h2_coeffs)]
    pivots = []
    r = 0
    for col in range(4):
        piv = None
        for i in range(r, 2):
            if rows[i][col].bits:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][col].inv()
        rows[r] = [e * inv for e in rows[r]]
        for i in range(2):
            if i != r and rows[i][col].bits:
                f = rows[i][col]
                rows[i] = [e + f * g for e, g in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == 2:
            break
    if r != 2:
        raise AssertionError("line system is degenerate")
    free = [c for c in range(4) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * 4
        vec[fc] = one
        for rowi, pc in enumerate(pivots):
            vec[pc] = rows[rowi][fc]
        basis.append(ProjPoint(tuple(vec), field))
    return tuple(basis)


def preimage(lam: ThetaConstants, a: ProjPoint) -> FiberResult:
    """Classify and compute the fiber of verschiebung over the target a."""
    if lam.field != a.field:
        raise ValueError("theta constants and target live in different fields")
    f = a.field
    b = tuple(a[g] / lam[g] for g in GROUP)
    b00, b01, b10, b11 = b
    c = b00.sqrt()

    if c.bits:
        e1 = (b01 + b10) / c.square()
        e2 = (b11 + b10) / c.square()
        need_ext = e1.trace().bits != 0 or e2.trace().bits != 0
        if need_ext:
            work = quadratic_extension(f)
            cw = embed(work, c)
            b10w = embed(work, b10)
            r1 = artin_schreier_roots(cw, embed(work, b01 + b10))
            r2 = artin_schreier_roots(cw, embed(work, b11 + b10))
        else:
            work = f
            cw, b10w = c, b10
            r1 = artin_schreier_roots(c, b01 + b10)
            r2 = artin_schreier_roots(c, b11 + b10)
        alpha, beta = r1
        gamma, delta = r2
        cinv = cw.inv()

        def point(al, be, ga, de):
            return ProjPoint((
                (b10w + ga * al) * cinv,
                (b10w + ga * be) * cinv,
                (b10w + be * de) * cinv,
                (b10w + de * al) * cinv), work)

        pts = sorted(
            {point(alpha, beta, gamma, delta), point(beta, alpha, gamma, delta),
             point(alpha, beta, delta, gamma), point(beta, alpha, delta, gamma)},
            key=ProjPoint.bits)
        deriv = FiberDerivation(b, c, alpha, beta, gamma, delta, need_ext)
        return GenericFour(tuple(pts), deriv)

    alpha = (b01 + b10).sqrt()
    gamma = (b11 + b10).sqrt()
    obstruction = b01 * b10 + b01 * b11 + b10 * b11
    deriv = FiberDerivation(b, c, alpha, alpha, gamma, gamma, False)
    if obstruction.bits:
        return EmptyFiber(obstruction, deriv)
    one = f.one
    h1 = (one, one, one, one)
    h2 = (alpha + gamma, alpha, f.zero, gamma)
    span = _line_span(h2, f)
    return LineFiber(h1, h2, span, deriv)


def _forward_equals(lam: ThetaConstants, x: ProjPoint, a: ProjPoint) -> bool:
    """verschiebung(x) == a, with lam and a lifted into x's field if needed."""
    if x.field != a.field:
        lam = lam.embed(x.field)
        a = a.embed(x.field)
    img = verschiebung(lam, x)
    return img is not None and img == a


def verify_fiber(lam: ThetaConstants, a: ProjPoint, result: FiberResult, *,
                 enum_limit: int = DEFAULT_ENUM_LIMIT) -> bool:
    """Independent forward check of a fiber result.

    GenericFour: all four points are distinct and map to the target.
    Line: (1:1:1:1) satisfies both hyperplanes, and every rational line
    point except the base point maps to the target (the whole line when the
    field is small, a fixed sample of parameters otherwise).
    Empty: confirmed by exhaustively enumerating P^3 over the quadratic
    extension (or, failing the size cap, the base field) when that stays
    under enum_limit points; the nonzero obstruction is always rechecked.
    """
    f = a.field
    if isinstance(result, GenericFour):
        if len(set(result.points)) != 4:
            return False
        return all(_forward_equals(lam, p, a) for p in result.points)

    if isinstance(result, LineFiber):
        bp = base_point(f)
        if any((h[0] + h[1] + h[2] + h[3]).bits for h in (result.h1, result.h2)):
            return False
        pts = result.points()
        if f.order > 64:
            p, q = result.span
            some = [q] + [
                ProjPoint(tuple(x + f.element(1 << (k % f.degree)) * y
                                for x, y in zip(p.coords, q.coords)), f)
                for k in range(10)]
            pts = some + [p]
        seen_base = False
        for pt in pts:
            if is_base_point(pt):
                seen_base = True
                continue
            if not _forward_equals(lam, pt, a):
                return False
        return seen_base or f.order > 64

    if isinstance(result, EmptyFiber):
        if not result.obstruction.bits:
            return False
        search: BinaryField | None = None
        ext = quadratic_extension(f)
        if p3_size(ext) <= enum_limit:
            search = ext
        elif p3_size(f) <= enum_limit:
            search = f
        if search is None:
            return True
        lam_s = lam.embed(search) if search != f else lam
        a_s = a.embed(search) if search != f else a
        for x in enumerate_p3(search):
            if verschiebung(lam_s, x) == a_s:
                return False
        return True

    raise TypeError(f"not a fiber result: {result!r}")


def surjectivity_witness(lam: ThetaConstants, y: ProjPoint) -> tuple[int, FiberResult]:
    """Translate the target to move it off {x00 = 0}, then solve the fiber.

    Picks the smallest g with y_g != 0, so translate(g, y) has a nonzero
    first coordinate and its fiber is GenericFour by construction.  The
    returned pair (g, fiber) witnesses that y is reached once determinants
    are allowed to twist by the 2-torsion point g.
    """
    g = next(k for k in GROUP if y[k].bits)
    return g, preimage(lam, translate(g, y))


def forward_table(lam: ThetaConstants, field: BinaryField) -> dict:
    """Exhaustive forward map: normalized image -> set of source points.

    Brute-force oracle used to cross-check preimage(); indeterminate sources
    (the base point) are skipped.
    """
    table: dict[ProjPoint, set] = {}
    for x in enumerate_p3(field):
        img = verschiebung(lam, x)
        if img is not None:
            table.setdefault(img, set()).add(x)
    return table

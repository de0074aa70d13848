"""Certificate suite for the defining polynomial identities.

Every check is exact: symbolic identities are compared in canonical form
over GF(2) or GF(2^16) (never sampled pointwise), and the enumerative checks
run to exhaustion over the stated fields.  Each check returns a CheckResult
carrying a one-line certificate detail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .gf2k import BinaryField
from .moduli import (GROUP, INDEX2_SUBGROUPS, X_VARS, ThetaConstants,
                     base_point, conic_poly, enumerate_p3, invariant_quartics,
                     kummer1_poly, kummer_poly, kummer_poly_symbolic,
                     quadric_poly, quadric_values, sum_poly)
from .polyring import SparsePoly, proportional


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def check_subgroup_identities() -> list[CheckResult]:
    """(sum over a subgroup)(sum over its complement) = sum of complement quadrics.

    Exact in GF(2)[x], for each of the three index-2 subgroups.
    """
    gf2 = BinaryField(1)
    x = [SparsePoly.var(n, gf2) for n in X_VARS]
    out = []
    for sub in INDEX2_SUBGROUPS:
        inside = [g for g in GROUP if g in sub]
        outside = [g for g in GROUP if g not in sub]
        lhs = (x[inside[0]] + x[inside[1]]) * (x[outside[0]] + x[outside[1]])
        rhs = quadric_poly(outside[0], gf2) + quadric_poly(outside[1], gf2)
        label = "{" + ",".join(f"{g:02b}" for g in sorted(sub)) + "}"
        out.append(CheckResult(
            f"index2_subgroup_identity{label}", lhs == rhs,
            f"lhs = {lhs.to_text()}"))
    return out


def check_p0_square() -> CheckResult:
    """P_00 = (x00 + x01 + x10 + x11)^2, exact in GF(2)[x]."""
    gf2 = BinaryField(1)
    s = sum_poly(gf2)
    ok = quadric_poly(0, gf2) == s * s
    return CheckResult("p00_is_square_of_sum", ok, quadric_poly(0, gf2).to_text())


def check_coset_representative_invariance() -> CheckResult:
    """Swapping the representative inside each coset leaves every P_g unchanged."""
    gf2 = BinaryField(1)
    x = [SparsePoly.var(n, gf2) for n in X_VARS]
    ok = True
    for g in (1, 2, 3):
        h = min(k for k in GROUP if k not in (0, g))
        alt = x[0] * x[g] + x[h] * x[g ^ h]       # representatives g and g^h
        ok = ok and alt == quadric_poly(g, gf2)
    return CheckResult("coset_representative_invariance", ok,
                       "both representative choices give identical quadrics")


def check_conic_square(seed: int = 0, samples: int = 25) -> CheckResult:
    """lambda00 * conic^2 equals the quartic restricted to {x00 = 0}.

    Checked once with symbolic lambdas over GF(2)[l,x], then with `samples`
    random nonzero lambda vectors over GF(2^16), each an exact polynomial
    identity in x.
    """
    gf2 = BinaryField(1)
    from .moduli import conic_poly_symbolic
    l00 = SparsePoly.var("l00", gf2)
    sym_ok = (kummer_poly_symbolic(gf2).substitute({"x00": gf2.zero})
              == conic_poly_symbolic(gf2).square() * l00)
    f16 = BinaryField(16)
    rng = random.Random(seed)
    failures = 0
    for _ in range(samples):
        lam = ThetaConstants.random(f16, rng)
        lhs = conic_poly(lam).square() * lam[0]
        rhs = kummer_poly(lam).substitute({"x00": f16.zero})
        if lhs != rhs:
            failures += 1
    ok = sym_ok and failures == 0
    return CheckResult(
        "conic_square_equals_quartic_on_H", ok,
        f"symbolic identity {'holds' if sym_ok else 'FAILS'}; "
        f"{samples - failures}/{samples} random lambda samples exact")


def check_pullback_factorization(seed: int = 0, samples: int = 25) -> CheckResult:
    """Substituting x_g -> lambda_g P_g into the quartic factors as
    (source quartic) * (x00+x01+x10+x11)^4, up to a nonzero scalar.

    Exact in x for each sampled lambda over GF(2^16); the recovered scalars
    are reported in the certificate.
    """
    f16 = BinaryField(16)
    rng = random.Random(seed)
    scalars = []
    failures = 0
    h4 = sum_poly(f16) ** 4
    for _ in range(samples):
        lam = ThetaConstants.random(f16, rng)
        sub = {X_VARS[g]: quadric_poly(g, f16) * lam[g] for g in GROUP}
        lhs = kummer_poly(lam).substitute(sub)
        mu = proportional(lhs, kummer1_poly(lam) * h4)
        if mu is None:
            failures += 1
        else:
            scalars.append((lam, mu))
    sample_view = ", ".join(
        f"lambda={','.join(l.to_hex())} -> mu={m.hex()}" for l, m in scalars[:3])
    matches_l00 = sum(1 for l, m in scalars if m == l[0])
    return CheckResult(
        "pullback_factorization", failures == 0,
        f"{samples - failures}/{samples} exact; scalar == lambda00 in "
        f"{matches_l00}/{len(scalars)} samples; e.g. {sample_view}")


def check_translation_invariance() -> CheckResult:
    """The cleared quartic is literally invariant under all four coordinate
    translations x_g -> x_(g+a) (each basis quartic is translation-invariant,
    so the induced permutation of the coefficients is the identity)."""
    gf2 = BinaryField(1)
    k = kummer_poly_symbolic(gf2)
    ok = True
    for a in GROUP:
        permuted = k.substitute(
            {X_VARS[g]: SparsePoly.var(X_VARS[g ^ a], gf2) for g in GROUP})
        ok = ok and permuted == k
    basis = invariant_quartics(gf2)
    basis_ok = all(
        q.substitute({X_VARS[g]: SparsePoly.var(X_VARS[g ^ a], gf2)
                      for g in GROUP}) == q
        for q in basis.values() for a in GROUP)
    return CheckResult("translation_invariance", ok and basis_ok,
                       "quartic and all five basis quartics fixed by the four translations")


def check_base_locus(max_degree: int = 4) -> CheckResult:
    """Over GF(2^n), n <= max_degree, the common zero locus of the four
    quadrics in P^3 is exactly {(1:1:1:1)} (exhaustive)."""
    details = []
    ok = True
    for n in range(1, max_degree + 1):
        field = BinaryField(n)
        zeros = [x for x in enumerate_p3(field)
                 if not any(v.bits for v in quadric_values(x))]
        good = zeros == [base_point(field)]
        ok = ok and good
        details.append(f"n={n}: {len(zeros)} common zero(s)")
    return CheckResult("base_locus_exactness", ok, "; ".join(details))


def check_kummer1_coefficients(seed: int = 0) -> CheckResult:
    """Each coefficient of the source quartic is the square of the matching
    coefficient of the target quartic (sampled lambdas over GF(2^16))."""
    f16 = BinaryField(16)
    rng = random.Random(seed)
    ok = True
    for _ in range(10):
        lam = ThetaConstants.random(f16, rng)
        k = kummer_poly(lam)
        k1 = kummer1_poly(lam)
        ok = ok and set(k.terms) == set(k1.terms) and all(
            k1.terms[m] == c.square() for m, c in k.terms.items())
    return CheckResult("kummer1_coefficients_are_squares", ok,
                       "coefficientwise Frobenius twist confirmed on 10 samples")


def run_all(seed: int = 0, samples: int = 25) -> list[CheckResult]:
    """The full symbolic + exhaustive identity suite, in a fixed order."""
    out = []
    out.extend(check_subgroup_identities())
    out.append(check_p0_square())
    out.append(check_coset_representative_invariance())
    out.append(check_conic_square(seed, samples))
    out.append(check_pullback_factorization(seed, samples))
    out.append(check_translation_invariance())
    out.append(check_base_locus())
    out.append(check_kummer1_coefficients(seed))
    return out

"""Iteration of the quadratic Frobenius map on P^3 over finite fields.

Orbits are classified by where they end: on a cycle (PERIODIC from step 0,
PREPERIODIC after a tail), at the indeterminacy point (1:1:1:1)
(DESTABILIZED), or nowhere within the step budget (UNRESOLVED, impossible
over a finite field once the budget exceeds the number of points).

The census enumerates all of P^3 over an enumerable field and aggregates the
classification; the preimage tower inverts the map level by level, pulling
coordinates back through the quadric fibers and in-field square roots, so
every field-degree jump is a factor of 1 or 2 and the accumulated degree over
the base is a power of 2.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .gf2k import BinaryField, quadratic_extension
from .moduli import (ProjPoint, ThetaConstants, absolute_frobenius, enumerate_p3,
                     is_base_point, kummer_eval, p3_size)
from .fibers import EmptyFiber, GenericFour, LineFiber, preimage

DEFAULT_CENSUS_LIMIT = 600_000
PERIODIC = "PERIODIC"
PREPERIODIC = "PREPERIODIC"
DESTABILIZED = "DESTABILIZED"
UNRESOLVED = "UNRESOLVED"


@dataclass(frozen=True)
class OrbitReport:
    """Orbit summary; the trajectory ends at the first repeated point (which
    appears twice, so trajectory[preperiod] == trajectory[preperiod+period])
    or at the indeterminacy point."""
    start: ProjPoint
    trajectory: tuple
    classification: str
    preperiod: int | None = None
    period: int | None = None
    hit_base_locus_at: int | None = None
    max_steps: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "start": self.start.to_hex(),
            "trajectory": [p.to_hex() for p in self.trajectory],
            "classification": self.classification,
            "preperiod": self.preperiod,
            "period": self.period,
            "destab_step": self.hit_base_locus_at,
            "max_steps": self.max_steps,
        }


def iterate_orbit(lam: ThetaConstants, x: ProjPoint, max_steps: int,
                  twist_lambda: bool = False) -> OrbitReport:
    """Apply the Frobenius map up to max_steps times.

    Stops at the first revisited state or when the image is undefined (the
    trajectory then ends at the indeterminacy point, whose index is
    hit_base_locus_at).  With twist_lambda the constants are squared after
    every application, and revisit detection keys on (point, constants).
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    traj = [x]
    lam_cur = lam
    key = (x, lam.bits()) if twist_lambda else x
    seen = {key: 0}
    cur = x
    for _ in range(max_steps):
        nxt = absolute_frobenius(lam_cur, cur)
        if nxt is None:
            return OrbitReport(x, tuple(traj), DESTABILIZED,
                               hit_base_locus_at=len(traj) - 1)
        if twist_lambda:
            lam_cur = lam_cur.squared()
            key = (nxt, lam_cur.bits())
        else:
            key = nxt
        if key in seen:
            pre = seen[key]
            period = len(traj) - pre
            traj.append(nxt)
            kind = PERIODIC if pre == 0 else PREPERIODIC
            return OrbitReport(x, tuple(traj), kind, preperiod=pre, period=period)
        seen[key] = len(traj)
        traj.append(nxt)
        cur = nxt
    return OrbitReport(x, tuple(traj), UNRESOLVED, max_steps=max_steps)


# ---------------------------------------------------------------------------
# Census.

@dataclass(frozen=True)
class CensusRow:
    point: ProjPoint
    classification: str
    preperiod: int | None
    period: int | None
    destab_step: int | None
    on_boundary: bool

    def to_json_dict(self) -> dict:
        return {"point": self.point.to_hex(),
                "classification": self.classification,
                "preperiod": self.preperiod,
                "period": self.period,
                "destab_step": self.destab_step,
                "on_boundary": self.on_boundary}


@dataclass(frozen=True)
class CensusReport:
    field: BinaryField
    lam: ThetaConstants
    seed: int | None
    rows: tuple
    counts: dict
    cycle_length_histogram: dict
    destab_depth_histogram: dict
    periodic_on_boundary: int
    version: str = ""

    def to_json_dict(self) -> dict:
        return {
            "header": {
                "field": self.field.describe(),
                "modulus": format(self.field.modulus, "x")
                           if self.field.modulus is not None else None,
                "lambda": self.lam.to_hex(),
                "seed": self.seed,
                "version": self.version,
            },
            "rows": [r.to_json_dict() for r in self.rows],
            "aggregates": {
                "counts": self.counts,
                "cycle_length_histogram":
                    {str(k): v for k, v in sorted(self.cycle_length_histogram.items())},
                "destab_depth_histogram":
                    {str(k): v for k, v in sorted(self.destab_depth_histogram.items())},
                "periodic_on_boundary": self.periodic_on_boundary,
            },
        }

    def csv_lines(self) -> list[str]:
        out = ["point,classification,preperiod,period,destab_step,on_boundary"]
        fmt = lambda v: "" if v is None else str(v)
        for r in self.rows:
            out.append(",".join([
                r.point.to_hex(), r.classification, fmt(r.preperiod),
                fmt(r.period), fmt(r.destab_step), str(r.on_boundary).lower()]))
        return out


def census(lam: ThetaConstants, field: BinaryField, *, max_steps: int | None = None,
           workers: int = 1, twist_lambda: bool = False, seed: int | None = None,
           limit: int = DEFAULT_CENSUS_LIMIT, version: str = "") -> CensusReport:
    """Classify every point of P^3(field); deterministic row order.

    The point count (q^3 + q^2 + q + 1) must stay under `limit`.  With the
    default step budget of one more than the point count, UNRESOLVED cannot
    occur.  Workers only split the pointwise classification; rows are always
    assembled in enumeration order, so the output is identical for any
    worker count.
    """
    if lam.field != field:
        raise ValueError("theta constants live in a different field")
    n_points = p3_size(field)
    if n_points > limit:
        raise ValueError(f"P^3 has {n_points} points; census limit is {limit}")
    if max_steps is None:
        max_steps = n_points + 1
    points = list(enumerate_p3(field))

    def classify(pt: ProjPoint) -> CensusRow:
        rep = iterate_orbit(lam, pt, max_steps, twist_lambda=twist_lambda)
        return CensusRow(pt, rep.classification, rep.preperiod, rep.period,
                         rep.hit_base_locus_at,
                         kummer_eval(lam, pt).bits == 0)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(classify, points))
    else:
        rows = [classify(p) for p in points]

    counts: dict[str, int] = {}
    cyc: dict[int, int] = {}
    destab: dict[int, int] = {}
    periodic_boundary = 0
    for r in rows:
        counts[r.classification] = counts.get(r.classification, 0) + 1
        if r.classification == PERIODIC:
            cyc[r.period] = cyc.get(r.period, 0) + 1
            if r.on_boundary:
                periodic_boundary += 1
        elif r.classification == DESTABILIZED:
            destab[r.destab_step] = destab.get(r.destab_step, 0) + 1
    return CensusReport(field, lam, seed, tuple(rows), counts, cyc, destab,
                        periodic_boundary, version)


# ---------------------------------------------------------------------------
# Preimage towers.

@dataclass(frozen=True)
class TowerReport:
    start: ProjPoint
    depth: int
    levels: tuple              # (field degree, tuple of points) per level, 0..depth
    degree_ratios: tuple       # per level 1..depth, each 1 or 2
    extension_used: tuple      # per level 1..depth

    def cumulative_degree(self) -> int:
        return self.levels[-1][0] // self.levels[0][0]

    def to_json_dict(self) -> dict:
        return {
            "start": self.start.to_hex(),
            "depth": self.depth,
            "degree_ratios": list(self.degree_ratios),
            "cumulative_degree": self.cumulative_degree(),
            "levels": [{"field_degree": d, "count": len(pts),
                        "points": [p.to_hex() for p in pts]}
                       for d, pts in self.levels],
        }


def preimage_tower(lam: ThetaConstants, x: ProjPoint, depth: int,
                   line_enum_cap: int = 1 << 10) -> TowerReport:
    """Iterated preimages of x under the Frobenius map.

    Each level first solves the quadric fibers of the previous level's
    points, then takes coordinatewise square roots (a field-internal
    bijection), so the working field grows by a quadratic step exactly when
    some fiber needed the extension.  Line fibers contribute all their
    rational points except (1:1:1:1); empty fibers end their branch.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if lam.field != x.field:
        raise ValueError("theta constants live in a different field")
    cur_field = x.field
    cur_lam = lam
    cur_points: list[ProjPoint] = [x]
    levels = [(cur_field.degree, (x,))]
    ratios = []
    used = []
    for _ in range(depth):
        results = [preimage(cur_lam, p) for p in cur_points]
        need_ext = any(isinstance(r, GenericFour) and r.derivation.extension_used
                       for r in results)
        if need_ext:
            nxt_field = quadratic_extension(cur_field)
            nxt_lam = cur_lam.embed(nxt_field)
        else:
            nxt_field, nxt_lam = cur_field, cur_lam
        collected: set[ProjPoint] = set()
        for r in results:
            if isinstance(r, EmptyFiber):
                continue
            if isinstance(r, GenericFour):
                pts = r.points
                if need_ext and pts[0].field != nxt_field:
                    pts = tuple(p.embed(nxt_field) for p in pts)
                collected.update(pts)
            else:   # LineFiber
                if nxt_field.order > line_enum_cap:
                    raise ValueError(
                        f"line fiber over GF(2^{nxt_field.degree}) is too large "
                        f"to enumerate (cap {line_enum_cap})")
                for p in r.points(nxt_field):
                    if not is_base_point(p):
                        collected.add(p)
        nxt_points = sorted(
            (ProjPoint(tuple(c.sqrt() for c in p.coords), nxt_field)
             for p in collected),
            key=ProjPoint.bits)
        ratios.append(2 if need_ext else 1)
        used.append(need_ext)
        levels.append((nxt_field.degree, tuple(nxt_points)))
        cur_field, cur_lam, cur_points = nxt_field, nxt_lam, nxt_points
    return TowerReport(x, depth, tuple(levels), tuple(ratios), tuple(used))


def verify_tower(lam: ThetaConstants, report: TowerReport) -> bool:
    """Forward check: every level-m point maps onto a level-(m-1) point.

    The comparison happens in the level-m field, embedding the previous
    level (and the constants) as needed.
    """
    def lam_for(field: BinaryField) -> ThetaConstants:
        cur = lam
        while cur.field.degree < field.degree:
            cur = cur.embed(quadratic_extension(cur.field))
        if cur.field != field:
            raise ValueError("tower field does not extend the base field")
        return cur

    def lift(pt: ProjPoint, field: BinaryField) -> ProjPoint:
        while pt.field.degree < field.degree:
            pt = pt.embed(quadratic_extension(pt.field))
        return pt

    for level in range(1, report.depth + 1):
        _, pts = report.levels[level]
        if not pts:
            continue
        fld = pts[0].field
        lam_f = lam_for(fld)
        targets = {lift(p, fld) for p in report.levels[level - 1][1]}
        for p in pts:
            img = absolute_frobenius(lam_f, p)
            if img is None or img not in targets:
                return False
    return True


# ---------------------------------------------------------------------------
# Frobenius-semistable sampling.

@dataclass(frozen=True)
class OmegaReport:
    mode: str                  # "exhaustive" or "sampled"
    field_degree: int
    max_depth: int | None
    seed: int | None
    total: int
    destabilized: int
    semistable: int
    semistable_points: tuple | None   # exhaustive mode only (may be truncated)

    def to_json_dict(self) -> dict:
        d = {"mode": self.mode, "field_degree": self.field_degree,
             "max_depth": self.max_depth, "seed": self.seed,
             "total": self.total, "destabilized": self.destabilized,
             "semistable": self.semistable,
             "destabilized_fraction": self.destabilized / self.total}
        if self.semistable_points is not None:
            d["semistable_points"] = [p.to_hex() for p in self.semistable_points]
        return d


def classify_omega_frob_sample(lam: ThetaConstants, field: BinaryField, *,
                               max_depth: int = 64, samples: int = 1000,
                               seed: int = 0,
                               enum_limit: int = DEFAULT_CENSUS_LIMIT,
                               keep_points: int = 4096) -> OmegaReport:
    """Points whose forward orbit never reaches the indeterminacy point.

    Over an enumerable field the answer is exact (orbits either hit the
    point or cycle); over larger fields seeded random points are iterated
    to max_depth and counted.
    """
    import random

    if p3_size(field) <= enum_limit:
        rep = census(lam, field, seed=seed)
        semis = tuple(r.point for r in rep.rows if r.classification != DESTABILIZED)
        destab = rep.counts.get(DESTABILIZED, 0)
        return OmegaReport(
            "exhaustive", field.degree, None, seed, len(rep.rows), destab,
            len(semis), semis if len(semis) <= keep_points else None)

    rng = random.Random(seed)
    destab = 0
    for _ in range(samples):
        while True:
            bits = [rng.randrange(field.order) for _ in range(4)]
            if any(bits):
                break
        pt = ProjPoint.from_bits(field, bits)
        rep = iterate_orbit(lam, pt, max_depth)
        if rep.classification == DESTABILIZED:
            destab += 1
    return OmegaReport("sampled", field.degree, max_depth, seed, samples,
                       destab, samples - destab, None)

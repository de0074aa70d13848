"""Command-line surface: map, preimage, orbit, census, tower, verify, witness.

Configuration comes from an optional `key = value` text file plus flags
(flags win).  Field elements are hex bitstrings (bit i = coefficient of t^i);
for degree-2 fields the names 0, 1, w, w2 are also accepted on input.
Output is JSON (pretty on a terminal, compact when piped); the census also
mirrors to CSV and renders histogram figures next to file output.

Exit codes: 0 success, 1 verification failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .gf2k import BinaryField
from .moduli import (PluckerPoint, ProjPoint, ThetaConstants, grassmann_eval,
                     odd_projection, translate, verschiebung, absolute_frobenius,
                     g_label)
from .fibers import preimage, surjectivity_witness, verify_fiber
from .dynamics import census, iterate_orbit, preimage_tower, classify_omega_frob_sample
from . import verify as verify_mod


class ConfigError(Exception):
    pass


_OMEGA_NAMES = {"0": "0", "1": "1", "w": "2", "w2": "3", "w^2": "3"}


def parse_element_text(text: str, degree: int) -> str:
    """Normalize an element token to a hex bitstring."""
    t = text.strip().lower()
    if t in _OMEGA_NAMES and t not in ("0", "1"):
        if degree != 2:
            raise ConfigError(f"symbolic element {text!r} only valid in GF(4)")
        return _OMEGA_NAMES[t]
    if t in ("0", "1"):
        return t
    try:
        int(t, 16)
    except ValueError:
        raise ConfigError(f"bad field element {text!r}") from None
    return t


def load_config(path: str) -> dict:
    cfg = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
            key, val = (s.strip() for s in line.split("=", 1))
            cfg[key.replace("-", "_")] = val
    return cfg


class RunConfig:
    """Validated run parameters shared by all subcommands."""

    def __init__(self, args):
        cfg = load_config(args.config) if args.config else {}

        def pick(flag_val, key, default=None):
            if flag_val is not None:
                return flag_val
            return cfg.get(key, default)

        degree = int(pick(args.field_degree, "field_degree", 1))
        modulus_text = pick(args.modulus, "modulus")
        modulus = int(modulus_text, 16) if modulus_text is not None else None
        try:
            self.field = BinaryField(degree, modulus)
        except ValueError as e:
            raise ConfigError(str(e)) from None
        lam_text = pick(args.lam, "lambda", "1,1,1,1")
        parts = [p for p in lam_text.replace(":", ",").split(",") if p != ""]
        if len(parts) != 4:
            raise ConfigError("lambda needs exactly 4 elements")
        try:
            self.lam = ThetaConstants.from_hex(
                self.field, [parse_element_text(p, degree) for p in parts])
        except ValueError as e:
            raise ConfigError(str(e)) from None
        self.seed = int(pick(args.seed, "seed", 0))
        self.fmt = pick(args.format, "format", "json")
        if self.fmt not in ("json", "csv"):
            raise ConfigError(f"unknown format {self.fmt!r}")
        self.max_steps = pick(getattr(args, "max_steps", None), "max_steps")
        self.max_steps = int(self.max_steps) if self.max_steps is not None else None
        self.depth = pick(getattr(args, "depth", None), "depth")
        self.depth = int(self.depth) if self.depth is not None else None
        self.twist_lambda = bool(getattr(args, "twist_lambda", False))

    def parse_point(self, text: str) -> ProjPoint:
        parts = text.replace(",", ":").split(":")
        if len(parts) != 4:
            raise ConfigError("a point needs exactly 4 coordinates")
        try:
            return ProjPoint.from_hex(
                self.field,
                ":".join(parse_element_text(p, self.field.degree) for p in parts))
        except ValueError as e:
            raise ConfigError(str(e)) from None

    def parse_plucker(self, text: str) -> PluckerPoint:
        parts = text.replace(",", ":").split(":")
        if len(parts) != 6:
            raise ConfigError("a Pluecker point needs exactly 6 coordinates")
        try:
            return PluckerPoint(tuple(
                self.field.from_hex(parse_element_text(p, self.field.degree))
                for p in parts), self.field)
        except ValueError as e:
            raise ConfigError(str(e)) from None

    def header(self) -> dict:
        return {"field": self.field.describe(), "lambda": self.lam.to_hex(),
                "seed": self.seed, "version": __version__}


def emit_json(obj, pretty: bool | None = None):
    if pretty is None:
        pretty = sys.stdout.isatty()
    if pretty:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


# ---------------------------------------------------------------------------
# Subcommands.

def cmd_map(cfg: RunConfig, args) -> int:
    x = cfg.parse_point(args.point)
    fn = verschiebung if args.which == "verschiebung" else absolute_frobenius
    img = fn(cfg.lam, x)
    emit_json({"command": "map", "which": args.which, **cfg.header(),
               "input": x.to_hex(),
               "output": img.to_hex() if img is not None else "BASE_LOCUS"})
    return 0


def cmd_preimage(cfg: RunConfig, args) -> int:
    a = cfg.parse_point(args.point)
    res = preimage(cfg.lam, a)
    emit_json({"command": "preimage", **cfg.header(),
               "target": a.to_hex(), "fiber": res.to_json_dict()})
    return 0


def cmd_orbit(cfg: RunConfig, args) -> int:
    x = cfg.parse_point(args.point)
    steps = cfg.max_steps if cfg.max_steps is not None else 1000
    rep = iterate_orbit(cfg.lam, x, steps, twist_lambda=cfg.twist_lambda)
    emit_json({"command": "orbit", **cfg.header(), **rep.to_json_dict()})
    return 0


def cmd_census(cfg: RunConfig, args) -> int:
    rep = census(cfg.lam, cfg.field, max_steps=cfg.max_steps,
                 workers=args.workers, twist_lambda=cfg.twist_lambda,
                 seed=cfg.seed, version=__version__)
    doc = rep.to_json_dict()
    if args.output:
        if cfg.fmt == "csv":
            with open(args.output, "w") as fh:
                fh.write("\n".join(rep.csv_lines()) + "\n")
        else:
            with open(args.output, "w") as fh:
                json.dump(doc, fh, indent=2, sort_keys=True)
                fh.write("\n")
        written = [args.output]
        if args.figures:
            from .report import figure_base, render_census_figures
            written += render_census_figures(rep, figure_base(args.output))
        emit_json({"command": "census", **cfg.header(),
                   "written": written, "aggregates": doc["aggregates"]})
    elif cfg.fmt == "csv":
        print("\n".join(rep.csv_lines()))
    else:
        emit_json(doc)
    return 0


def cmd_tower(cfg: RunConfig, args) -> int:
    x = cfg.parse_point(args.point)
    depth = cfg.depth if cfg.depth is not None else 1
    rep = preimage_tower(cfg.lam, x, depth)
    emit_json({"command": "tower", **cfg.header(), **rep.to_json_dict()})
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    results = verify_mod.run_all(seed=cfg.seed, samples=args.samples)
    if args.format == "json":
        emit_json({"command": "verify", **cfg.header(),
                   "checks": [{"name": r.name, "passed": r.passed,
                               "detail": r.detail} for r in results],
                   "all_passed": all(r.passed for r in results)})
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def cmd_witness(cfg: RunConfig, args) -> int:
    y = cfg.parse_point(args.point)
    g, res = surjectivity_witness(cfg.lam, y)
    ok = verify_fiber(cfg.lam, translate(g, y), res)
    emit_json({"command": "witness", **cfg.header(), "target": y.to_hex(),
               "translation": g_label(g), "verified": ok,
               "fiber": res.to_json_dict()})
    return 0 if ok else 1


def cmd_project(cfg: RunConfig, args) -> int:
    z = cfg.parse_plucker(args.point)
    img = odd_projection(z)
    emit_json({"command": "project", **cfg.header(),
               "input": ":".join(c.hex() for c in z.z),
               "grassmannian": grassmann_eval(z).hex(),
               "output": img.to_hex() if img is not None else "CENTER"})
    return 0


def cmd_omega(cfg: RunConfig, args) -> int:
    rep = classify_omega_frob_sample(
        cfg.lam, cfg.field, max_depth=cfg.max_steps or 64,
        samples=args.samples, seed=cfg.seed)
    emit_json({"command": "omega", **cfg.header(), **rep.to_json_dict()})
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key = value config file")
    common.add_argument("--field-degree", type=int, dest="field_degree")
    common.add_argument("--modulus", help="hex bitstring, bit i = coeff of t^i")
    common.add_argument("--lambda", dest="lam",
                        help="4 comma-separated nonzero elements (hex)")
    common.add_argument("--seed", type=int)
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--max-steps", type=int, dest="max_steps")
    common.add_argument("--depth", type=int)
    common.add_argument("--twist-lambda", action="store_true", dest="twist_lambda",
                        help="square the constants after every iteration step")

    ap = argparse.ArgumentParser(
        prog="frobp3",
        description="Quadric Frobenius dynamics on P^3 over binary fields")
    ap.add_argument("--version", action="version", version=f"frobp3 {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", parents=[common],
                       help="apply the quadric map to a point")
    p.add_argument("point")
    p.add_argument("--which", choices=("verschiebung", "frobenius"),
                   default="verschiebung")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("preimage", parents=[common],
                       help="classify and solve the fiber over a target")
    p.add_argument("point")
    p.set_defaults(func=cmd_preimage)

    p = sub.add_parser("orbit", parents=[common], help="iterate from a start point")
    p.add_argument("point")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("census", parents=[common],
                       help="classify every point of P^3 over the field")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", help="write the table here (figures go alongside)")
    fig = p.add_mutually_exclusive_group()
    fig.add_argument("--figures", dest="figures", action="store_true", default=True)
    fig.add_argument("--no-figures", dest="figures", action="store_false")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("tower", parents=[common],
                       help="iterated preimages with field-degree bookkeeping")
    p.add_argument("point")
    p.set_defaults(func=cmd_tower)

    p = sub.add_parser("verify", parents=[common],
                       help="run the exact identity suite; nonzero exit on failure")
    p.add_argument("--samples", type=int, default=25)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", parents=[common],
                       help="surjectivity witness through a coordinate translation")
    p.add_argument("point")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("project", parents=[common],
                       help="project a Pluecker point into {x00 = 0}")
    p.add_argument("point", help="6 colon-separated coordinates z1..z6")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("omega", parents=[common],
                       help="points whose orbits avoid the indeterminacy point")
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_omega)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig(args)
        return args.func(cfg, args)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

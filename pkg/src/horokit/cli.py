"""``horokit`` command line.

Exit codes: 0 success, 1 the ping-pong check ran and found violations,
2 invalid input or any library error.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Sequence

from . import core
from .config import RunConfig, SchemaViolation, emit_csv, parse_config, read_spec, write_csv, write_spec
from .core import HorokitError, Real
from .counterexample import (
    ROW_COLUMNS,
    CounterexampleConfig,
    Schedule,
    Variant,
    build,
    one_sidedness_certificate,
    row_report,
)
from .criteria import CENSUS_COLUMNS, census
from .flows import Frame, frame_dist, frame_from_endpoints, geodesic_flow, horocycle_flow
from .isometry import Mobius
from .lemma_lab import estimate_thin_constant, verify_flow_lemmas, verify_inner_triangle, verify_reciprocal
from .render import render_svg, scene_from_spec
from .schottky import enumerate_orbit

DOWN_AT_I = frame_from_endpoints(core.INFINITY, Real(0.0), core.Point(0.0, 1.0))


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="horokit", description="Horocycle flows on Schottky quotients.")
    ap.add_argument("--config", help="JSON run config; command-line flags override it")
    ap.add_argument("--tol", type=float, help="geometric tolerance (default from HOROKIT_TOL or 1e-9)")
    sub = ap.add_subparsers(dest="subcommand")

    def group_args(p):
        p.add_argument("--spec", help="group JSON; without it the counterexample group is built")
        p.add_argument("--variant", choices=("tangent", "opposite"))
        p.add_argument("--schedule", choices=("linear", "geometric"))
        p.add_argument("--alpha", type=float)
        p.add_argument("--n-max", type=int, dest="n_max")

    p = sub.add_parser("flow", help="push a frame by the geodesic and horocycle flows")
    p.add_argument("--matrix", type=float, nargs=4, metavar=("A", "B", "C", "D"))
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--out")

    p = sub.add_parser("schottky", help="check the ping-pong conditions of a group")
    group_args(p)
    p.add_argument("--out")
    p.add_argument("--spec-out", help="write the (built) group as JSON")

    p = sub.add_parser("orbit", help="orbit of i under reduced words")
    group_args(p)
    p.add_argument("--max-word-len", type=int, dest="max_word_len")
    p.add_argument("--out")

    p = sub.add_parser("census", help="orbit points in the horoball halves outside the cone")
    group_args(p)
    p.add_argument("--D", type=float)
    p.add_argument("--R", type=float)
    p.add_argument("--max-word-len", type=int, dest="max_word_len")
    p.add_argument("--out")

    p = sub.add_parser("counterexample", help="per-generator table of the one-sided construction")
    group_args(p)
    p.add_argument("--D", type=float)
    p.add_argument("--R", type=float)
    p.add_argument("--max-word-len", type=int, dest="max_word_len")
    p.add_argument("--out")

    p = sub.add_parser("lemmas", help="sampled constants of the triangle and flow comparisons")
    p.add_argument("--which", choices=("thin", "reciprocal", "inner", "flow"))
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--alpha0", type=float)
    p.add_argument("--k", type=float)
    p.add_argument("--out")

    p = sub.add_parser("render", help="SVG picture of a group")
    group_args(p)
    p.add_argument("--model", choices=("halfplane", "disk"))
    p.add_argument("--x-min", type=float, dest="x_min")
    p.add_argument("--x-max", type=float, dest="x_max")
    p.add_argument("--y-max", type=float, dest="y_max")
    p.add_argument("--orbit-len", type=int, dest="orbit_len")
    p.add_argument("--out")
    return ap


class _Options:
    """Flag value if given, else the config section, else the default."""

    def __init__(self, args: argparse.Namespace, cfg: RunConfig, section: str):
        self.args, self.cfg, self.section = args, cfg, cfg.sections.get(section, {})

    def get(self, name: str, default=None):
        v = getattr(self.args, name, None)
        if v is not None:
            return v
        if name in self.section and self.section[name] is not None:
            return self.section[name]
        return default


def _counterexample_config(args, cfg: RunConfig) -> CounterexampleConfig:
    kind = args.schedule or cfg.schedule.get("kind", "linear")
    alpha = args.alpha if args.alpha is not None else cfg.schedule.get("alpha", 2.0)
    if kind == "geometric":
        if not alpha > 1.0:
            raise SchemaViolation([("schedule.alpha", "must be > 1")])
        schedule = Schedule.geometric(alpha)
    elif kind == "custom":
        schedule = Schedule.custom(cfg.schedule["radii"])
    else:
        schedule = Schedule.linear()
    n_max = args.n_max if args.n_max is not None else cfg.n_max
    if n_max < 1:
        raise SchemaViolation([("n_max", "must be >= 1")])
    return CounterexampleConfig(Variant(args.variant or cfg.variant), schedule, n_max)


def _group(args, cfg: RunConfig):
    path = getattr(args, "spec", None) or cfg.spec_path
    if path:
        return read_spec(path, cfg.tolerance)
    if cfg.spec is not None:
        return cfg.spec
    return build(_counterexample_config(args, cfg))


def _out(args, cfg: RunConfig, key: str = "csv") -> str | None:
    return getattr(args, "out", None) or cfg.outputs.get(key)


def _cmd_flow(args, cfg) -> int:
    opt = _Options(args, cfg, "flow")
    m = Mobius.from_literal(args.matrix) if args.matrix else Mobius.identity()
    f = Frame(m)
    t, s = opt.get("t", 0.0), opt.get("s", 0.0)
    g = horocycle_flow(geodesic_flow(f, t), s)
    # the same frame through the commutation of the two flows
    h = geodesic_flow(horocycle_flow(f, s * math.exp(-t)), t)
    row = {"t": t, "s": s, "base_x": g.basepoint.x, "base_y": g.basepoint.y,
           "minus": _bp(g.minus), "plus": _bp(g.plus), "relation_gap": frame_dist(g, h)}
    _emit([row], _out(args, cfg), tuple(row))
    return 0


def _bp(x) -> str | float:
    return "inf" if x.is_infinity else x.x


def _emit(rows, path, columns):
    if path:
        emit_csv(rows, path, columns)
    else:
        write_csv(rows, sys.stdout, columns)


def _cmd_schottky(args, cfg) -> int:
    spec = _group(args, cfg)
    if args.spec_out:
        write_spec(spec, args.spec_out)
    rep = spec.certificate
    rows = [{"kind": v.kind, "pairs": " ".join(map(str, v.pairs)), "message": v.message} for v in rep.violations]
    path = _out(args, cfg)
    if path:
        emit_csv(rows, path, ("kind", "pairs", "message"))
    print("certificate: ping-pong holds" if rep.ok else f"{len(rep.violations)} violation(s)")
    for r in rows:
        print(f"  {r['kind']}: {r['message']}")
    return 0 if rep.ok else 1


def _cmd_orbit(args, cfg) -> int:
    opt = _Options(args, cfg, "orbit")
    spec = _group(args, cfg)
    L = opt.get("max_word_len", 2)
    rows = [{"word": str(op.word), "length": len(op.word), "x": op.point.x, "y": op.point.y}
            for op in enumerate_orbit(spec, L)]
    _emit(rows, _out(args, cfg), ("word", "length", "x", "y"))
    return 0


def _cmd_census(args, cfg) -> int:
    opt = _Options(args, cfg, "census")
    spec = _group(args, cfg)
    c = census(spec, DOWN_AT_I, opt.get("D", 1.0), opt.get("R", 1.0), opt.get("max_word_len", 2))
    _emit([c.row()], _out(args, cfg), CENSUS_COLUMNS)
    return 0


def _cmd_counterexample(args, cfg) -> int:
    opt = _Options(args, cfg, "counterexample")
    config = _counterexample_config(args, cfg)
    build(config)
    D, R, L = opt.get("D"), opt.get("R"), opt.get("max_word_len", 2)
    rows = []
    for n in range(1, config.n_max + 1):
        row = row_report(config, n).row()
        if D is not None:
            sub = CounterexampleConfig(config.variant, config.schedule, n)
            row.update(one_sidedness_certificate(sub, D, R if R is not None else 1.0, L).row())
        rows.append(row)
    columns = ROW_COLUMNS + (tuple(c for c in CENSUS_COLUMNS if c not in ROW_COLUMNS) if D is not None else ())
    _emit(rows, _out(args, cfg), columns)
    return 0


def _cmd_lemmas(args, cfg) -> int:
    opt = _Options(args, cfg, "lemmas")
    which = opt.get("which", "thin")
    n = opt.get("samples", 10_000)
    seed = args.seed if args.seed is not None else cfg.seed
    alpha0 = opt.get("alpha0", math.pi / 2)
    if which == "thin":
        e = estimate_thin_constant(alpha0, n, seed)
        row = {"alpha0": alpha0, "samples": n, "seed": seed, "estimate": e.estimate, **e.components}
    elif which == "reciprocal":
        k = opt.get("k", 1.0)
        r = verify_reciprocal(k, n, seed)
        row = {"k": k, "samples": n, "seed": seed, "alpha_hat": r.alpha_hat, "d_hat": r.d_hat,
               "C_hat": r.C_hat, "alpha_hat_far": r.alpha_hat_far, "accepted": r.accepted,
               "violations": len(r.violations)}
    elif which == "inner":
        e = verify_inner_triangle(n, seed)
        row = {"samples": n, "seed": seed, "delta_hat": e.estimate, **e.components}
    else:
        f = verify_flow_lemmas(n, seed, alpha0)
        row = dict(f.__dict__)
    _emit([row], _out(args, cfg), tuple(row))
    return 0


def _cmd_render(args, cfg) -> int:
    opt = _Options(args, cfg, "render")
    spec = _group(args, cfg)
    scene = scene_from_spec(spec, opt.get("orbit_len", 0),
                            x_range=(opt.get("x_min", -110.0), opt.get("x_max", 25.0)),
                            y_max=opt.get("y_max", 60.0))
    path = _out(args, cfg, "svg")
    if not path:
        raise SchemaViolation([("outputs.svg", "render needs --out")])
    render_svg(scene, path, opt.get("model", "halfplane"))
    return 0


_COMMANDS = {
    "flow": _cmd_flow, "schottky": _cmd_schottky, "orbit": _cmd_orbit, "census": _cmd_census,
    "counterexample": _cmd_counterexample, "lemmas": _cmd_lemmas, "render": _cmd_render,
}


def main(argv: Sequence[str] | None = None) -> int:
    ap = _parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        cfg = parse_config(args.config) if args.config else RunConfig()
        if args.tol is not None:
            cfg.tolerance = args.tol
        if cfg.tolerance is not None:
            core.DEFAULT_TOL = cfg.tolerance
        name = args.subcommand or cfg.subcommand
        if name is None:
            ap.print_usage(sys.stderr)
            return 2
        if args.subcommand is None:
            args = ap.parse_args([*argv, name])
        return _COMMANDS[name](args, cfg)
    except (HorokitError, FileNotFoundError, ValueError) as exc:
        print(f"horokit: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

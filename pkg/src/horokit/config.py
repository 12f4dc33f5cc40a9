"""JSON configs and group specs, validated by hand into precise field errors; CSV output."""

from __future__ import annotations

import csv
import json
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Any, Iterable, Mapping, Sequence

from .core import INFINITY, BoundaryPoint, HorokitError, IoError, Real
from .isometry import Mobius, pairing_isometry
from .schottky import Pair, PairedCircle, SchottkySpec

SUBCOMMANDS = ("flow", "schottky", "orbit", "census", "counterexample", "lemmas", "render")


class SchemaViolation(HorokitError):
    """Carries every (field, reason) found; ``field`` is the first one."""

    def __init__(self, errors: Sequence[tuple[str, str]]):
        self.errors = list(errors)
        self.field = self.errors[0][0]
        super().__init__("; ".join(f"{f}: {r}" for f, r in self.errors))


@dataclass
class RunConfig:
    subcommand: str | None = None
    spec_path: str | None = None
    spec: SchottkySpec | None = None
    outputs: dict[str, str] = field(default_factory=dict)
    tolerance: float | None = None
    seed: int = 0
    variant: str = "tangent"
    schedule: dict[str, Any] = field(default_factory=lambda: {"kind": "linear"})
    n_max: int = 10
    sections: dict[str, dict[str, Any]] = field(default_factory=dict)


class _Checker:
    def __init__(self):
        self.errors: list[tuple[str, str]] = []

    def fail(self, path: str, reason: str):
        self.errors.append((path, reason))

    def number(self, obj: Mapping, key: str, path: str, *, required=True, positive=False,
               nonnegative=False, default=None):
        if key not in obj:
            if required:
                self.fail(path, "missing")
            return default
        v = obj[key]
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            self.fail(path, "must be a finite number")
            return default
        if positive and not v > 0:
            self.fail(path, "must be positive")
        if nonnegative and v < 0:
            self.fail(path, "must be nonnegative")
        return float(v)

    def integer(self, obj: Mapping, key: str, path: str, *, minimum=None, default=None):
        if key not in obj:
            return default
        v = obj[key]
        if isinstance(v, bool) or not isinstance(v, int):
            self.fail(path, "must be an integer")
            return default
        if minimum is not None and v < minimum:
            self.fail(path, f"must be >= {minimum}")
        return v

    def choice(self, obj: Mapping, key: str, path: str, options: Sequence[str], default=None):
        if key not in obj:
            return default
        v = obj[key]
        if v not in options:
            self.fail(path, f"must be one of {', '.join(options)}")
            return default
        return v

    def raise_if_any(self):
        if self.errors:
            raise SchemaViolation(self.errors)


def _boundary(v, path: str, chk: _Checker) -> BoundaryPoint | None:
    if v in ("inf", "infinity", "Infinity"):
        return INFINITY
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        chk.fail(path, "must be a finite number or \"inf\"")
        return None
    return Real(v)


def _circle(obj, path: str, chk: _Checker) -> PairedCircle | None:
    if not isinstance(obj, Mapping):
        chk.fail(path, "must be an object with center and radius")
        return None
    before = len(chk.errors)
    c = chk.number(obj, "center", f"{path}.center")
    r = chk.number(obj, "radius", f"{path}.radius", positive=True)
    if len(chk.errors) > before:
        return None
    return PairedCircle(c, r)


def _spec(obj, path: str, chk: _Checker, tol: float | None = None) -> SchottkySpec | None:
    prefix = f"{path}." if path else ""
    pairs_obj = obj.get("pairs") if isinstance(obj, Mapping) else None
    if not isinstance(pairs_obj, list) or not pairs_obj:
        chk.fail(f"{prefix}pairs", "must be a nonempty list")
        return None
    pairs = []
    for i, item in enumerate(pairs_obj):
        p = f"{prefix}pairs[{i}]"
        if not isinstance(item, Mapping):
            chk.fail(p, "must be an object")
            continue
        plus = _circle(item.get("plus"), f"{p}.plus", chk)
        minus = _circle(item.get("minus"), f"{p}.minus", chk)
        has_matrix, has_derive = "matrix" in item, "derive" in item
        if has_matrix == has_derive:
            chk.fail(p, "give exactly one of matrix or derive")
            continue
        gamma = None
        if has_matrix:
            m = item["matrix"]
            ok = (isinstance(m, list) and len(m) == 4
                  and all(isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x) for x in m))
            if not ok:
                chk.fail(f"{p}.matrix", "must be four finite numbers, row-major")
                continue
            if not m[0] * m[3] - m[1] * m[2] > 0:
                chk.fail(f"{p}.matrix", "determinant must be positive")
                continue
            gamma = Mobius.from_literal(m)
        else:
            d = item["derive"]
            if not isinstance(d, Mapping):
                chk.fail(f"{p}.derive", "must be an object with p and q")
                continue
            a = _boundary(d.get("p"), f"{p}.derive.p", chk)
            b = _boundary(d.get("q"), f"{p}.derive.q", chk)
            if a is None or b is None or plus is None or minus is None:
                continue
            try:
                gamma = pairing_isometry(a, b, plus.geodesic, minus.geodesic, tol)
            except HorokitError as exc:
                chk.fail(f"{p}.derive", str(exc))
                continue
        if plus is not None and minus is not None and gamma is not None:
            pairs.append(Pair(plus, minus, gamma))
    if chk.errors:
        return None
    return SchottkySpec(tuple(pairs), tol)


def load_spec(obj: Any, tol: float | None = None) -> SchottkySpec:
    chk = _Checker()
    spec = _spec(obj, "", chk, tol)
    chk.raise_if_any()
    return spec


def read_spec(path: str | os.PathLike, tol: float | None = None) -> SchottkySpec:
    return load_spec(_read_json(path), tol)


def spec_to_json(spec: SchottkySpec) -> dict:
    return {"pairs": [
        {"plus": {"center": p.plus.center, "radius": p.plus.radius},
         "minus": {"center": p.minus.center, "radius": p.minus.radius},
         "matrix": list(p.gamma.as_tuple())}
        for p in spec.pairs
    ]}


def write_spec(spec: SchottkySpec, path: str | os.PathLike):
    try:
        Path(path).write_text(json.dumps(spec_to_json(spec), indent=2) + "\n")
    except OSError as exc:
        raise IoError(str(exc)) from exc


def _read_json(path) -> Any:
    # FileNotFoundError propagates as is
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation([("<file>", f"not valid JSON: {exc}")]) from None


_SECTIONS = {
    "census": {"D": "nonneg", "R": "nonneg", "max_word_len": "int"},
    "counterexample": {"D": "nonneg", "R": "nonneg", "max_word_len": "int"},
    "orbit": {"max_word_len": "int"},
    "lemmas": {"which": ("thin", "reciprocal", "inner", "flow"), "samples": "posint", "alpha0": "pos", "k": "pos"},
    "render": {"model": ("halfplane", "disk"), "x_min": "num", "x_max": "num", "y_max": "pos", "orbit_len": "int"},
    "flow": {"t": "num", "s": "num"},
}


def parse_config(path: str | os.PathLike) -> RunConfig:
    """Read and validate a JSON run config; all problems are reported together."""
    obj = _read_json(path)
    chk = _Checker()
    if not isinstance(obj, Mapping):
        raise SchemaViolation([("<root>", "must be a JSON object")])
    cfg = RunConfig()
    cfg.subcommand = chk.choice(obj, "subcommand", "subcommand", SUBCOMMANDS)
    cfg.tolerance = chk.number(obj, "tolerance", "tolerance", required=False, positive=True)
    cfg.seed = chk.integer(obj, "seed", "seed", minimum=0, default=0)
    cfg.variant = chk.choice(obj, "variant", "variant", ("tangent", "opposite"), default="tangent")
    cfg.n_max = chk.integer(obj, "n_max", "n_max", minimum=1, default=10)
    sched = obj.get("schedule", {"kind": "linear"})
    if not isinstance(sched, Mapping):
        chk.fail("schedule", "must be an object")
    else:
        kind = chk.choice(sched, "kind", "schedule.kind", ("linear", "geometric", "custom"), default="linear")
        cfg.schedule = {"kind": kind}
        if kind == "geometric":
            alpha = chk.number(sched, "alpha", "schedule.alpha", default=2.0, required=False)
            if alpha is not None and not alpha > 1.0:
                chk.fail("schedule.alpha", "must be > 1")
            cfg.schedule["alpha"] = alpha if alpha is not None else 2.0
        if kind == "custom":
            radii = sched.get("radii")
            if not isinstance(radii, list) or not radii:
                chk.fail("schedule.radii", "must be a nonempty list")
            else:
                for i, r in enumerate(radii):
                    chk.number({"r": r}, "r", f"schedule.radii[{i}]", positive=True)
                cfg.schedule["radii"] = radii
    if "pairs" in obj:
        cfg.spec = _spec(obj, "", chk, cfg.tolerance)
    if "spec_path" in obj:
        if not isinstance(obj["spec_path"], str):
            chk.fail("spec_path", "must be a string")
        else:
            cfg.spec_path = obj["spec_path"]
    outs = obj.get("outputs", {})
    if not isinstance(outs, Mapping) or not all(isinstance(v, str) for v in outs.values()):
        chk.fail("outputs", "must map names to path strings")
    else:
        cfg.outputs = dict(outs)
        paths = list(outs.values()) + ([cfg.spec_path] if cfg.spec_path else [])
        if len(set(map(os.path.normpath, paths))) != len(paths):
            chk.fail("outputs", "input and output paths must be distinct")
    for name, fields in _SECTIONS.items():
        sec = obj.get(name)
        if sec is None:
            continue
        if not isinstance(sec, Mapping):
            chk.fail(name, "must be an object")
            continue
        vals = {}
        for key, kind in fields.items():
            p = f"{name}.{key}"
            if key not in sec:
                continue
            if isinstance(kind, tuple):
                vals[key] = chk.choice(sec, key, p, kind)
            elif kind == "int":
                vals[key] = chk.integer(sec, key, p, minimum=0)
            elif kind == "posint":
                vals[key] = chk.integer(sec, key, p, minimum=1)
            else:
                vals[key] = chk.number(sec, key, p, positive=kind == "pos", nonnegative=kind == "nonneg")
        unknown = set(sec) - set(fields)
        for key in sorted(unknown):
            chk.fail(f"{name}.{key}", "unknown field")
        cfg.sections[name] = vals
    chk.raise_if_any()
    return cfg


def _cell(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def write_csv(rows: Iterable[Mapping[str, Any]], fh: IO[str], columns: Sequence[str]):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_cell(row[c]) for c in columns])


def emit_csv(rows: Iterable[Mapping[str, Any]], path: str | os.PathLike, columns: Sequence[str]):
    """Write rows under a fixed header: 12 significant digits, '\\n' line endings."""
    try:
        with open(path, "w", newline="") as fh:
            write_csv(rows, fh, columns)
    except OSError as exc:
        raise IoError(str(exc)) from exc

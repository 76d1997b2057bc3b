"""Command-line front end.  Every subcommand emits one JSON report."""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from . import cardinal
from .cover import apply_graduation, measure_size
from .dimension import fit_dimension, geometric_sweep
from .errors import SetSizeError
from .expr import evaluate, render_value, value_kind
from .graduation import ONE, MValue, Ordering, m_compare, parse_mvalue
from .pair import LIMIT_ZERO, log_inverse_scale, make_scale
from .properties import run_property_suite
from .sets import PRESETS, describe, model_json, preset, read_points_csv

SCHEMA_VERSION = "1.0"

log = logging.getLogger("setsize")


@dataclass
class RunConfig:
    command: str
    inputs: List[str] = field(default_factory=list)
    scales: List[Fraction] = field(default_factory=list)
    sweep: Optional[tuple] = None
    graduation: MValue = ONE
    preset: Optional[str] = None
    out: Optional[str] = None
    seed: int = 42
    workers: int = 1
    trials: int = 1000
    n: int = 4
    expression: str = ""
    delimiter: str = ","
    header: Optional[bool] = None

    def __post_init__(self):
        if self.sweep is not None:
            r0, s, k = self.sweep
            if r0 <= 0:
                raise ValueError("sweep start must be positive")
            if not 0 < s < 1:
                raise ValueError("sweep factor must lie strictly between 0 and 1")
            if k < 1:
                raise ValueError("sweep needs at least one step")
        if any(r is LIMIT_ZERO for r in self.scales):
            raise ValueError("the limit scale 0+ cannot be measured")
        if m_compare(self.graduation, ONE) not in (Ordering.EQUAL, Ordering.GREATER):
            raise ValueError(f"graduation must be at least 1, got {self.graduation}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")
        if self.preset is not None and self.preset not in PRESETS:
            raise ValueError(f"unknown preset {self.preset!r}")

    def all_scales(self) -> list:
        scales = list(self.scales)
        if self.sweep is not None:
            scales += geometric_sweep(*self.sweep)
        return scales


def parse_sweep(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"sweep must be r0:s:k, got {text!r}")
    try:
        return Fraction(parts[0]), Fraction(parts[1]), int(parts[2])
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad sweep {text!r}") from None


def _scale_arg(text: str):
    try:
        return make_scale(text)
    except (SetSizeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _mvalue_arg(text: str):
    try:
        return parse_mvalue(text)
    except SetSizeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def load_model(cfg: RunConfig, index: int = 0):
    if cfg.preset is not None:
        return preset(cfg.preset)
    if len(cfg.inputs) <= index:
        raise ValueError("need an input CSV file or --preset")
    return read_points_csv(cfg.inputs[index], cfg.delimiter, cfg.header)


def _input_json(model) -> dict:
    info = model_json(model)
    info["describe"] = describe(model)
    return info


def _require_scales(cfg: RunConfig) -> list:
    scales = cfg.all_scales()
    if not scales:
        raise ValueError("give --scale or --sweep")
    return scales


def measurements(model, scales, graduation: MValue = ONE, workers: int = 1) -> list:
    rows = []
    for r in scales:
        pair = measure_size(model, r, workers)
        n = apply_graduation(pair.count, graduation)
        rows.append({"scale": str(r), "count": n.value, "raw_count": pair.count.value,
                     "pair": f"({r}, {n})"})
    return rows


def cmd_measure(cfg: RunConfig) -> dict:
    model = load_model(cfg)
    rows = measurements(model, _require_scales(cfg), cfg.graduation, cfg.workers)
    return {"command": "measure", "input": _input_json(model), "graduation": str(cfg.graduation),
            "measurements": rows}


def cmd_dim(cfg: RunConfig) -> dict:
    model = load_model(cfg)
    pairs = [measure_size(model, r, cfg.workers) for r in _require_scales(cfg)]
    fit = fit_dimension(pairs)
    table = []
    for i, (p, d) in enumerate(zip(pairs, fit.per_scale())):
        n = p.count.value
        table.append({"scale": str(p.scale), "count": n, "ln_inv_scale": log_inverse_scale(p.scale),
                      "ln_count": _ln(n), "dimension": d, "used": i in fit.used})
    return {"command": "dim", "input": _input_json(model), "table": table,
            "fit": {"slope": fit.slope, "intercept": fit.intercept, "r_squared": fit.r_squared,
                    "points": len(fit.used)},
            "dimension": fit.slope}


def _ln(n: int):
    return math.log(n) if n > 0 else None


def cmd_compare(cfg: RunConfig) -> dict:
    if len(cfg.inputs) != 2:
        raise ValueError("compare needs exactly two input files")
    a = read_points_csv(cfg.inputs[0], cfg.delimiter, cfg.header)
    b = read_points_csv(cfg.inputs[1], cfg.delimiter, cfg.header)
    equal = cardinal.equal_cardinality(a, b)
    per_scale = []
    for r in cfg.all_scales():
        na = measure_size(a, r, cfg.workers).count.value
        nb = measure_size(b, r, cfg.workers).count.value
        per_scale.append({"scale": str(r), "counts": [na, nb]})
    return {"command": "compare", "inputs": [_input_json(a), _input_json(b)],
            "counts": [len(a), len(b)], "equal": equal, "per_scale": per_scale}


def cmd_algebra(cfg: RunConfig) -> dict:
    value = evaluate(cfg.expression)
    report = {"command": "algebra", "expression": cfg.expression, "kind": value_kind(value),
              "result": render_value(value)}
    if value_kind(value) == "pair":
        report["canonical"] = str(value)
    return report


def cmd_infinity(cfg: RunConfig) -> dict:
    seq = cardinal.gch_dimension_sequence(cfg.n)
    towers = [str(cardinal.omega_tower(k)) for k in range(cfg.n)]
    return {"command": "infinity", "status": cardinal.HYPOTHESIS, "n": cfg.n,
            "counts": towers, "sequence": [str(d) for d in seq],
            "rewrites": [cardinal.ch_rewrite_chain(cardinal.omega_tower(k)) for k in range(cfg.n)],
            "ch": cardinal.ch_equation().to_json()}


def cmd_check(cfg: RunConfig) -> dict:
    reports = run_property_suite(cfg.trials, cfg.seed)
    return {"command": "check", "seed": cfg.seed, "trials": cfg.trials,
            "properties": [r.to_json() for r in reports],
            "passed": all(r.passed for r in reports)}


COMMANDS = {
    "measure": cmd_measure,
    "dim": cmd_dim,
    "compare": cmd_compare,
    "algebra": cmd_algebra,
    "infinity": cmd_infinity,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="setsize", description="Measure set sizes as (scale, count) pairs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs="*"):
        if inputs:
            p.add_argument("inputs", nargs=inputs, metavar="CSV", help="point file(s), one point per row")
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--delimiter", default=",")
        p.add_argument("--header", action="store_true", default=None, help="first row is a header")
        p.add_argument("--workers", type=int, default=1)

    def scaled(p):
        p.add_argument("--scale", type=_scale_arg, action="append", default=[], metavar="P/Q")
        p.add_argument("--sweep", type=parse_sweep, metavar="R0:S:K", help="scales r0*s^j, j = 0..k-1")
        p.add_argument("--preset", choices=sorted(PRESETS))

    p = sub.add_parser("measure", help="size pair at each scale")
    common(p, "?")
    scaled(p)
    p.add_argument("--graduation", type=_mvalue_arg, default=ONE, metavar="M")

    p = sub.add_parser("dim", help="box-counting dimension over a sweep")
    common(p, "?")
    scaled(p)

    p = sub.add_parser("compare", help="graduation-1 comparison of two point files")
    common(p, 2)
    p.add_argument("--scale", type=_scale_arg, action="append", default=[], metavar="P/Q")

    p = sub.add_parser("algebra", help="evaluate a pair expression")
    p.add_argument("expression")
    p.add_argument("--out")

    p = sub.add_parser("infinity", help="symbolic dimensions of the tower of infinities")
    p.add_argument("-n", type=int, default=4)
    p.add_argument("--out")

    p = sub.add_parser("check", help="run the outer-measure property suite")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = vars(args).copy()
    fields.pop("verbose", None)
    if "inputs" in fields and isinstance(fields["inputs"], str):
        fields["inputs"] = [fields["inputs"]]
    elif fields.get("inputs") is None:
        fields["inputs"] = []
    if "scale" in fields:
        fields["scales"] = fields.pop("scale")
    return RunConfig(**fields)


def render_report(report: dict) -> str:
    report = dict(report, schema_version=SCHEMA_VERSION)
    # exact counts of deep IFS levels can exceed the default int-to-str digit cap
    get_cap = getattr(sys, "get_int_max_str_digits", None)
    cap = get_cap() if get_cap else None
    if cap:
        sys.set_int_max_str_digits(0)
    try:
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    finally:
        if cap:
            sys.set_int_max_str_digits(cap)


def run(cfg: RunConfig) -> dict:
    return COMMANDS[cfg.command](cfg)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        report = run(cfg)
    except (SetSizeError, ValueError, OSError) as exc:
        print(f"setsize {args.command}: {exc}", file=sys.stderr)
        return 2
    text = render_report(report)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.command == "check" and not report["passed"]:
        return 1
    return 0

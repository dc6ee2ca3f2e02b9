"""Strict JSON run configuration.

A config file declares named Young functions, measure models, space specs,
step functions, and verification triples.  Parsing is strict: unknown keys
fail fast with their full path, numbers are plain JSON decimals, and the
string "inf" is the sole non-finite literal (accepted only where an
extended value makes sense).  Space specs mirror the library variants:

    {"kind": "Lp", "p": 2}
    {"kind": "linf"}
    {"kind": "l1caplinf"}
    {"kind": "lorentz", "weight": [1, 0.5, 0.25]}
    {"kind": "convexification", "base": {...}, "p": 2}
    {"kind": "cl", "base": {...}, "young": "F2" | {...}}

Young function kinds are exactly "power", "truncated_power",
"exp_minus_one", and "piecewise_linear".
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from .measure import MeasureModel, StepFunction, counting, half_line, unit_interval
from .spaces import CL, Convexification, L1capLinf, Linf, Lorentz, Lp, SpaceSpec
from .young import (ExpMinusOne, PiecewiseLinear, PowerFunction, TruncatedPower,
                    YoungFunction)


class ConfigError(ValueError):
    """Invalid configuration; the message carries the offending path."""


def _fail(path: str, msg: str):
    raise ConfigError(f"{path}: {msg}")


def _check_keys(obj: dict, path: str, required: tuple, optional: tuple = ()):
    if not isinstance(obj, dict):
        _fail(path, f"expected an object, got {type(obj).__name__}")
    allowed = set(required) | set(optional)
    for key in obj:
        if key not in allowed:
            _fail(f"{path}.{key}", "unknown key")
    for key in required:
        if key not in obj:
            _fail(path, f"missing required key {key!r}")


def _number(x, path: str, allow_inf: bool = False) -> float:
    if isinstance(x, bool):
        _fail(path, "expected a number, got a boolean")
    if isinstance(x, (int, float)):
        v = float(x)
        if math.isnan(v):
            _fail(path, "nan is not a valid number")
        if math.isinf(v) and not allow_inf:
            _fail(path, "infinite value not allowed here")
        return v
    if isinstance(x, str):
        if x == "inf" and allow_inf:
            return math.inf
        hint = " or the literal 'inf'" if allow_inf else ""
        _fail(path, f"expected a number{hint}, got {x!r}")
    _fail(path, f"expected a number, got {type(x).__name__}")


def _integer(x, path: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        _fail(path, "expected an integer")
    return x


# -- young functions ---------------------------------------------------------


def parse_young(obj, path: str) -> YoungFunction:
    _check_keys(obj, path, ("kind",), ("p", "b", "knots"))
    kind = obj["kind"]
    if kind == "power":
        _check_keys(obj, path, ("kind", "p"))
        return PowerFunction(_number(obj["p"], f"{path}.p"))
    if kind == "truncated_power":
        _check_keys(obj, path, ("kind", "p", "b"))
        return TruncatedPower(_number(obj["p"], f"{path}.p"),
                              _number(obj["b"], f"{path}.b"))
    if kind == "exp_minus_one":
        _check_keys(obj, path, ("kind",))
        return ExpMinusOne()
    if kind == "piecewise_linear":
        _check_keys(obj, path, ("kind", "knots"), ("b",))
        knots = obj["knots"]
        if not isinstance(knots, list):
            _fail(f"{path}.knots", "expected a list of [t, y] pairs")
        pts = []
        for i, kn in enumerate(knots):
            if not (isinstance(kn, list) and len(kn) == 2):
                _fail(f"{path}.knots[{i}]", "expected a [t, y] pair")
            pts.append((_number(kn[0], f"{path}.knots[{i}][0]"),
                        _number(kn[1], f"{path}.knots[{i}][1]")))
        b = _number(obj["b"], f"{path}.b") if "b" in obj else None
        try:
            return PiecewiseLinear(pts, b=b)
        except ValueError as e:
            _fail(path, str(e))
    _fail(f"{path}.kind", f"unknown Young function kind {kind!r}")


# -- space specs --------------------------------------------------------------


def parse_space(obj, path: str, young_by_name: dict) -> SpaceSpec:
    _check_keys(obj, path, ("kind",), ("p", "weight", "base", "young"))
    kind = obj["kind"]
    if kind == "Lp":
        _check_keys(obj, path, ("kind", "p"))
        return Lp(_number(obj["p"], f"{path}.p"))
    if kind == "linf":
        _check_keys(obj, path, ("kind",))
        return Linf()
    if kind == "l1caplinf":
        _check_keys(obj, path, ("kind",))
        return L1capLinf()
    if kind == "lorentz":
        _check_keys(obj, path, ("kind", "weight"))
        w = obj["weight"]
        if not isinstance(w, list):
            _fail(f"{path}.weight", "expected a list of numbers")
        return Lorentz([_number(x, f"{path}.weight[{i}]") for i, x in enumerate(w)])
    if kind == "convexification":
        _check_keys(obj, path, ("kind", "base", "p"))
        base = parse_space(obj["base"], f"{path}.base", young_by_name)
        return Convexification(base, _number(obj["p"], f"{path}.p"))
    if kind == "cl":
        _check_keys(obj, path, ("kind", "base", "young"))
        base = parse_space(obj["base"], f"{path}.base", young_by_name)
        y = obj["young"]
        if isinstance(y, str):
            if y not in young_by_name:
                _fail(f"{path}.young", f"unresolved Young function name {y!r}")
            return CL(base, young_by_name[y])
        return CL(base, parse_young(y, f"{path}.young"))
    _fail(f"{path}.kind", f"unknown space kind {kind!r}")


# -- models -------------------------------------------------------------------


def parse_model(obj, path: str) -> MeasureModel:
    _check_keys(obj, path, ("kind",), ("cells", "atoms", "horizon"))
    kind = obj["kind"]
    if kind == "unit_interval":
        _check_keys(obj, path, ("kind", "cells"))
        return unit_interval(_integer(obj["cells"], f"{path}.cells"))
    if kind == "half_line":
        _check_keys(obj, path, ("kind", "cells", "horizon"))
        return half_line(_number(obj["horizon"], f"{path}.horizon"),
                         _integer(obj["cells"], f"{path}.cells"))
    if kind == "counting":
        _check_keys(obj, path, ("kind", "atoms"))
        return counting(_integer(obj["atoms"], f"{path}.atoms"))
    _fail(f"{path}.kind", f"unknown model kind {kind!r}")


# -- run configuration ---------------------------------------------------------


@dataclass
class TripleSpec:
    space: str
    model: str
    F: str
    G: str
    probes: int = 24
    c_max: float = 8.0
    c_split: float = 4.0


@dataclass
class RunConfig:
    young: dict = field(default_factory=dict)
    spaces: dict = field(default_factory=dict)
    models: dict = field(default_factory=dict)
    functions: dict = field(default_factory=dict)   # name -> StepFunction
    triples: dict = field(default_factory=dict)     # name -> TripleSpec
    seed: int = 0
    optimizer: dict = field(default_factory=dict)

    def require(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            raise ConfigError(f"unresolved {section[:-1]} name {name!r}")
        return table[name]


_TOP_KEYS = ("young", "spaces", "models", "functions", "triples", "seed",
             "optimizer")
_OPT_KEYS = ("restarts", "iterations", "method", "grid_resolution",
             "sorted_ansatz")


def parse_config(data: dict, base_dir: Optional[Path] = None) -> RunConfig:
    _check_keys(data, "config", (), _TOP_KEYS)
    cfg = RunConfig()
    if "seed" in data:
        cfg.seed = _integer(data["seed"], "config.seed")

    for name, obj in data.get("young", {}).items():
        cfg.young[name] = parse_young(obj, f"config.young.{name}")
    for name, obj in data.get("models", {}).items():
        cfg.models[name] = parse_model(obj, f"config.models.{name}")
    for name, obj in data.get("spaces", {}).items():
        cfg.spaces[name] = parse_space(obj, f"config.spaces.{name}", cfg.young)

    for name, obj in data.get("functions", {}).items():
        path = f"config.functions.{name}"
        _check_keys(obj, path, ("model",), ("values", "csv"))
        model_name = obj["model"]
        if model_name not in cfg.models:
            _fail(f"{path}.model", f"unresolved model name {model_name!r}")
        model = cfg.models[model_name]
        if ("values" in obj) == ("csv" in obj):
            _fail(path, "exactly one of 'values' or 'csv' is required")
        if "values" in obj:
            raw = obj["values"]
            if not isinstance(raw, list):
                _fail(f"{path}.values", "expected a list of numbers")
            vals = [_number(x, f"{path}.values[{i}]") for i, x in enumerate(raw)]
        else:
            csv_path = Path(obj["csv"])
            if base_dir is not None and not csv_path.is_absolute():
                csv_path = base_dir / csv_path
            try:
                vals = np.loadtxt(csv_path, dtype=float, ndmin=1)
            except OSError as e:
                _fail(f"{path}.csv", f"cannot read {csv_path}: {e}")
        try:
            cfg.functions[name] = StepFunction(model, vals)
        except ValueError as e:
            _fail(path, str(e))

    for name, obj in data.get("triples", {}).items():
        path = f"config.triples.{name}"
        _check_keys(obj, path, ("space", "model", "F", "G"),
                    ("probes", "c_max", "c_split"))
        for key, section in (("space", "spaces"), ("model", "models"),
                             ("F", "young"), ("G", "young")):
            if obj[key] not in getattr(cfg, section):
                _fail(f"{path}.{key}", f"unresolved name {obj[key]!r}")
        cfg.triples[name] = TripleSpec(
            space=obj["space"], model=obj["model"], F=obj["F"], G=obj["G"],
            probes=_integer(obj.get("probes", 24), f"{path}.probes"),
            c_max=_number(obj.get("c_max", 8.0), f"{path}.c_max"),
            c_split=_number(obj.get("c_split", 4.0), f"{path}.c_split"),
        )

    if "optimizer" in data:
        opt = data["optimizer"]
        _check_keys(opt, "config.optimizer", (), _OPT_KEYS)
        for key in ("restarts", "iterations", "grid_resolution"):
            if key in opt:
                cfg.optimizer[key] = _integer(opt[key], f"config.optimizer.{key}")
        if "method" in opt:
            if opt["method"] not in ("coordinate_ascent", "grid_oracle"):
                _fail("config.optimizer.method",
                      f"unknown method {opt['method']!r}")
            cfg.optimizer["method"] = opt["method"]
        if "sorted_ansatz" in opt:
            if not isinstance(opt["sorted_ansatz"], bool):
                _fail("config.optimizer.sorted_ansatz", "expected a boolean")
            cfg.optimizer["sorted_ansatz"] = opt["sorted_ansatz"]
    return cfg


def load_config(path) -> RunConfig:
    p = Path(path)
    try:
        data = json.loads(p.read_text())
    except OSError as e:
        raise ConfigError(f"cannot read config {p}: {e}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"config {p} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise ConfigError("config root must be a JSON object")
    return parse_config(data, base_dir=p.parent)

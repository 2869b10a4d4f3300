"""Seeded experiment sweeps comparing the decomposers."""

from __future__ import annotations

import copy
import csv
import hashlib
import io
import random
import time
from collections import defaultdict

import jsonschema

from .generate import grid_graph, path_faults, random_faults, random_instance
from .greedy import baseline_decompose, greedy_decompose, greedy_decompose_weighted
from .instance import ReplacementInstance
from .io import format_faults, format_graph, parse_faults, parse_graph, read_text
from .oracle import FaultOracle, verify_decomposition
from .poly import PolyDecomposer
from .graph import shortest_path

ALGORITHMS = ("greedy", "poly", "baseline")

DEFAULT_CONFIG = {
    "seed": 0,
    "trials": 200,
    "graph": {"model": "random", "n": [8, 40], "p": 0.1},
    "weights": None,
    "faults": {"model": "path", "count": [1, 8]},
    "k": [1, 2, 4],
    "algorithms": "all",
    "linear_scan": False,
    "record_time": False,
}

_range = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 2, "maxItems": 2}

CONFIG_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "seed": {"type": "integer"},
        "trials": {"type": "integer", "minimum": 0},
        "graph": {
            "oneOf": [
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["model", "n", "p"],
                    "properties": {
                        "model": {"const": "random"},
                        "n": {"oneOf": [{"type": "integer", "minimum": 2}, _range]},
                        "p": {"type": "number", "minimum": 0, "maximum": 1},
                    },
                },
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["model", "rows", "cols"],
                    "properties": {
                        "model": {"const": "grid"},
                        "rows": {"type": "integer", "minimum": 1},
                        "cols": {"type": "integer", "minimum": 1},
                    },
                },
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["model", "path", "s", "t"],
                    "properties": {
                        "model": {"const": "file"},
                        "path": {"type": "string"},
                        "s": {"type": "integer", "minimum": 0},
                        "t": {"type": "integer", "minimum": 0},
                    },
                },
            ]
        },
        "weights": {"oneOf": [{"type": "null"}, _range]},
        "faults": {
            "oneOf": [
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["model", "count"],
                    "properties": {
                        "model": {"enum": ["random", "path"]},
                        "count": {"oneOf": [{"type": "integer", "minimum": 1}, _range]},
                    },
                },
                {
                    "type": "object",
                    "additionalProperties": False,
                    "required": ["model", "path"],
                    "properties": {"model": {"const": "file"}, "path": {"type": "string"}},
                },
            ]
        },
        "k": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
        "algorithms": {
            "oneOf": [
                {"const": "all"},
                {"type": "array", "items": {"enum": list(ALGORITHMS)}, "minItems": 1, "uniqueItems": True},
            ]
        },
        "linear_scan": {"type": "boolean"},
        "record_time": {"type": "boolean"},
    },
}


class ConfigError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


def load_config(obj: dict) -> dict:
    """Merge ``obj`` over the defaults and validate; raises ConfigError listing every problem."""
    if not isinstance(obj, dict):
        raise ConfigError(["$: config must be a JSON object"])
    validator = jsonschema.Draft202012Validator(CONFIG_SCHEMA)
    errors = sorted(validator.iter_errors(obj), key=lambda e: list(e.absolute_path))
    if errors:
        raise ConfigError([f"{e.json_path}: {e.message}" for e in errors])
    cfg = copy.deepcopy(DEFAULT_CONFIG)
    cfg.update(obj)
    for key in ("n", "count"):
        for section in ("graph", "faults"):
            val = cfg[section].get(key)
            if isinstance(val, list) and val[0] > val[1]:
                raise ConfigError([f"$.{section}.{key}: lower end exceeds upper end"])
    return cfg


def _pick(rng: random.Random, val) -> int:
    return rng.randint(val[0], val[1]) if isinstance(val, list) else val


def _weights(cfg):
    w = cfg["weights"]
    return tuple(w) if w else None


def make_instance(cfg: dict, trial: int) -> ReplacementInstance:
    rng = random.Random(f"{cfg['seed']}:{trial}")
    gcfg, fcfg = cfg["graph"], cfg["faults"]
    weights = _weights(cfg)
    if gcfg["model"] == "random" and fcfg["model"] != "file":
        return random_instance(rng, _pick(rng, gcfg["n"]), gcfg["p"], _pick(rng, fcfg["count"]), fcfg["model"], weights)
    if gcfg["model"] == "grid":
        g = grid_graph(rng, gcfg["rows"], gcfg["cols"], weights)
        s, t = 0, g.n - 1
    elif gcfg["model"] == "file":
        g = parse_graph(read_text(gcfg["path"]))
        s, t = gcfg["s"], gcfg["t"]
    else:
        raise ConfigError(["$.faults: a fault file needs a file graph"])
    if fcfg["model"] == "file":
        F = parse_faults(read_text(fcfg["path"]), g)
    else:
        pick = path_faults if fcfg["model"] == "path" else random_faults
        F = pick(rng, g, s, t, _pick(rng, fcfg["count"]))
    return ReplacementInstance(g, F, s, t, shortest_path(g, F, s, t))


def digest(inst: ReplacementInstance) -> str:
    h = hashlib.sha256()
    h.update(format_graph(inst.g).encode())
    h.update(format_faults(inst.faults).encode())
    h.update(f"{inst.s} {inst.t}\n".encode())
    return h.hexdigest()[:16]


def run_trial(cfg: dict, trial: int) -> list[dict]:
    inst = make_instance(cfg, trial)
    algos = ALGORITHMS if cfg["algorithms"] == "all" else tuple(cfg["algorithms"])
    interleaved = inst.g.weighted
    oracle = FaultOracle(inst)
    tag = digest(inst)
    records = []
    for k in cfg["k"]:
        if k > inst.f:
            continue
        budget = inst.f // k
        for algo in algos:
            if algo == "baseline" and interleaved:
                continue
            start = time.perf_counter()
            check_budget = budget
            if algo == "greedy":
                d = (greedy_decompose_weighted if interleaved else greedy_decompose)(inst, budget, oracle)
                bound = 8 * k + 1
            elif algo == "poly":
                dec = PolyDecomposer(inst)
                d = (dec.decompose_weighted if interleaved else dec.decompose)(k, cfg["linear_scan"])
                bound = 8 * k + 1
            else:
                d = baseline_decompose(inst, k)
                check_budget = d.budget
                bound = k + 1
            elapsed = time.perf_counter() - start
            report = verify_decomposition(inst, d, check_budget)
            rec = {
                "trial": trial,
                "digest": tag,
                "n": inst.g.n,
                "f": inst.f,
                "length": inst.length,
                "algorithm": algo,
                "k": k,
                "budget": check_budget,
                "q": d.q,
                "bound": bound,
                "max_fault": d.max_fault,
                "verdict": "pass" if report.passed and d.q <= bound else "fail",
                "boundaries": list(d.boundaries),
            }
            if cfg["record_time"]:
                rec["wall_ms"] = round(elapsed * 1000, 3)
            records.append(rec)
    return records


def summarize(records: list[dict]) -> dict:
    by = defaultdict(list)
    for r in records:
        by[(r["algorithm"], r["k"])].append(r)
    groups = []
    for (algo, k), rs in sorted(by.items()):
        groups.append(
            {
                "algorithm": algo,
                "k": k,
                "runs": len(rs),
                "max_q": max(r["q"] for r in rs),
                "bound": rs[0]["bound"],
                "max_margin": round(max(r["q"] / r["bound"] for r in rs), 6),
                "failures": sum(r["verdict"] != "pass" for r in rs),
            }
        )
    pairs = defaultdict(dict)
    for r in records:
        if r["algorithm"] in ("greedy", "poly"):
            pairs[(r["trial"], r["k"])][r["algorithm"]] = r
    both = [p for p in pairs.values() if len(p) == 2]
    comparison = {
        "pairs": len(both),
        "same_boundaries": sum(p["greedy"]["boundaries"] == p["poly"]["boundaries"] for p in both),
        "poly_more_subpaths": sum(p["poly"]["q"] > p["greedy"]["q"] for p in both),
        "poly_fewer_subpaths": sum(p["poly"]["q"] < p["greedy"]["q"] for p in both),
    }
    return {
        "records": len(records),
        "failures": sum(r["verdict"] != "pass" for r in records),
        "groups": groups,
        "greedy_vs_poly": comparison,
    }


def run_experiment(cfg: dict) -> dict:
    records = []
    for trial in range(cfg["trials"]):
        records.extend(run_trial(cfg, trial))
    records.sort(key=lambda r: (r["trial"], r["k"], ALGORITHMS.index(r["algorithm"])))
    return {"config": cfg, "summary": summarize(records), "records": records}


CSV_FIELDS = ["trial", "digest", "n", "f", "length", "algorithm", "k", "budget", "q", "bound", "max_fault", "verdict"]


def to_csv(report: dict) -> str:
    fields = CSV_FIELDS + (["wall_ms"] if report["config"]["record_time"] else [])
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(report["records"])
    return buf.getvalue()

"""Command-line entry point: ``faultdecomp {decompose,verify,lowerbound,experiment,gen}``.

Exit codes: 0 when the verdict passes, 1 when it fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .experiment import ConfigError, load_config, run_experiment, to_csv
from .greedy import baseline_decompose, greedy_decompose, greedy_decompose_weighted
from .instance import ReplacementInstance
from .io import (
    FormatError,
    decomposition_from_dict,
    decomposition_to_dict,
    dumps,
    format_faults,
    format_graph,
    instance_to_dict,
    parse_faults,
    parse_graph,
    read_text,
)
from .lowerbound import gen_glued, gen_single_odd, half_arc_min_fault
from .oracle import FaultOracle, restorability_frontier, restorable_check, verify_decomposition
from .poly import PolyDecomposer

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_instance(args) -> ReplacementInstance:
    g = parse_graph(read_text(args.graph))
    F = parse_faults(read_text(args.faults), g)
    for name in ("s", "t"):
        v = getattr(args, name)
        if not 0 <= v < g.n:
            raise UsageError(f"--{name} {v} is outside [0, {g.n})")
    return ReplacementInstance.build(g, F, args.s, args.t)


def cmd_decompose(args) -> int:
    inst = _load_instance(args)
    if not 1 <= args.k <= max(inst.f, 1) or (inst.f == 0 and args.algo != "baseline"):
        raise UsageError(f"--k {args.k} out of range [1, {inst.f}]")
    interleaved = args.weighted
    if args.algo == "baseline":
        if interleaved:
            raise UsageError("baseline has no interleaved form")
        d = baseline_decompose(inst, args.k)
        budget = d.budget
    else:
        budget = inst.f // args.k
        if args.algo == "greedy":
            d = (greedy_decompose_weighted if interleaved else greedy_decompose)(inst, budget)
        else:
            dec = PolyDecomposer(inst)
            d = (dec.decompose_weighted if interleaved else dec.decompose)(args.k, args.linear_scan)
    report = verify_decomposition(inst, d, budget)
    payload = decomposition_to_dict(
        d, algorithm=args.algo, k=args.k, pi=list(inst.pi), verdict=report.to_dict()
    )
    _emit(dumps(payload), args.out)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_verify(args) -> int:
    g = parse_graph(read_text(args.graph))
    F = parse_faults(read_text(args.faults), g)
    try:
        obj = json.loads(read_text(args.decomposition))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{args.decomposition}: {exc}") from None
    d = decomposition_from_dict(obj)
    if not d.boundaries:
        raise FormatError("decomposition has no boundaries")
    s = args.s if args.s is not None else d.boundaries[0]
    t = args.t if args.t is not None else d.boundaries[-1]
    if "pi" in obj:
        inst = ReplacementInstance(g, F, s, t, obj["pi"])
    else:
        inst = ReplacementInstance.build(g, F, s, t)
    budget = args.budget if args.budget is not None else obj.get("budget")
    if budget is None:
        raise UsageError("no --budget given and none recorded in the decomposition")
    report = verify_decomposition(inst, d, budget)
    _emit(dumps(report.to_dict()), args.out)
    for c in report.failures():
        print(f"FAIL {c.name}: {c.detail}", file=sys.stderr)
    return EXIT_PASS if report.passed else EXIT_FAIL


def _lowerbound_instance(args):
    if args.odd:
        if args.copies != 1:
            raise UsageError("--odd supports a single copy")
        return gen_single_odd(args.g)
    return gen_glued(args.g, args.copies)


def cmd_lowerbound(args) -> int:
    lbi = _lowerbound_instance(args)
    inst = lbi.instance
    per_copy = min(lbi.per_copy_f())
    q = 2 * lbi.copies
    r = args.r if args.r is not None else per_copy - 2
    if r < 0:
        raise UsageError(f"r = {r} is negative; pass --r")
    oracle = FaultOracle(inst)
    verdict = restorable_check(inst, q, r, oracle)
    frontier = restorability_frontier(inst, q + 1, oracle)
    payload = {
        "g": lbi.g_param,
        "copies": lbi.copies,
        "n": inst.g.n,
        "f": inst.f,
        "per_copy_f": lbi.per_copy_f(),
        "half_arc_min_fault": [half_arc_min_fault(lbi, i, oracle) for i in range(len(lbi.half_arcs))],
        "frontier": {str(i + 1): v for i, v in enumerate(frontier)},
        **verdict.to_dict(),
    }
    _emit(dumps(payload), args.out)
    return EXIT_PASS


def cmd_gen(args) -> int:
    lbi = _lowerbound_instance(args)
    inst = lbi.instance
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "graph.txt").write_text(format_graph(inst.g), encoding="utf-8")
    (out / "faults.txt").write_text(format_faults(inst.faults), encoding="utf-8")
    meta = instance_to_dict(
        inst,
        g_params=list(lbi.g_params),
        half_arcs=[list(a) for a in lbi.half_arcs],
        per_copy_faults=[sorted(list(e) for e in F) for F in lbi.per_copy_faults],
        labels=[list(x) for x in lbi.labels],
    )
    (out / "instance.json").write_text(dumps(meta), encoding="utf-8")
    print(f"wrote {out}/graph.txt, faults.txt, instance.json (n={inst.g.n}, f={inst.f}, s={inst.s}, t={inst.t})")
    return EXIT_PASS


def cmd_experiment(args) -> int:
    raw = {}
    if args.config:
        try:
            raw = json.loads(read_text(args.config))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{args.config}: {exc}") from None
    if args.seed is not None:
        raw = {**raw, "seed": args.seed}
    cfg = load_config(raw)
    report = run_experiment(cfg)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.json").write_text(dumps(report), encoding="utf-8")
        (out / "report.csv").write_text(to_csv(report), encoding="utf-8")
        s = report["summary"]
        print(f"{s['records']} records, {s['failures']} failures -> {out}/report.json, report.csv")
    else:
        sys.stdout.write(dumps(report))
    return EXIT_PASS if report["summary"]["failures"] == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="faultdecomp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_args(p, need_st=True):
        p.add_argument("--graph", required=True, help="edge-list file")
        p.add_argument("--faults", required=True, help="fault edge file")
        p.add_argument("--s", type=int, required=need_st)
        p.add_argument("--t", type=int, required=need_st)

    p = sub.add_parser("decompose", help="decompose the replacement path of an instance")
    instance_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=["greedy", "poly", "baseline"], default="poly")
    p.add_argument("--weighted", action="store_true", help="interleaved subpath/edge form")
    p.add_argument("--linear-scan", action="store_true", help="poly: scan boundaries linearly")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="check a decomposition JSON against an instance")
    instance_args(p, need_st=False)
    p.add_argument("--decomposition", required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    for name, func, helptext in (
        ("lowerbound", cmd_lowerbound, "exact restorability check on a lower-bound instance"),
        ("gen", cmd_gen, "write lower-bound instance files"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--copies", type=int, default=1)
        p.add_argument("--odd", action="store_true", help="drop one chord for an odd fault count")
        if name == "lowerbound":
            p.add_argument("--r", type=int, help="fault budget (default: per-copy f - 2)")
            p.add_argument("--out")
        else:
            p.add_argument("--out", required=True, help="output directory")
        p.set_defaults(func=func)

    p = sub.add_parser("experiment", help="run a seeded sweep")
    p.add_argument("--config", help="JSON config (defaults apply to missing keys)")
    p.add_argument("--seed", type=int)
    p.add_argument("--out", help="directory for report.json and report.csv")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        for problem in exc.problems:
            print(f"config error: {problem}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

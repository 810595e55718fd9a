"""Command-line entry point: ``satpart <solve|check|reduce|map|generate|bench> ...``.

Exit status of ``solve`` and ``check``: 0 = YES/valid, 1 = NO/invalid,
2 = error (a JSON error object is printed).
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .cexpr import eval_cexpr, family_expr, parse_cexpr
from .cw import solve_cw
from .graph import (CapacityError, Family, FscInstance, Graph, InputError,
                    generate_family, is_balanced, is_valid_fsc_solution)
from .io import (SCHEMA, parse_graph_file, parse_mmo_file, parse_orientation, partition_from_json,
                 serialize_instance, serialize_orientation, witness_dict)
from .nd import solve_nd
from .oracle import brute_force
from .reductions import (ReductionMap, check_orientation, lift_fs_solution, orientation_to_partition,
                         partition_to_orientation, project_fsc_solution, reduce_fsc_to_fs,
                         reduce_mmo_to_fsc)

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2
ENGINES = ("brute", "nd", "cw")


@dataclass
class SolveRequest:
    engine: str
    graph_path: Optional[str] = None
    expr_path: Optional[str] = None
    balanced: bool = False
    output: str = "json"
    verify: bool = True
    cap: Optional[int] = None
    labels: Optional[int] = None

    def validate(self) -> None:
        if self.engine not in ENGINES:
            raise InputError(f"unknown engine {self.engine!r}")
        if self.engine == "cw" and not self.expr_path:
            raise InputError("engine cw needs --expr")
        if self.engine != "cw" and not self.graph_path:
            raise InputError(f"engine {self.engine} needs a graph file")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def run(req: SolveRequest) -> tuple[int, dict]:
    """Dispatch one solve request; returns (exit status, JSON-ready report)."""
    try:
        req.validate()
        stats: dict = {}
        t0 = time.perf_counter()
        if req.engine == "cw":
            expr = parse_cexpr(_read(req.expr_path), req.labels)
            inst = FscInstance(eval_cexpr(expr).graph)
            witness = solve_cw(expr, req.balanced, stats)
        else:
            inst = parse_graph_file(_read(req.graph_path))
            if req.engine == "nd":
                if not inst.is_plain:
                    raise InputError("engine nd solves plain instances only (no tri/sq/pair lines)")
                witness = solve_nd(inst.graph, req.balanced, stats)
            else:
                witness = brute_force(inst, req.balanced, req.cap, stats)
        elapsed = time.perf_counter() - t0
    except CapacityError as exc:
        return EXIT_ERROR, _error("capacity", exc)
    except (InputError, OSError) as exc:
        return EXIT_ERROR, _error("input", exc)

    if witness is not None and req.verify:
        ok = is_valid_fsc_solution(inst, witness) and (not req.balanced or is_balanced(witness))
        if not ok:
            return EXIT_ERROR, _error("verification", RuntimeError("engine witness failed the checker"))
    report = {
        "schema": SCHEMA,
        "engine": req.engine,
        "balanced": req.balanced,
        "n": inst.graph.n,
        "answer": "YES" if witness is not None else "NO",
        "witness": witness_dict(witness) if witness is not None else None,
        "verified": bool(req.verify and witness is not None),
        "stats": stats,
        "wall_time_s": round(elapsed, 6),
    }
    return (EXIT_YES if witness is not None else EXIT_NO), report


def _error(kind: str, exc: Exception) -> dict:
    return {"schema": SCHEMA, "error": {"kind": kind, "message": str(exc)}}


def _emit(report: dict, fmt: str = "json") -> None:
    if fmt == "plain" and "answer" in report:
        print(report["answer"])
        if report["witness"]:
            print("V1:", *report["witness"]["V1"])
            print("V2:", *report["witness"]["V2"])
    else:
        print(json.dumps(report, indent=1, default=str))


def _write(text: str, path: Optional[str]) -> None:
    if path and path != "-":
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    req = SolveRequest(engine=args.engine, graph_path=args.graph, expr_path=args.expr,
                       balanced=args.balanced, output=args.format, verify=args.verify,
                       cap=args.cap, labels=args.labels)
    status, report = run(req)
    _emit(report, req.output)
    return status


def cmd_check(args) -> int:
    if args.what == "partition":
        inst = parse_graph_file(_read(args.instance))
        p = partition_from_json(_read(args.witness), inst.graph.n)
        ok = is_valid_fsc_solution(inst, p) and (not args.balanced or is_balanced(p))
    else:
        mmo = parse_mmo_file(_read(args.instance))
        o = parse_orientation(_read(args.witness))
        ok = check_orientation(mmo, o)
    print(json.dumps({"schema": SCHEMA, "valid": ok}))
    return EXIT_YES if ok else EXIT_NO


def cmd_reduce(args) -> int:
    if args.kind == "mmo-to-fsc":
        inst, rmap = reduce_mmo_to_fsc(parse_mmo_file(_read(args.input)))
    else:
        inst, rmap = reduce_fsc_to_fs(parse_graph_file(_read(args.input)))
    _write(serialize_instance(inst), args.output)
    if args.names:
        Path(args.names).write_text(rmap.to_json())
    return 0


def cmd_map(args) -> int:
    if args.kind == "orientation-to-partition":
        mmo = parse_mmo_file(_read(args.mmo))
        reduced, rmap = reduce_mmo_to_fsc(mmo)
        if args.names:
            rmap = ReductionMap.from_json(_read(args.names))
        p = orientation_to_partition(mmo, parse_orientation(_read(args.orientation)), rmap, reduced)
        print(json.dumps({"schema": SCHEMA, "witness": witness_dict(p)}))
    elif args.kind == "partition-to-orientation":
        mmo = parse_mmo_file(_read(args.mmo))
        reduced, _ = reduce_mmo_to_fsc(mmo)
        rmap = ReductionMap.from_json(_read(args.names))
        p = partition_from_json(_read(args.witness), reduced.graph.n)
        sys.stdout.write(serialize_orientation(partition_to_orientation(mmo, rmap, p, reduced)))
    else:
        fsc = parse_graph_file(_read(args.fsc))
        fs, rmap = reduce_fsc_to_fs(fsc)
        if args.kind == "project":
            p = project_fsc_solution(fsc, fs, partition_from_json(_read(args.witness), fs.graph.n))
        else:
            if args.names:
                rmap = ReductionMap.from_json(_read(args.names))
            p = lift_fs_solution(fsc, fs, rmap, partition_from_json(_read(args.witness), fsc.graph.n))
        print(json.dumps({"schema": SCHEMA, "witness": witness_dict(p)}))
    return 0


def cmd_generate(args) -> int:
    if args.family == "random":
        if len(args.sizes) != 1:
            raise InputError("random takes one size (vertex count)")
        rng = random.Random(args.seed)
        n = args.sizes[0]
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < args.p])
        _write(serialize_instance(g), args.output)
    elif args.expr:
        _write(str(family_expr(args.family, args.sizes)) + "\n", args.output)
    else:
        _write(serialize_instance(generate_family(args.family, args.sizes)), args.output)
    return 0


BENCH_FAMILIES = [
    ("complete", [6]), ("star", [6]), ("cycle", [8]), ("path", [8]),
    ("complete_bipartite", [3, 4]), ("complete_bipartite", [4, 4]),
    ("complete_multipartite", [2, 2, 2]),
]


def bench_families(engines=ENGINES, balanced: bool = False) -> list[dict]:
    rows = []
    for fam, sizes in BENCH_FAMILIES:
        g = generate_family(fam, sizes)
        row = {"family": f"{fam}{sizes}", "n": g.n}
        for eng in engines:
            t0 = time.perf_counter()
            if eng == "brute":
                w = brute_force(g, balanced)
            elif eng == "nd":
                w = solve_nd(g, balanced)
            else:
                w = solve_cw(family_expr(fam, sizes), balanced)
            row[eng] = ("YES" if w is not None else "NO", time.perf_counter() - t0)
        rows.append(row)
    return rows


def cmd_bench(args) -> int:
    engines = tuple(args.engines.split(","))
    rows = bench_families(engines, args.balanced)
    header = f"{'instance':34} {'n':>3} " + " ".join(f"{e:>14}" for e in engines)
    print(header)
    print("-" * len(header))
    for row in rows:
        cells = " ".join(f"{row[e][0]:>4} {row[e][1] * 1e3:8.2f}ms" for e in engines)
        print(f"{row['family']:34} {row['n']:>3} {cells}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="satpart", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="decide (balanced) satisfactory partition")
    sp.add_argument("graph", nargs="?", help="graph/instance file ('-' for stdin)")
    sp.add_argument("--engine", choices=ENGINES, default="nd")
    sp.add_argument("--expr", help="c-expression file (engine cw)")
    sp.add_argument("--labels", type=int, help="label count of the expression (default: largest used)")
    sp.add_argument("--balanced", action="store_true")
    sp.add_argument("--format", choices=("json", "plain"), default="json")
    sp.add_argument("--verify", action=argparse.BooleanOptionalAction, default=True,
                    help="re-check any witness with the independent checker")
    sp.add_argument("--cap", type=int, help="brute-force vertex cap (env SATPART_BRUTE_CAP)")
    sp.set_defaults(func=cmd_solve)

    cp = sub.add_parser("check", help="validate a witness")
    cp.add_argument("what", choices=("partition", "orientation"))
    cp.add_argument("instance", help="instance file (graph format, or MMO format for orientation)")
    cp.add_argument("witness", help="witness JSON, or orientation file")
    cp.add_argument("--balanced", action="store_true")
    cp.set_defaults(func=cmd_check)

    rp = sub.add_parser("reduce", help="build a reduced instance")
    rp.add_argument("kind", choices=("mmo-to-fsc", "fsc-to-fs"))
    rp.add_argument("input")
    rp.add_argument("-o", "--output")
    rp.add_argument("--names", help="write the gadget name table (JSON) here")
    rp.set_defaults(func=cmd_reduce)

    mp = sub.add_parser("map", help="translate solutions across a reduction")
    msub = mp.add_subparsers(dest="kind", required=True)
    m1 = msub.add_parser("orientation-to-partition")
    m1.add_argument("mmo")
    m1.add_argument("orientation")
    m1.add_argument("--names")
    m2 = msub.add_parser("partition-to-orientation")
    m2.add_argument("mmo")
    m2.add_argument("names")
    m2.add_argument("witness")
    m3 = msub.add_parser("project", help="FS witness -> FSC witness")
    m3.add_argument("fsc")
    m3.add_argument("witness")
    m4 = msub.add_parser("lift", help="FSC witness -> FS witness")
    m4.add_argument("fsc")
    m4.add_argument("witness")
    m4.add_argument("--names")
    mp.set_defaults(func=cmd_map)

    gp = sub.add_parser("generate", help="emit a bundled family graph or c-expression")
    gp.add_argument("family", choices=[f.value for f in Family] + ["random"])
    gp.add_argument("sizes", type=int, nargs="+")
    gp.add_argument("--expr", action="store_true", help="emit the bundled c-expression instead")
    gp.add_argument("--p", type=float, default=0.5, help="edge probability (random)")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("-o", "--output")
    gp.set_defaults(func=cmd_generate)

    bp = sub.add_parser("bench", help="time engines on bundled instances")
    bp.add_argument("--suite", choices=("families",), default="families")
    bp.add_argument("--engines", default=",".join(ENGINES))
    bp.add_argument("--balanced", action="store_true")
    bp.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(json.dumps(_error("capacity", exc)))
    except (InputError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(json.dumps(_error("input", exc)))
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

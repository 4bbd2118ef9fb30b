"""Command line front end and the line-oriented instance format.

Format (1-based vertex ids)::

    c comment
    p wed <n> <m>
    e <i> <j>
    w <i> <weight or inf>

Vertices without a ``w`` line get weight 1.

Exit codes: 0 solved / valid, 2 input error, 3 no finite-weight e.d. (or an
invalid set under ``verify``), 4 induced P6 found by ``--check-p6`` or
``check-p6``, 5 class violation met while solving.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import InstanceFormatError
from .graph import INF, Graph, Instance, Verdict, members, verify_ed
from .oracle import KINDS, brute_force_wed, gen_instance
from .recognition import find_induced_p6
from .solver import SolverReport, SolverStats, solve_wed

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NO_ED = 3
EXIT_NOT_P6_FREE = 4
EXIT_CLASS_VIOLATION = 5


def parse_instance(text: str) -> Instance:
    n = None
    m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weights: dict[int, int | float] = {}

    def vertex(token: str, lineno: int) -> int:
        try:
            v = int(token)
        except ValueError:
            raise InstanceFormatError(f"bad vertex id {token!r}", lineno) from None
        if not 1 <= v <= n:
            raise InstanceFormatError(f"vertex {v} out of range 1..{n}", lineno)
        return v - 1

    for lineno, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise InstanceFormatError("second header line", lineno)
            if len(parts) != 4 or parts[1] != "wed":
                raise InstanceFormatError("header must read 'p wed <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise InstanceFormatError("header counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise InstanceFormatError("header counts must be nonnegative", lineno)
            continue
        if n is None:
            raise InstanceFormatError("missing 'p wed' header before data", lineno)
        if tag == "e":
            if len(parts) != 3:
                raise InstanceFormatError("edge line must read 'e <i> <j>'", lineno)
            u, v = vertex(parts[1], lineno), vertex(parts[2], lineno)
            if u == v:
                raise InstanceFormatError(f"self-loop at vertex {u + 1}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InstanceFormatError(f"duplicate edge {u + 1} {v + 1}", lineno)
            seen.add(key)
            edges.append(key)
        elif tag == "w":
            if len(parts) != 3:
                raise InstanceFormatError("weight line must read 'w <i> <weight>'", lineno)
            v = vertex(parts[1], lineno)
            if v in weights:
                raise InstanceFormatError(f"second weight for vertex {v + 1}", lineno)
            if parts[2].lower() == "inf":
                weights[v] = INF
            else:
                try:
                    x = int(parts[2])
                except ValueError:
                    raise InstanceFormatError(f"bad weight {parts[2]!r}", lineno) from None
                if x < 0:
                    raise InstanceFormatError(f"negative weight for vertex {v + 1}", lineno)
                weights[v] = x
        else:
            raise InstanceFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise InstanceFormatError("missing 'p wed' header")
    if len(edges) != m:
        raise InstanceFormatError(f"header announces {m} edges, found {len(edges)}")
    return Instance(Graph(n, edges), tuple(weights.get(v, 1) for v in range(n)))


def format_instance(inst: Instance, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p wed {inst.n} {inst.graph.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in inst.graph.edges())
    for v, w in enumerate(inst.weights):
        if w != 1:
            lines.append(f"w {v + 1} {'inf' if w == INF else w}")
    return "\n".join(lines) + "\n"


def report_dict(report: SolverReport) -> dict:
    out: dict = {"status": report.status}
    if report.solution is not None:
        out["weight"] = report.solution.total_weight
        out["vertices"] = [v + 1 for v in report.solution.vertices]
    if report.detail:
        out["detail"] = report.detail
    s = report.stats
    out["stats"] = {
        "min_degree": s.min_degree,
        "branches": s.branches,
        "anchor_branches": s.anchor_branches,
        "reductions": s.reductions,
        "wall_ms": round(s.wall_ms, 3),
    }
    return out


def verdict_dict(verdict: Verdict) -> dict:
    if verdict.valid:
        return {"status": "valid", "weight": verdict.total_weight}
    out = {"status": "invalid", "witness": verdict.witness + 1, "count": verdict.count}
    if verdict.reason in ("infinite_weight", "outside"):
        out["reason"] = verdict.reason
    return out


def emit_report(report: SolverReport | Verdict, as_json: bool = False) -> str:
    data = verdict_dict(report) if isinstance(report, Verdict) else report_dict(report)
    if as_json:
        return json.dumps(data)
    if data["status"] == "solved":
        verts = " ".join(map(str, data["vertices"]))
        text = f"solved weight {data['weight']}\nvertices {verts}"
    elif data["status"] == "valid":
        text = f"valid weight {data['weight']}"
    elif data["status"] == "invalid":
        text = f"invalid witness {data['witness']} count {data['count']}"
        if "reason" in data:
            text += f" ({data['reason']})"
    else:
        text = data["status"]
        if "detail" in data:
            text += f": {data['detail']}"
    if "stats" in data:
        text += "\n" + " ".join(f"{k}={v}" for k, v in data["stats"].items())
    return text


def _parse_set(text: str, n: int) -> int:
    mask = 0
    for token in filter(None, (t.strip() for t in text.split(","))):
        v = int(token)
        if not 1 <= v <= n:
            raise InstanceFormatError(f"vertex {v} out of range 1..{n}")
        mask |= 1 << (v - 1)
    return mask


def _read_instance(args) -> Instance:
    if getattr(args, "gen", None):
        return gen_instance(
            args.gen, args.n, args.p, args.seed, tuple(args.weights), args.inf_fraction
        )
    if args.input is None:
        raise InstanceFormatError("no input given (path, '-' or --gen)")
    if args.input == "-":
        return parse_instance(sys.stdin.read())
    with open(args.input, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _print_witness(path, as_json: bool) -> None:
    verts = [v + 1 for v in path]
    if as_json:
        print(json.dumps({"status": "not_p6_free", "witness": verts}))
    else:
        print("induced P6: " + " ".join(map(str, verts)))


def _verify(inst: Instance, vertices: str, as_json: bool) -> int:
    verdict = verify_ed(inst, _parse_set(vertices, inst.n))
    print(emit_report(verdict, as_json))
    return EXIT_OK if verdict else EXIT_NO_ED


def run_solve(args) -> int:
    inst = _read_instance(args)
    if args.verify_only is not None:
        return _verify(inst, args.verify_only, args.json)
    if args.check_p6:
        path = find_induced_p6(inst.graph)
        if path is not None:
            _print_witness(path, args.json)
            return EXIT_NOT_P6_FREE
    if args.oracle:
        sol = brute_force_wed(inst)
        report = SolverReport("solved" if sol else "no_ed", sol, SolverStats())
    else:
        report = solve_wed(inst, workers=args.parallel)
    print(emit_report(report, args.json))
    return {"solved": EXIT_OK, "no_ed": EXIT_NO_ED}.get(report.status, EXIT_CLASS_VIOLATION)


def run_oracle(args) -> int:
    args.verify_only, args.check_p6, args.oracle, args.parallel = None, False, True, None
    return run_solve(args)


def run_verify(args) -> int:
    return _verify(_read_instance(args), args.set, args.json)


def run_check_p6(args) -> int:
    path = find_induced_p6(_read_instance(args).graph)
    if path is not None:
        _print_witness(path, args.json)
        return EXIT_NOT_P6_FREE
    print(json.dumps({"status": "p6_free"}) if args.json else "P6-free")
    return EXIT_OK


def run_gen(args) -> int:
    inst = gen_instance(
        args.kind, args.n, args.p, args.seed, tuple(args.weights), args.inf_fraction
    )
    text = format_instance(inst, f"{args.kind} n={args.n} p={args.p} seed={args.seed}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_gen_options(p: argparse.ArgumentParser, default_seed: int) -> None:
    p.add_argument("--n", type=int, default=10, help="number of vertices")
    p.add_argument("--p", type=float, default=0.3, help="edge (or join) probability")
    p.add_argument("--seed", type=int, default=default_seed)
    p.add_argument("--weights", type=int, nargs=2, default=(1, 100), metavar=("LO", "HI"))
    p.add_argument("--inf-fraction", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get("WED_SEED", "0"))
    parser = argparse.ArgumentParser(
        prog="wedp6", description="Minimum-weight efficient domination on P6-free graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", nargs="?", help="instance file, or '-' for stdin")
        p.add_argument("--input", dest="input_opt", help="instance file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    solve = with_input(sub.add_parser("solve", help="solve an instance"))
    solve.add_argument("--check-p6", action="store_true", help="reject inputs with an induced P6")
    solve.add_argument("--verify-only", metavar="SET", help="comma-separated vertices to verify")
    solve.add_argument("--oracle", action="store_true", help="use the brute-force solver")
    solve.add_argument("--parallel", type=int, metavar="WORKERS", help="worker processes")
    solve.add_argument("--gen", choices=KINDS, help="solve a generated instance instead")
    _add_gen_options(solve, default_seed)
    solve.set_defaults(func=run_solve)

    oracle = with_input(sub.add_parser("oracle", help="solve by exhaustive exact cover"))
    oracle.set_defaults(func=run_oracle, gen=None)

    verify = with_input(sub.add_parser("verify", help="check a vertex set"))
    verify.add_argument("--set", required=True, help="comma-separated 1-based vertices")
    verify.set_defaults(func=run_verify, gen=None)

    check = with_input(sub.add_parser("check-p6", help="look for an induced P6"))
    check.set_defaults(func=run_check_p6, gen=None)

    gen = sub.add_parser("gen", help="write a seeded random instance")
    gen.add_argument("kind", choices=KINDS)
    gen.add_argument("-o", "--output", help="output path (default stdout)")
    _add_gen_options(gen, default_seed)
    gen.set_defaults(func=run_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "input_opt", None):
        args.input = args.input_opt
    try:
        return args.func(args)
    except (InstanceFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
